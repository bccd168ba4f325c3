#pragma once

#include <functional>
#include <map>
#include <utility>

#include "qchar/laurent.hpp"
#include "qchar/quiver.hpp"

namespace qchar {

// Sparse g-vector indexed by quiver vertices.
using GVector = std::map<Vertex, int>;

// A cluster seed on the window quiver. Variables are Laurent polynomials in
// the initial z-variables (and, when enabled, principal coefficients p).
// Principal coefficients are realized as extra frozen vertices, one per
// mutable vertex (i,r), encoded as (-i,r) and carrying the variable p_{i,r}
// with a single arrow p -> (i,r); the exchange binomials then separate
// additions without any dedicated bookkeeping.
class Seed {
 public:
  Seed() = default;
  Seed(CartanData cd, LabeledQuiver quiver, std::map<Vertex, LaurentPoly> vars,
       bool principal);

  const CartanData& cartan() const { return cd_; }
  const LabeledQuiver& quiver() const { return quiver_; }
  bool principal() const { return principal_; }
  const std::map<Vertex, LaurentPoly>& vars() const { return vars_; }
  const LaurentPoly& var(const Vertex& v) const;
  // Variable after the change of variables z -> Y (principal p pass through).
  LaurentPoly var_y(const Vertex& v) const;

  std::size_t mutation_count() const { return mutations_; }

  // Exchange at a non-frozen vertex: x' = (prod in + prod out)/x, exact by
  // the Laurent phenomenon; then rewire arrows by the standard rule.
  void mutate_at(const Vertex& v);

  // Apply `passes` repetitions of the schedule; `after` (optional) runs after
  // every single mutation with the vertex just mutated.
  void run_schedule(const MutationSchedule& schedule, int passes = 1,
                    const std::function<void(const Vertex&)>& after = nullptr);

 private:
  CartanData cd_;
  LabeledQuiver quiver_;
  std::map<Vertex, LaurentPoly> vars_;
  bool principal_ = false;
  std::size_t mutations_ = 0;
};

inline bool is_principal_vertex(const Vertex& v) { return v.node < 0; }

// Seed on build_g_minus(cd, depth) with vars z_{i,r}; depth < 0.
Seed initial_seed(const CartanData& cd, int depth, bool principal = false);

// Functional wrappers over the in-place members.
Seed mutate(Seed seed, const Vertex& v);
Seed run_schedule(Seed seed, const MutationSchedule& schedule, int passes = 1);

// yhat_{i,r} = prod_{(i,r)->(j,s)} z_{j,s} * prod_{(j,s)->(i,r)} z_{j,s}^{-1}
// over the window arrows of the seed's quiver (missing neighbours above the
// window contribute 1). On a principal-coefficient seed the frame arrow
// contributes the factor p_{i,r}. Without that factor, z_substitution turns
// yhat_{i,r} into a_monomial_inverse(cd, i, r - d_i).
LaurentPoly yhat_monomial(const Seed& seed, const Vertex& v);

// Decompose a variable of a principal-coefficient seed as x = z^g * F where
// F is the polynomial in the p-variables renamed to the v-family
// (p_{i,r} -> v_{i,r-d_i}). F has constant term 1; the p-free term of x is
// unique with coefficient 1.
std::pair<GVector, LaurentPoly> g_and_F(const Seed& seed, const Vertex& v);

// Snapshot of the whole seed (vertices, arrows, variables) in JSON.
std::string seed_to_json(const Seed& seed);

}  // namespace qchar
