#include "qchar/cluster.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace qchar {

Seed::Seed(CartanData cd, LabeledQuiver quiver, std::map<Vertex, LaurentPoly> vars,
           bool principal)
    : cd_(std::move(cd)),
      quiver_(std::move(quiver)),
      vars_(std::move(vars)),
      principal_(principal) {
  for (const auto& v : quiver_.vertices)
    if (!vars_.count(v)) throw std::invalid_argument("seed: vertex without variable");
}

const LaurentPoly& Seed::var(const Vertex& v) const {
  auto it = vars_.find(v);
  if (it == vars_.end()) throw std::invalid_argument("seed: unknown vertex");
  return it->second;
}

LaurentPoly Seed::var_y(const Vertex& v) const { return z_substitution(cd_, var(v)); }

void Seed::mutate_at(const Vertex& v) {
  if (!quiver_.has_vertex(v)) throw std::invalid_argument("mutate: unknown vertex");
  if (quiver_.frozen.count(v)) throw std::invalid_argument("mutate: frozen vertex");

  LaurentPoly in_prod = LaurentPoly::constant(1), out_prod = LaurentPoly::constant(1);
  for (const auto& [key, mult] : quiver_.arrows) {
    if (key.second == v) in_prod *= vars_.at(key.first).pow(static_cast<unsigned>(mult));
    if (key.first == v) out_prod *= vars_.at(key.second).pow(static_cast<unsigned>(mult));
  }
  LaurentPoly next = LaurentPoly::div_exact(in_prod + out_prod, vars_.at(v));

  mutate_arrows(quiver_, v);
  vars_.at(v) = std::move(next);
  ++mutations_;
}

void Seed::run_schedule(const MutationSchedule& schedule, int passes,
                        const std::function<void(const Vertex&)>& after) {
  for (int p = 0; p < passes; ++p)
    for (const auto& slot : schedule.slots)
      for (const auto& v : slot.vertices) {
        mutate_at(v);
        if (after) after(v);
      }
}

Seed initial_seed(const CartanData& cd, int depth, bool principal) {
  if (depth >= 0) throw std::invalid_argument("initial_seed: depth must be negative");
  LabeledQuiver q = build_g_minus(cd, depth);
  std::map<Vertex, LaurentPoly> vars;
  for (const auto& v : q.vertices)
    vars.emplace(v, LaurentPoly::variable({Family::Z, v.node, v.shift}));
  if (principal) {
    std::vector<Vertex> mut;
    for (const auto& v : q.vertices)
      if (!q.frozen.count(v)) mut.push_back(v);
    for (const auto& v : mut) {
      Vertex p{-v.node, v.shift};
      q.vertices.push_back(p);
      q.frozen.insert(p);
      q.add_arrow(v, p);
      vars.emplace(p, LaurentPoly::variable({Family::P, v.node, v.shift}));
    }
    std::sort(q.vertices.begin(), q.vertices.end());
  }
  return Seed(cd, std::move(q), std::move(vars), principal);
}

Seed mutate(Seed seed, const Vertex& v) {
  seed.mutate_at(v);
  return seed;
}

Seed run_schedule(Seed seed, const MutationSchedule& schedule, int passes) {
  seed.run_schedule(schedule, passes);
  return seed;
}

LaurentPoly yhat_monomial(const Seed& seed, const Vertex& v) {
  const auto& q = seed.quiver();
  if (!q.has_vertex(v)) throw std::invalid_argument("yhat_monomial: unknown vertex");
  if (q.frozen.count(v))
    throw std::invalid_argument("yhat_monomial: frozen vertex lacks neighbours");
  auto factor = [](const Vertex& u, int e) {
    if (is_principal_vertex(u)) return Mono{{VarId{Family::P, -u.node, u.shift}, e}};
    return Mono{{VarId{Family::Z, u.node, u.shift}, e}};
  };
  Mono m;
  for (const auto& [key, mult] : q.arrows) {
    if (key.first == v) m = mono_mul(m, factor(key.second, mult));
    if (key.second == v) m = mono_mul(m, factor(key.first, -mult));
  }
  return LaurentPoly::monomial(std::move(m));
}

std::pair<GVector, LaurentPoly> g_and_F(const Seed& seed, const Vertex& v) {
  if (!seed.principal())
    throw std::invalid_argument("g_and_F: seed lacks principal coefficients");
  const LaurentPoly& x = seed.var(v);

  const Term* gterm = nullptr;
  for (const auto& t : x.terms()) {
    bool pfree = std::none_of(t.mono.begin(), t.mono.end(), [](const VarExp& e) {
      return e.id.family == Family::P;
    });
    if (!pfree) continue;
    if (gterm) throw std::logic_error("g_and_F: p-free term not unique");
    gterm = &t;
  }
  if (!gterm || gterm->coeff != 1)
    throw std::logic_error("g_and_F: no p-free term with coefficient 1");

  GVector g;
  for (const auto& e : gterm->mono) {
    if (e.id.family != Family::Z) throw std::logic_error("g_and_F: stray family");
    g[{e.id.node, e.id.shift}] = e.e;
  }

  std::vector<Term> fterms;
  for (const auto& t : x.terms()) {
    Mono m;
    for (const auto& e : t.mono) {
      if (e.id.family == Family::Z) continue;
      if (e.id.family != Family::P) throw std::logic_error("g_and_F: stray family");
      m.push_back({VarId{Family::V, e.id.node, e.id.shift - seed.cartan().di(e.id.node)},
                   e.e});
    }
    std::sort(m.begin(), m.end(),
              [](const VarExp& a, const VarExp& b) { return a.id < b.id; });
    fterms.push_back({std::move(m), t.coeff});
  }
  return {std::move(g), LaurentPoly::from_terms(std::move(fterms))};
}

std::string seed_to_json(const Seed& seed) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : seed.quiver().vertices) {
    nlohmann::json jv;
    jv["node"] = v.node;
    jv["shift"] = v.shift;
    jv["frozen"] = seed.quiver().frozen.count(v) > 0;
    jv["var"] = nlohmann::json::parse(to_json(seed.var(v)));
    j["vertices"].push_back(std::move(jv));
  }
  j["arrows"] = nlohmann::json::array();
  for (const auto& [key, mult] : seed.quiver().arrows)
    j["arrows"].push_back({{"from", {key.first.node, key.first.shift}},
                           {"to", {key.second.node, key.second.shift}},
                           {"mult", mult}});
  return j.dump();
}

}  // namespace qchar
