#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qchar/cartan.hpp"

namespace qchar {

struct Vertex {
  int node = 0;   // 1-based
  int shift = 0;
  auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v);

// Quiver on labelled vertices; arrows form a multiset. No loops; mutation
// keeps it 2-cycle free. Frozen vertices are exempt from mutation.
struct LabeledQuiver {
  std::vector<Vertex> vertices;                   // sorted, unique
  std::map<std::pair<Vertex, Vertex>, int> arrows;  // multiplicity >= 1
  std::set<Vertex> frozen;

  bool has_vertex(const Vertex& v) const;
  void add_arrow(const Vertex& a, const Vertex& b, int mult = 1);
  int arrow_mult(const Vertex& a, const Vertex& b) const;
  // Arrow multiset restricted to pairs with both endpoints non-frozen.
  std::map<std::pair<Vertex, Vertex>, int> mutable_part() const;
  std::string to_dot(const std::string& name = "quiver") const;
};

// One pass of the mutation sequence: tn column picks, each listing the
// non-frozen vertices of the picked column from top to bottom.
struct MutationSchedule {
  struct Slot {
    int node = 0;
    std::vector<Vertex> vertices;  // top to bottom
  };
  std::vector<Slot> slots;
  int pass_length = 0;  // mutations per pass
  std::vector<Vertex> flat() const;
};

// Fomin-Zelevinsky mutation of the arrow multiset at a non-frozen vertex:
// compose u -> v -> w, reverse the arrows at v, cancel the 2-cycles the
// compositions formed, drop arrows between frozen vertices. Variables are
// untouched; Seed::mutate_at layers the exchange relation on top of this.
void mutate_arrows(LabeledQuiver& quiver, const Vertex& v);

// Parity of node-i vertices of W (the relabelled component of the doubly
// infinite quiver): (i,r) in W iff r = w_parity(cd,i) mod 2. Anchored to the
// published figures, propagated along Dynkin edges elsewhere.
int w_parity(const CartanData& cd, int i);
// Parity of node-i vertices of V = psi^{-1}(W).
int v_parity(const CartanData& cd, int i);

// Frozen guard band width.
int guard_band(const CartanData& cd);

// Default working depth for `passes` schedule passes and KR level `k_max`.
int default_depth(const CartanData& cd, int passes, int k_max);

// Semi-infinite quiver G^- truncated to shifts in [depth, 0]: vertices
// (i,r) in W^-, vertical arrows (i,r) -> (i, r+b_ii) and oblique arrows
// (i,r) -> (j, r + b_ij - d_i + d_j), all within the window. Vertices with
// shift < depth + guard_band are frozen.
LabeledQuiver build_g_minus(const CartanData& cd, int depth);

// Same graph with vertex labels pulled back along psi: (i,r) -> (i, r - d_i).
LabeledQuiver build_gamma_minus(const CartanData& cd, int depth);

// Column-ordered mutation schedule for one pass over build_g_minus(cd,depth):
// columns are residue classes mod b_ii within each node; repeatedly pick the
// column with maximal label (ties: smallest node), emit it top to bottom,
// decrement its label by b_ii; tn picks form one pass.
MutationSchedule mutation_schedule(const CartanData& cd, int depth);

// The unique k with 0 < k*b_ii - |r| <= b_ii; position of (i,r) in its column.
int column_index(const CartanData& cd, int i, int r);

}  // namespace qchar
