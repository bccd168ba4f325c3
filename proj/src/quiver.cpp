#include "qchar/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qchar {

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.node) + "," + std::to_string(v.shift) + ")";
}

bool LabeledQuiver::has_vertex(const Vertex& v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

void LabeledQuiver::add_arrow(const Vertex& a, const Vertex& b, int mult) {
  if (a == b) throw std::logic_error("loop arrow at " + to_string(a));
  arrows[{a, b}] += mult;
}

int LabeledQuiver::arrow_mult(const Vertex& a, const Vertex& b) const {
  auto it = arrows.find({a, b});
  return it == arrows.end() ? 0 : it->second;
}

std::map<std::pair<Vertex, Vertex>, int> LabeledQuiver::mutable_part() const {
  std::map<std::pair<Vertex, Vertex>, int> out;
  for (const auto& [pair, mult] : arrows) {
    if (frozen.count(pair.first) || frozen.count(pair.second)) continue;
    out[pair] = mult;
  }
  return out;
}

std::string LabeledQuiver::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  auto id = [](const Vertex& v) {
    std::string s = std::to_string(v.node) + "_" + std::to_string(v.shift);
    for (auto& c : s)
      if (c == '-') c = 'm';
    return s;
  };
  for (const auto& v : vertices) {
    os << "  " << id(v) << " [label=\"" << to_string(v) << "\"";
    if (frozen.count(v)) os << " shape=box";
    os << "];\n";
  }
  for (const auto& [pair, mult] : arrows) {
    os << "  " << id(pair.first) << " -> " << id(pair.second);
    if (mult > 1) os << " [label=\"" << mult << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<Vertex> MutationSchedule::flat() const {
  std::vector<Vertex> out;
  for (const auto& s : slots) out.insert(out.end(), s.vertices.begin(), s.vertices.end());
  return out;
}

void mutate_arrows(LabeledQuiver& quiver, const Vertex& v) {
  if (!quiver.has_vertex(v)) throw std::invalid_argument("mutate: unknown vertex");
  if (quiver.frozen.count(v)) throw std::invalid_argument("mutate: frozen vertex");

  std::vector<std::pair<Vertex, int>> in, out;
  for (const auto& [key, mult] : quiver.arrows) {
    if (key.second == v) in.push_back({key.first, mult});
    if (key.first == v) out.push_back({key.second, mult});
  }

  auto& arrows = quiver.arrows;
  auto both_frozen = [&](const Vertex& u, const Vertex& w) {
    return quiver.frozen.count(u) && quiver.frozen.count(w);
  };
  // u -> v -> w composes to u -> w; arrows between frozen vertices never
  // enter an exchange or a later composition, so those pairs are skipped
  // (their pre-existing arrows stay as built)
  for (const auto& [u, a] : in)
    for (const auto& [w, b] : out) {
      if (u == w) throw std::logic_error("mutate: 2-cycle through mutation vertex");
      if (both_frozen(u, w)) continue;
      arrows[{u, w}] += a * b;
    }
  // reverse arrows at v
  for (const auto& [u, a] : in) arrows.erase({u, v});
  for (const auto& [w, b] : out) arrows.erase({v, w});
  for (const auto& [u, a] : in) arrows[{v, u}] += a;
  for (const auto& [w, b] : out) arrows[{w, v}] += b;
  // cancel the 2-cycles the compositions may have formed
  for (const auto& [u, a] : in)
    for (const auto& [w, b] : out) {
      if (both_frozen(u, w)) continue;
      auto f = arrows.find({u, w}), g = arrows.find({w, u});
      if (f == arrows.end() || g == arrows.end()) continue;
      const int c = std::min(f->second, g->second);
      f->second -= c;
      g->second -= c;
      if (f->second == 0) arrows.erase(f);
      if (g->second == 0) arrows.erase(g);
    }
}

namespace {
int mod2(int x) { return ((x % 2) + 2) % 2; }
}  // namespace

// Parities of the component of the doubly infinite quiver relabelled as W:
// node-i vertices sit at shifts = rho_i (mod 2). Anchored to the published
// quiver pictures for A_n, B_2, B_3, C_3, F_4, G_2; remaining families follow
// the unique propagation rho_j = rho_i + b_ij + d_i + d_j (mod 2) along edges
// from the same anchors.
int w_parity(const CartanData& cd, int i) {
  const int n = cd.rank;
  if (i < 1 || i > n) throw std::invalid_argument("w_parity: bad node");
  switch (cd.family) {
    case 'A':
      return n == 1 ? 0 : mod2(i);
    case 'B':
      return i < n ? 1 : 0;
    case 'C':
      return i == n ? mod2(n - 1) : mod2(i - 1);
    case 'D':
      return i <= n - 2 ? mod2(i) : mod2(n - 1);
    case 'E': {
      static const int e6[] = {1, 0, 0, 1, 0, 1};
      static const int e7[] = {1, 0, 0, 1, 0, 1, 0};
      static const int e8[] = {1, 0, 0, 1, 0, 1, 0, 1};
      const int* tab = n == 6 ? e6 : n == 7 ? e7 : e8;
      return tab[i - 1];
    }
    case 'F': {
      static const int f4[] = {0, 1, 0, 0};
      return f4[i - 1];
    }
    case 'G':
      return i == 1 ? 1 : 0;
  }
  throw std::logic_error("w_parity: unreachable");
}

int v_parity(const CartanData& cd, int i) { return mod2(w_parity(cd, i) + cd.di(i)); }

int guard_band(const CartanData& cd) {
  int b_max = 0;
  for (int i = 1; i <= cd.rank; ++i) b_max = std::max(b_max, cd.b(i, i));
  return 2 * cd.t * cd.dual_coxeter + 2 * b_max;
}

int default_depth(const CartanData& cd, int passes, int k_max) {
  int b_max = 0;
  for (int i = 1; i <= cd.rank; ++i) b_max = std::max(b_max, cd.b(i, i));
  return -(2 * cd.t * passes + 2 * cd.t * cd.dual_coxeter + b_max * (2 * k_max + 2));
}

LabeledQuiver build_g_minus(const CartanData& cd, int depth) {
  if (depth >= 0) throw std::invalid_argument("build_g_minus: depth must be negative");
  LabeledQuiver q;
  const int g = guard_band(cd);
  for (int i = 1; i <= cd.rank; ++i) {
    const int p = w_parity(cd, i);
    for (int r = 0; r >= depth; --r) {
      if (mod2(r) != p) continue;
      Vertex v{i, r};
      q.vertices.push_back(v);
      if (r < depth + g) q.frozen.insert(v);
    }
  }
  std::sort(q.vertices.begin(), q.vertices.end());
  auto in_window = [&](const Vertex& v) { return v.shift <= 0 && v.shift >= depth; };
  for (const auto& v : q.vertices) {
    const int i = v.node;
    Vertex up{i, v.shift + cd.b(i, i)};
    if (in_window(up)) q.add_arrow(v, up);
    for (int j = 1; j <= cd.rank; ++j) {
      if (j == i || cd.b(i, j) == 0) continue;
      Vertex w{j, v.shift + cd.b(i, j) - cd.di(i) + cd.di(j)};
      if (in_window(w)) q.add_arrow(v, w);
    }
  }
  return q;
}

LabeledQuiver build_gamma_minus(const CartanData& cd, int depth) {
  LabeledQuiver g = build_g_minus(cd, depth);
  auto relabel = [&](const Vertex& v) { return Vertex{v.node, v.shift - cd.di(v.node)}; };
  LabeledQuiver out;
  for (const auto& v : g.vertices) out.vertices.push_back(relabel(v));
  std::sort(out.vertices.begin(), out.vertices.end());
  for (const auto& [pair, mult] : g.arrows)
    out.arrows[{relabel(pair.first), relabel(pair.second)}] = mult;
  for (const auto& v : g.frozen) out.frozen.insert(relabel(v));
  return out;
}

MutationSchedule mutation_schedule(const CartanData& cd, int depth) {
  LabeledQuiver q = build_g_minus(cd, depth);
  // Columns: per node, residue classes of the shift mod b_ii.
  std::map<std::pair<int, int>, std::vector<Vertex>> cols;
  for (const auto& v : q.vertices) {
    const int b = cd.b(v.node, v.node);
    const int res = ((v.shift % b) + b) % b;
    cols[{v.node, res}].push_back(v);
  }
  std::map<std::pair<int, int>, int> label;
  for (auto& [key, verts] : cols) {
    std::sort(verts.begin(), verts.end(),
              [](const Vertex& a, const Vertex& b) { return a.shift > b.shift; });
    label[key] = verts.front().shift;
  }
  MutationSchedule sched;
  const int picks = cd.t * cd.rank;
  for (int s = 0; s < picks; ++s) {
    std::pair<int, int> best;
    bool have = false;
    for (const auto& [key, lab] : label) {
      if (!have || lab > label[best] || (lab == label[best] && key.first < best.first)) {
        best = key;
        have = true;
      }
    }
    MutationSchedule::Slot slot;
    slot.node = best.first;
    for (const auto& v : cols[best])
      if (!q.frozen.count(v)) slot.vertices.push_back(v);
    sched.pass_length += static_cast<int>(slot.vertices.size());
    sched.slots.push_back(std::move(slot));
    label[best] -= cd.b(best.first, best.first);
  }
  return sched;
}

int column_index(const CartanData& cd, int i, int r) {
  if (i < 1 || i > cd.rank || r > 0 || mod2(r) != w_parity(cd, i))
    throw std::invalid_argument("column_index: vertex not in W^-");
  const int b = cd.b(i, i);
  const int k = (-r) / b + 1;
  return k;
}

}  // namespace qchar
