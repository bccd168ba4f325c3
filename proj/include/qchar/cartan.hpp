#pragma once

#include <string>
#include <vector>

namespace qchar {

// Cartan data of an indecomposable finite type, nodes numbered 1..rank.
// Numbering follows the worked examples this code reproduces:
//   B_n: nodes 1..n-1 long (d=2), node n short (d=1)
//   C_n: nodes 1..n-1 short, node n long
//   F_4: nodes 1,2 short, nodes 3,4 long
//   G_2: node 1 long (d=3), node 2 short
struct CartanData {
  std::string label;  // normalized, e.g. "B3"
  char family = 'A';
  int rank = 0;
  std::vector<std::vector<int>> C;  // Cartan matrix, 0-based storage
  std::vector<int> d;               // symmetrizer diagonal, min d_i = 1
  std::vector<std::vector<int>> B;  // B = DC, symmetric
  int t = 1;                        // max d_i
  int dual_coxeter = 0;
  std::vector<int> nu;              // involution of nodes, 0-based storage

  int n() const { return rank; }
  // 1-based accessors
  int c(int i, int j) const { return C[i - 1][j - 1]; }
  int b(int i, int j) const { return B[i - 1][j - 1]; }
  int di(int i) const { return d[i - 1]; }
  int nu_of(int i) const { return nu[i - 1] + 1; }
};

// Parses labels like "A3", "b2", "G2" (case-insensitive letter, rank).
// Throws std::invalid_argument on unknown type or rank out of range.
CartanData cartan_data(const std::string& type_label);

// All positive roots as coordinate vectors in the simple-root basis,
// computed by saturation along root strings from the simple roots.
std::vector<std::vector<int>> positive_roots(const CartanData& cd);

}  // namespace qchar
