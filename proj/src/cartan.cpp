#include "qchar/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace qchar {

namespace {

void check_rank(char fam, int n) {
  bool ok = false;
  switch (fam) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok)
    throw std::invalid_argument("rank out of range for type " + std::string(1, fam) +
                                std::to_string(n));
}

// Unordered edges of the Dynkin diagram; simply-laced families plus the
// marked pair of the non-simply-laced ones.
std::vector<std::pair<int, int>> edges(char fam, int n) {
  std::vector<std::pair<int, int>> e;
  switch (fam) {
    case 'A':
    case 'B':
    case 'C':
    case 'F':
    case 'G':
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      break;
    case 'D':
      for (int i = 1; i <= n - 2; ++i) e.push_back({i, i + 1});
      e.push_back({n - 2, n});
      break;
    case 'E':
      e = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < n; ++i) e.push_back({i, i + 1});
      break;
  }
  return e;
}

std::vector<int> symmetrizer(char fam, int n) {
  std::vector<int> d(n, 1);
  switch (fam) {
    case 'B':
      for (int i = 0; i < n - 1; ++i) d[i] = 2;
      break;
    case 'C': d[n - 1] = 2; break;
    case 'F': d[2] = d[3] = 2; break;
    case 'G': d[0] = 3; break;
    default: break;
  }
  return d;
}

int dual_coxeter_number(char fam, int n) {
  switch (fam) {
    case 'A': return n + 1;
    case 'B': return 2 * n - 1;
    case 'C': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case 'F': return 9;
    case 'G': return 4;
  }
  return 0;
}

std::vector<int> nu_table(char fam, int n) {
  std::vector<int> nu(n);
  for (int i = 0; i < n; ++i) nu[i] = i;
  if (fam == 'A') {
    for (int i = 0; i < n; ++i) nu[i] = n - 1 - i;
  } else if (fam == 'D' && n % 2 == 1) {
    std::swap(nu[n - 2], nu[n - 1]);
  } else if (fam == 'E' && n == 6) {
    nu[0] = 5; nu[5] = 0;  // 1 <-> 6
    nu[2] = 4; nu[4] = 2;  // 3 <-> 5
  }
  return nu;
}

}  // namespace

CartanData cartan_data(const std::string& type_label) {
  std::string s;
  for (char ch : type_label)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2) throw std::invalid_argument("bad type label: " + type_label);
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int n = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad type label: " + type_label);
    n = 10 * n + (s[i] - '0');
  }
  check_rank(fam, n);

  CartanData cd;
  cd.family = fam;
  cd.rank = n;
  cd.label = std::string(1, fam) + std::to_string(n);
  cd.d = symmetrizer(fam, n);
  cd.t = *std::max_element(cd.d.begin(), cd.d.end());
  cd.dual_coxeter = dual_coxeter_number(fam, n);
  cd.nu = nu_table(fam, n);

  cd.C.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cd.C[i][i] = 2;
  // c_ij = 2(a_i,a_j)/(a_i,a_i); with (a_i,a_i) = 2 d_i and (a_i,a_j) = -max(d_i,d_j)
  // on a diagram edge, c_ij = -max(d_i,d_j)/d_i.
  for (auto [i, j] : edges(fam, n)) {
    int m = std::max(cd.d[i - 1], cd.d[j - 1]);
    cd.C[i - 1][j - 1] = -m / cd.d[i - 1];
    cd.C[j - 1][i - 1] = -m / cd.d[j - 1];
  }
  cd.B.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cd.B[i][j] = cd.d[i] * cd.C[i][j];
  return cd;
}

std::vector<std::vector<int>> positive_roots(const CartanData& cd) {
  int n = cd.rank;
  std::set<std::vector<int>> roots;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0);
    a[i] = 1;
    roots.insert(a);
  }
  // Saturate: beta + a_i is a root iff the a_i-string through beta has
  // s = r - <beta, a_i^vee> >= 1, where r is the depth of the string below.
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& beta : std::vector<std::vector<int>>(roots.begin(), roots.end())) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * cd.C[i][j];
        int r = 0;
        std::vector<int> down = beta;
        for (;;) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
          if (zero || roots.count(down)) {
            ++r;
            if (zero) break;
          } else {
            break;
          }
        }
        if (r - pairing >= 1) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) grew = true;
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace qchar
