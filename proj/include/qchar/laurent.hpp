#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qchar/cartan.hpp"

namespace qchar {

using Coeff = boost::multiprecision::cpp_int;

// Variable families: Y_{i,r} (spectral-weight variables), z_{i,r} (initial
// cluster variables), v_{i,r} (F-polynomial variables), p_{i,r} (principal
// coefficients).
enum class Family : std::uint8_t { Y = 0, Z = 1, V = 2, P = 3 };

struct VarId {
  Family family = Family::Y;
  int node = 0;
  int shift = 0;
  auto operator<=>(const VarId&) const = default;
};

std::string to_string(const VarId& v);

struct VarExp {
  VarId id;
  int e = 0;
  bool operator==(const VarExp&) const = default;
};

// Sorted by id, no zero exponents.
using Mono = std::vector<VarExp>;

Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);
Mono mono_pow(const Mono& a, int e);
int mono_degree(const Mono& a);
bool is_dominant(const Mono& m);      // all exponents >= 0
bool is_antidominant(const Mono& m);  // all exponents <= 0

// Display/canonical term order: higher total degree first; ties by the first
// differing variable in increasing VarId order, larger exponent first.
// Multiplication-compatible, so leading terms multiply.
bool mono_before(const Mono& a, const Mono& b);

struct Term {
  Mono mono;
  Coeff coeff;
  bool operator==(const Term&) const = default;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const Coeff& c);
  static LaurentPoly variable(const VarId& v, int exp = 1);
  static LaurentPoly monomial(Mono m, Coeff c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  LaurentPoly pow(unsigned e) const;

  // Product with a single term; term order is multiplication-invariant, so
  // this is linear and needs no re-sort.
  LaurentPoly scaled(const Term& t) const;

  // Exact division; throws std::domain_error when the quotient is not a
  // Laurent polynomial (detected by coefficient indivisibility or the step
  // cap; exact quotients finish in exactly one step per quotient term).
  static LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den,
                               std::size_t max_steps = 4'000'000);

  // Construct from term list (any order, duplicates allowed); canonicalizes.
  static LaurentPoly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;  // canonical order, nonzero coefficients
  void canonicalize();
};

// Serial reference product and the parallel kernel (identical results; the
// kernel splits the pairwise-product table across threads).
LaurentPoly mul_serial(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul_parallel(const LaurentPoly& a, const LaurentPoly& b);
void set_parallel_multiplication(bool on);
bool parallel_multiplication();

// A_{i,r} for (i,r) in V.
LaurentPoly a_monomial(const CartanData& cd, int i, int r);
// The single inverse monomial A_{i,r}^{-1}.
LaurentPoly a_monomial_inverse(const CartanData& cd, int i, int r);

// z_{i,r} -> prod_{k>=0, r+k*b_ii<=0} Y_{i,r+k*b_ii}; other families pass
// through unchanged.
LaurentPoly z_substitution(const CartanData& cd, const LaurentPoly& p);

// Drop every monomial containing some Y_{j,s} with s > 0.
LaurentPoly truncate_to_Yminus(const LaurentPoly& p);

// Shift the spectral parameter of every variable by p.
LaurentPoly shift_spectral(const LaurentPoly& poly, int p);

// Sum of coefficients (requires nonnegative coefficients).
Coeff dimension(const LaurentPoly& p);

std::vector<Term> dominant_terms(const LaurentPoly& p);
std::vector<Term> antidominant_terms(const LaurentPoly& p);
// The unique dominant (resp. antidominant) monomial; throws if not unique.
Mono highest_monomial(const LaurentPoly& p);
Mono lowest_monomial(const LaurentPoly& p);

std::string to_text(const LaurentPoly& p);
std::string to_latex(const LaurentPoly& p);
std::string to_json(const LaurentPoly& p);
LaurentPoly from_json(const std::string& text);

}  // namespace qchar
