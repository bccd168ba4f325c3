#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "qchar/cartan.hpp"
#include "qchar/laurent.hpp"

using namespace qchar;

namespace {

VarId Y(int i, int r) { return {Family::Y, i, r}; }
VarId Z(int i, int r) { return {Family::Z, i, r}; }

LaurentPoly ymono(std::vector<std::pair<std::pair<int, int>, int>> exps, Coeff c = 1) {
  Mono m;
  for (auto& [ir, e] : exps) m.push_back({Y(ir.first, ir.second), e});
  std::sort(m.begin(), m.end(), [](const VarExp& a, const VarExp& b) { return a.id < b.id; });
  return LaurentPoly::monomial(std::move(m), c);
}

// Deterministic random polynomials over a fixed variable pool.
LaurentPoly random_poly(std::mt19937& rng, bool z_family = false) {
  static const std::vector<std::pair<int, int>> pool = {
      {1, -1}, {1, -3}, {1, -5}, {2, 0}, {2, -2}, {2, -4}};
  const int nterms = 1 + static_cast<int>(rng() % 5);
  std::vector<Term> terms;
  for (int t = 0; t < nterms; ++t) {
    Mono m;
    for (const auto& [i, r] : pool) {
      int e = static_cast<int>(rng() % 7) - 3;
      if (e == 0) continue;
      // B2 W-parities: node 1 odd, node 2 even
      m.push_back({z_family ? Z(i, r) : Y(i, r), e});
    }
    std::sort(m.begin(), m.end(), [](const VarExp& a, const VarExp& b) { return a.id < b.id; });
    Coeff c = static_cast<int>(rng() % 19) - 9;
    if (c == 0) c = 1;
    terms.push_back({std::move(m), std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("term order reproduces the published character layout") {
  LaurentPoly chi = ymono({{{2, -8}, 1}}) + ymono({{{1, -7}, 1}, {{2, -6}, -1}}) +
                    ymono({{{1, -3}, -1}, {{2, -4}, 1}}) + ymono({{{2, -2}, -1}});
  CHECK(to_text(chi) == "Y[2,-8] + Y[1,-7]Y[2,-6]^-1 + Y[1,-3]^-1 Y[2,-4] + Y[2,-2]^-1");
  CHECK(to_latex(chi) ==
        "Y_{2,-8} + Y_{1,-7}Y_{2,-6}^{-1} + Y_{1,-3}^{-1}Y_{2,-4} + Y_{2,-2}^{-1}");
}

TEST_CASE("rendering corner cases") {
  CHECK(to_text(LaurentPoly{}) == "0");
  CHECK(to_text(LaurentPoly::constant(1)) == "1");
  CHECK(to_text(LaurentPoly::constant(-3)) == "-3");
  auto p = LaurentPoly::constant(2) - ymono({{{1, -1}, 2}}, 5);
  CHECK(to_text(p) == "-5*Y[1,-1]^2 + 2");
  CHECK(to_text(ymono({{{1, -1}, 1}}) - ymono({{{2, 0}, 1}})) == "Y[1,-1] - Y[2,0]");
}

TEST_CASE("canonical form: no zero coefficients, stable equality") {
  auto a = ymono({{{1, -1}, 1}});
  auto zero = a - a;
  CHECK(zero.is_zero());
  CHECK(zero == LaurentPoly{});
  auto sum = LaurentPoly::from_terms({{Mono{{Y(1, -1), 1}}, 2}, {Mono{{Y(1, -1), 1}}, 3}});
  CHECK(sum.size() == 1);
  CHECK(sum.terms()[0].coeff == 5);
}

TEST_CASE("ring laws on random inputs") {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 40; ++iter) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a * LaurentPoly::constant(1) == a);
    CHECK((a * LaurentPoly{}).is_zero());
  }
}

TEST_CASE("serial and parallel products agree") {
  std::mt19937 rng(777);
  for (int iter = 0; iter < 10; ++iter) {
    auto a = random_poly(rng), b = random_poly(rng);
    auto big_a = (a * a + b) * (a + LaurentPoly::constant(3));
    auto big_b = b * b + a;
    CHECK(mul_serial(big_a, big_b) == mul_parallel(big_a, big_b));
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(999);
  for (int iter = 0; iter < 25; ++iter) {
    auto a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(LaurentPoly::div_exact(a * b, b) == a);
  }
  SUBCASE("detects inexact quotients") {
    auto a = random_poly(rng), b = random_poly(rng);
    auto num = a * b + LaurentPoly::constant(1);
    CHECK_THROWS_AS(LaurentPoly::div_exact(num, b, 5000), std::domain_error);
    CHECK_THROWS_AS(LaurentPoly::div_exact(a, LaurentPoly{}), std::domain_error);
  }
  SUBCASE("monomial division is unrestricted in a Laurent ring") {
    auto m = ymono({{{1, -1}, -4}, {{2, 0}, 2}});
    auto q = LaurentPoly::div_exact(LaurentPoly::constant(6), m * LaurentPoly::constant(3));
    CHECK(q == ymono({{{1, -1}, 4}, {{2, 0}, -2}}, 2));
  }
}

TEST_CASE("coefficients stay exact at large magnitude") {
  auto one_plus_y = LaurentPoly::constant(1) + ymono({{{1, -1}, 1}});
  auto p = one_plus_y.pow(128);
  CHECK(p.size() == 129);
  // independent Pascal-recurrence oracle
  std::vector<Coeff> row = {1};
  for (int n = 0; n < 128; ++n) {
    std::vector<Coeff> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k];
      next[k + 1] += row[k];
    }
    row = std::move(next);
  }
  for (const auto& t : p.terms()) {
    int e = t.mono.empty() ? 0 : t.mono[0].e;
    CHECK(t.coeff == row[static_cast<std::size_t>(e)]);
  }
  CHECK(row[64].str() == "23951146041928082866135587776380551750");
}

TEST_CASE("a_monomial matches the published expressions") {
  SUBCASE("A3") {
    auto cd = cartan_data("A3");
    auto inv = a_monomial_inverse(cd, 2, -3);
    CHECK(inv == ymono({{{2, -4}, -1}, {{2, -2}, -1}, {{1, -3}, 1}, {{3, -3}, 1}}));
  }
  SUBCASE("G2 long node") {
    auto cd = cartan_data("G2");
    auto inv = a_monomial_inverse(cd, 1, -10);
    CHECK(inv ==
          ymono({{{1, -7}, -1}, {{1, -13}, -1}, {{2, -8}, 1}, {{2, -10}, 1}, {{2, -12}, 1}}));
  }
  SUBCASE("G2 short node") {
    auto cd = cartan_data("G2");
    auto inv = a_monomial_inverse(cd, 2, -11);
    CHECK(inv == ymono({{{2, -10}, -1}, {{2, -12}, -1}, {{1, -11}, 1}}));
  }
  SUBCASE("B2 long node") {
    auto cd = cartan_data("B2");
    auto a = a_monomial(cd, 1, -5);
    CHECK(a == ymono({{{1, -7}, 1}, {{1, -3}, 1}, {{2, -6}, -1}, {{2, -4}, -1}}));
  }
  SUBCASE("parity is enforced") {
    auto cd = cartan_data("B2");
    CHECK_THROWS_AS(a_monomial(cd, 1, -4), std::invalid_argument);
    CHECK_NOTHROW(a_monomial(cd, 1, -3));
    CHECK_NOTHROW(a_monomial(cd, 2, -3));
    CHECK_THROWS_AS(a_monomial(cd, 2, -4), std::invalid_argument);
  }
}

TEST_CASE("z substitution") {
  auto cd = cartan_data("B2");
  SUBCASE("published single-variable images") {
    auto z24 = LaurentPoly::variable(Z(2, -4));
    CHECK(z_substitution(cd, z24) == ymono({{{2, -4}, 1}, {{2, -2}, 1}, {{2, 0}, 1}}));
    auto z19 = LaurentPoly::variable(Z(1, -9));
    CHECK(z_substitution(cd, z19) == ymono({{{1, -9}, 1}, {{1, -5}, 1}, {{1, -1}, 1}}));
    CHECK(z_substitution(cd, LaurentPoly::constant(1)).is_one());
  }
  SUBCASE("negative exponents invert the image") {
    auto z = LaurentPoly::variable(Z(2, -2), -1);
    CHECK(z_substitution(cd, z) == ymono({{{2, -2}, -1}, {{2, 0}, -1}}));
  }
  SUBCASE("ring homomorphism") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 15; ++iter) {
      auto a = random_poly(rng, true), b = random_poly(rng, true);
      CHECK(z_substitution(cd, a * b) == z_substitution(cd, a) * z_substitution(cd, b));
      CHECK(z_substitution(cd, a + b) == z_substitution(cd, a) + z_substitution(cd, b));
    }
  }
  SUBCASE("rejects variables outside the negative window") {
    CHECK_THROWS_AS(z_substitution(cd, LaurentPoly::variable(Z(2, 2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(z_substitution(cd, LaurentPoly::variable(Z(1, -2))),
                    std::invalid_argument);
  }
}

TEST_CASE("truncation to nonpositive spectral parameters") {
  auto chi = ymono({{{2, -4}, 1}}) + ymono({{{1, -3}, 1}, {{2, -2}, -1}}) +
             ymono({{{1, 1}, -1}, {{2, 0}, 1}}) + ymono({{{2, 2}, -1}});
  auto tr = truncate_to_Yminus(chi);
  CHECK(tr == ymono({{{2, -4}, 1}}) + ymono({{{1, -3}, 1}, {{2, -2}, -1}}));
  CHECK(tr.size() == 2);
  CHECK(truncate_to_Yminus(tr) == tr);
  CHECK(truncate_to_Yminus(ymono({{{1, -3}, 1}})) == ymono({{{1, -3}, 1}}));
}

TEST_CASE("dimension sums coefficients") {
  auto p = ymono({{{1, -1}, 1}}, 3) + ymono({{{2, 0}, -2}}, 4);
  CHECK(dimension(p) == 7);
  CHECK(dimension(LaurentPoly::constant(1)) == 1);
  CHECK(dimension(LaurentPoly{}) == 0);
  CHECK_THROWS_AS(dimension(-p), std::domain_error);
}

TEST_CASE("dominance and extremal monomials") {
  CHECK(is_dominant(Mono{}));
  CHECK(is_dominant(Mono{{Y(1, -1), 2}}));
  CHECK(!is_dominant(Mono{{Y(1, -3), 1}, {Y(2, -2), -1}}));
  CHECK(is_antidominant(Mono{{Y(2, -2), -1}}));

  LaurentPoly chi = ymono({{{2, -8}, 1}}) + ymono({{{1, -7}, 1}, {{2, -6}, -1}}) +
                    ymono({{{1, -3}, -1}, {{2, -4}, 1}}) + ymono({{{2, -2}, -1}});
  CHECK(highest_monomial(chi) == Mono{{Y(2, -8), 1}});
  CHECK(lowest_monomial(chi) == Mono{{Y(2, -2), -1}});
  CHECK_THROWS_AS(highest_monomial(chi + ymono({{{1, -1}, 1}})), std::domain_error);
}

TEST_CASE("spectral shift") {
  auto p = ymono({{{2, -8}, 1}}) + ymono({{{1, -7}, 1}, {{2, -6}, -1}});
  auto s = shift_spectral(p, 4);
  CHECK(s == ymono({{{2, -4}, 1}}) + ymono({{{1, -3}, 1}, {{2, -2}, -1}}));
  CHECK(shift_spectral(s, -4) == p);
}

TEST_CASE("json round trip") {
  std::mt19937 rng(31415);
  for (int iter = 0; iter < 10; ++iter) {
    auto p = random_poly(rng) - random_poly(rng);
    CHECK(from_json(to_json(p)) == p);
  }
  auto one = LaurentPoly::constant(1);
  CHECK(to_json(one) == R"({"terms":[{"coeff":"1","exps":[]}]})");
  CHECK(from_json(to_json(LaurentPoly{})).is_zero());
}
