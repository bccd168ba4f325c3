#include "qchar/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "qchar/quiver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qchar {

namespace {
const char* family_letter(Family f) {
  switch (f) {
    case Family::Y:
      return "Y";
    case Family::Z:
      return "z";
    case Family::V:
      return "v";
    case Family::P:
      return "p";
  }
  return "?";
}
}  // namespace

std::string to_string(const VarId& v) {
  return std::string(family_letter(v.family)) + "[" + std::to_string(v.node) + "," +
         std::to_string(v.shift) + "]";
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].id < b[j].id) {
      out.push_back(a[i++]);
    } else if (b[j].id < a[i].id) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].e + b[j].e;
      if (e != 0) out.push_back({a[i].id, e});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

Mono mono_pow(const Mono& a, int e) {
  if (e == 0) return {};
  Mono out = a;
  for (auto& v : out) v.e *= e;
  return out;
}

Mono mono_div(const Mono& a, const Mono& b) { return mono_mul(a, mono_pow(b, -1)); }

int mono_degree(const Mono& a) {
  int d = 0;
  for (const auto& v : a) d += v.e;
  return d;
}

bool is_dominant(const Mono& m) {
  return std::all_of(m.begin(), m.end(), [](const VarExp& v) { return v.e >= 0; });
}

bool is_antidominant(const Mono& m) {
  return std::all_of(m.begin(), m.end(), [](const VarExp& v) { return v.e <= 0; });
}

namespace {
// Tie-break for equal total degrees: exponent vectors compared variable by
// variable, missing entries read as 0.
bool mono_lex_before(const Mono& a, const Mono& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].id == b[j].id) {
      if (a[i].e != b[j].e) return a[i].e > b[j].e;
      ++i;
      ++j;
    } else if (a[i].id < b[j].id) {
      return a[i].e > 0;
    } else {
      return 0 > b[j].e;
    }
  }
  if (i < a.size()) return a[i].e > 0;
  if (j < b.size()) return 0 > b[j].e;
  return false;
}
}  // namespace

bool mono_before(const Mono& a, const Mono& b) {
  const int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  return mono_lex_before(a, b);
}

LaurentPoly LaurentPoly::constant(const Coeff& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({Mono{}, c});
  return p;
}

LaurentPoly LaurentPoly::variable(const VarId& v, int exp) {
  LaurentPoly p;
  if (exp == 0) return constant(1);
  p.terms_.push_back({Mono{{v, exp}}, 1});
  return p;
}

LaurentPoly LaurentPoly::monomial(Mono m, Coeff c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.empty() && terms_[0].coeff == 1;
}

const Term& LaurentPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

void LaurentPoly::canonicalize() {
  std::vector<std::pair<int, std::size_t>> order(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) order[i] = {mono_degree(terms_[i].mono), i};
  std::sort(order.begin(), order.end(),
            [this](const std::pair<int, std::size_t>& x, const std::pair<int, std::size_t>& y) {
              if (x.first != y.first) return x.first > y.first;
              return mono_lex_before(terms_[x.second].mono, terms_[y.second].mono);
            });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [deg, i] : order) {
    Term& t = terms_[i];
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  merged.insert(merged.end(), terms_.begin(), terms_.end());
  merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(std::move(merged));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};
}  // namespace

void set_parallel_multiplication(bool on) { g_parallel.store(on); }
bool parallel_multiplication() { return g_parallel.load(); }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t var_mix(const VarId& id) {
  std::uint64_t k = (static_cast<std::uint64_t>(static_cast<std::uint8_t>(id.family)) << 56) ^
                    (static_cast<std::uint64_t>(static_cast<std::uint32_t>(id.node)) << 32) ^
                    static_cast<std::uint32_t>(id.shift);
  return splitmix64(k);
}

// h(m) = sum_e e * mix(id), so h(a*b) = h(a) + h(b): product hashes come from
// the factors' precomputed hashes instead of a walk over the product.
std::uint64_t mono_hash(const Mono& m) {
  std::uint64_t h = 0;
  for (const auto& v : m) h += static_cast<std::uint64_t>(static_cast<std::int64_t>(v.e)) * var_mix(v.id);
  return h;
}

struct HashedRef {
  const Mono* mono;
  std::uint64_t h;
};

struct MonoHash {
  using is_transparent = void;
  std::size_t operator()(const Mono& m) const { return mono_hash(m); }
  std::size_t operator()(const HashedRef& r) const { return r.h; }
};

struct MonoEq {
  using is_transparent = void;
  bool operator()(const Mono& a, const Mono& b) const { return a == b; }
  bool operator()(const HashedRef& a, const Mono& b) const { return *a.mono == b; }
  bool operator()(const Mono& a, const HashedRef& b) const { return a == *b.mono; }
};

using MonoMap = std::unordered_map<Mono, Coeff, MonoHash, MonoEq>;

void mono_mul_into(Mono& out, const Mono& a, const Mono& b) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].id < b[j].id) {
      out.push_back(a[i++]);
    } else if (b[j].id < a[i].id) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].e + b[j].e;
      if (e != 0) out.push_back({a[i].id, e});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
}

void accumulate_products(MonoMap& acc, const Term* ta, std::size_t na,
                         const std::vector<Term>& tb, const std::uint64_t* hb) {
  Mono scratch;
  for (std::size_t i = 0; i < na; ++i) {
    const std::uint64_t ha = mono_hash(ta[i].mono);
    for (std::size_t j = 0; j < tb.size(); ++j) {
      mono_mul_into(scratch, ta[i].mono, tb[j].mono);
      auto it = acc.find(HashedRef{&scratch, ha + hb[j]});
      if (it != acc.end())
        it->second += ta[i].coeff * tb[j].coeff;
      else
        acc.emplace(scratch, ta[i].coeff * tb[j].coeff);
    }
  }
}

std::vector<std::uint64_t> term_hashes(const std::vector<Term>& terms) {
  std::vector<std::uint64_t> h(terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j) h[j] = mono_hash(terms[j].mono);
  return h;
}

LaurentPoly collect(MonoMap&& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly mul_serial(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.scaled(a.leading());
  if (b.size() == 1) return a.scaled(b.leading());
  MonoMap acc;
  acc.reserve(a.size() + b.size());
  const auto hb = term_hashes(b.terms());
  accumulate_products(acc, a.terms().data(), a.size(), b.terms(), hb.data());
  return collect(std::move(acc));
}

LaurentPoly mul_parallel(const LaurentPoly& a, const LaurentPoly& b) {
#ifdef _OPENMP
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ta = a.terms();
  const std::size_t na = ta.size();
  if (na == 1 || b.size() == 1 || na * b.size() < 4096) return mul_serial(a, b);
  const auto hb = term_hashes(b.terms());
  MonoMap acc;
#pragma omp parallel
  {
    MonoMap local;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < static_cast<long long>(na); ++i)
      accumulate_products(local, ta.data() + i, 1, b.terms(), hb.data());
#pragma omp critical
    {
      for (auto& [m, c] : local) acc[m] += c;
    }
  }
  return collect(std::move(acc));
#else
  return mul_serial(a, b);
#endif
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  return g_parallel.load() ? mul_parallel(*this, o) : mul_serial(*this, o);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Term& t) const {
  if (t.coeff == 0) return {};
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& x : terms_) p.terms_.push_back({mono_mul(x.mono, t.mono), x.coeff * t.coeff});
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  if (e == 1) return *this;
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return result;
}

// Heap division: the remainder num - quotient*den is never materialized.  A
// priority queue tracks, for every quotient term, its next unmerged product
// with a divisor term; leading terms are consumed in strictly decreasing
// order, so inexactness surfaces as a coefficient failure or the step cap.
LaurentPoly LaurentPoly::div_exact(const LaurentPoly& num, const LaurentPoly& den,
                                   std::size_t max_steps) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& dterms = den.terms();
  const Term& dlead = dterms.front();

  struct Pending {
    Mono mono;       // q[qi].mono * den[dj].mono
    int deg;         // cached mono_degree(mono)
    std::size_t qi;  // quotient term index
    std::size_t dj;  // divisor term index
  };
  auto later = [](const Pending& x, const Pending& y) {
    if (x.deg != y.deg) return x.deg < y.deg;
    return mono_lex_before(y.mono, x.mono);
  };
  std::priority_queue<Pending, std::vector<Pending>, decltype(later)> heap(later);

  std::vector<int> ddeg(dterms.size());
  for (std::size_t j = 0; j < dterms.size(); ++j) ddeg[j] = mono_degree(dterms[j].mono);
  std::vector<Term> quotient;
  std::vector<int> qdeg;
  std::size_t np = 0;
  const auto& nterms = num.terms();
  std::size_t steps = 0;

  auto heap_reaches = [&](const Mono& m, int deg) {
    if (heap.empty()) return false;
    if (heap.top().deg != deg) return heap.top().deg > deg;
    return !mono_lex_before(m, heap.top().mono);
  };

  while (np < nterms.size() || !heap.empty()) {
    Mono m;
    int deg;
    Coeff c = 0;
    if (np < nterms.size()) {
      m = nterms[np].mono;
      deg = mono_degree(m);
      if (heap_reaches(m, deg)) {
        m = heap.top().mono;
        deg = heap.top().deg;
      }
    } else {
      m = heap.top().mono;
      deg = heap.top().deg;
    }
    if (np < nterms.size() && nterms[np].mono == m) c += nterms[np++].coeff;
    while (!heap.empty() && heap.top().deg == deg && heap.top().mono == m) {
      Pending p = heap.top();
      heap.pop();
      c -= quotient[p.qi].coeff * dterms[p.dj].coeff;
      if (++p.dj < dterms.size()) {
        p.mono = mono_mul(quotient[p.qi].mono, dterms[p.dj].mono);
        p.deg = qdeg[p.qi] + ddeg[p.dj];
        heap.push(std::move(p));
      }
    }
    if (c == 0) continue;
    if (++steps > max_steps) throw std::domain_error("inexact division: step cap exceeded");
    if (c % dlead.coeff != 0) throw std::domain_error("inexact division: leading coefficient");
    Term q{mono_div(m, dlead.mono), c / dlead.coeff};
    if (!quotient.empty() && !mono_before(quotient.back().mono, q.mono))
      throw std::domain_error("inexact division: quotient order violation");
    quotient.push_back(std::move(q));
    qdeg.push_back(deg - ddeg[0]);
    if (dterms.size() > 1)
      heap.push({mono_mul(quotient.back().mono, dterms[1].mono), qdeg.back() + ddeg[1],
                 quotient.size() - 1, 1});
  }
  return from_terms(std::move(quotient));
}

LaurentPoly a_monomial(const CartanData& cd, int i, int r) {
  if (i < 1 || i > cd.rank) throw std::invalid_argument("a_monomial: bad node");
  if (((r - v_parity(cd, i)) % 2 + 2) % 2 != 0)
    throw std::invalid_argument("a_monomial: (i,r) not in V");
  std::vector<Term> factors;
  Mono m;
  auto push = [&](int j, int s, int e) {
    m.push_back({VarId{Family::Y, j, s}, e});
    if (((s - w_parity(cd, j)) % 2 + 2) % 2 != 0)
      throw std::logic_error("a_monomial: index escaped W");
  };
  push(i, r - cd.di(i), 1);
  push(i, r + cd.di(i), 1);
  for (int j = 1; j <= cd.rank; ++j) {
    if (j == i || cd.c(j, i) == 0) continue;
    switch (cd.c(j, i)) {
      case -1:
        push(j, r, -1);
        break;
      case -2:
        push(j, r - 1, -1);
        push(j, r + 1, -1);
        break;
      case -3:
        push(j, r - 2, -1);
        push(j, r, -1);
        push(j, r + 2, -1);
        break;
      default:
        throw std::logic_error("a_monomial: unexpected Cartan entry");
    }
  }
  std::sort(m.begin(), m.end(), [](const VarExp& a, const VarExp& b) { return a.id < b.id; });
  return LaurentPoly::monomial(std::move(m));
}

LaurentPoly a_monomial_inverse(const CartanData& cd, int i, int r) {
  const LaurentPoly a = a_monomial(cd, i, r);
  return LaurentPoly::monomial(mono_pow(a.leading().mono, -1));
}

LaurentPoly z_substitution(const CartanData& cd, const LaurentPoly& p) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Mono img;
    for (const auto& v : t.mono) {
      if (v.id.family != Family::Z) {
        img = mono_mul(img, Mono{{v.id, v.e}});
        continue;
      }
      const int i = v.id.node, r = v.id.shift, b = cd.b(i, i);
      if (r > 0 || ((r - w_parity(cd, i)) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("z_substitution: variable outside W^-");
      Mono chain;
      for (int s = r; s <= 0; s += b) chain.push_back({VarId{Family::Y, i, s}, v.e});
      img = mono_mul(img, chain);
    }
    out.push_back({std::move(img), t.coeff});
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly truncate_to_Yminus(const LaurentPoly& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    bool keep = true;
    for (const auto& v : t.mono)
      if (v.id.family == Family::Y && v.id.shift > 0) {
        keep = false;
        break;
      }
    if (keep) out.push_back(t);
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly shift_spectral(const LaurentPoly& poly, int p) {
  std::vector<Term> out;
  out.reserve(poly.size());
  for (const auto& t : poly.terms()) {
    Mono m = t.mono;
    for (auto& v : m) v.id.shift += p;
    out.push_back({std::move(m), t.coeff});
  }
  return LaurentPoly::from_terms(std::move(out));
}

Coeff dimension(const LaurentPoly& p) {
  Coeff d = 0;
  for (const auto& t : p.terms()) {
    if (t.coeff < 0) throw std::domain_error("dimension: negative coefficient");
    d += t.coeff;
  }
  return d;
}

std::vector<Term> dominant_terms(const LaurentPoly& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (is_dominant(t.mono)) out.push_back(t);
  return out;
}

std::vector<Term> antidominant_terms(const LaurentPoly& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (is_antidominant(t.mono)) out.push_back(t);
  return out;
}

Mono highest_monomial(const LaurentPoly& p) {
  auto d = dominant_terms(p);
  if (d.size() != 1 || d[0].coeff != 1)
    throw std::domain_error("highest monomial: dominant monomial not unique");
  return d[0].mono;
}

Mono lowest_monomial(const LaurentPoly& p) {
  auto d = antidominant_terms(p);
  if (d.size() != 1 || d[0].coeff != 1)
    throw std::domain_error("lowest monomial: antidominant monomial not unique");
  return d[0].mono;
}

namespace {
std::string render(const LaurentPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& t : p.terms()) {
    Coeff c = t.coeff;
    if (first_term) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first_term = false;
    if (t.mono.empty()) {
      os << c.str();
      continue;
    }
    if (c != 1) os << c.str() << (latex ? " " : "*");
    bool prev_explicit_exp = false;
    for (std::size_t k = 0; k < t.mono.size(); ++k) {
      const auto& v = t.mono[k];
      if (k > 0 && prev_explicit_exp && !latex) os << " ";
      if (latex)
        os << family_letter(v.id.family) << "_{" << v.id.node << "," << v.id.shift << "}";
      else
        os << family_letter(v.id.family) << "[" << v.id.node << "," << v.id.shift << "]";
      prev_explicit_exp = (v.e != 1);
      if (v.e != 1) {
        if (latex)
          os << "^{" << v.e << "}";
        else
          os << "^" << v.e;
      }
    }
  }
  return os.str();
}

const char* family_json(Family f) {
  switch (f) {
    case Family::Y:
      return "Y";
    case Family::Z:
      return "z";
    case Family::V:
      return "v";
    case Family::P:
      return "principal";
  }
  return "?";
}

Family family_from_json(const std::string& s) {
  if (s == "Y") return Family::Y;
  if (s == "z") return Family::Z;
  if (s == "v") return Family::V;
  if (s == "principal") return Family::P;
  throw std::invalid_argument("unknown variable family: " + s);
}
}  // namespace

std::string to_text(const LaurentPoly& p) { return render(p, false); }
std::string to_latex(const LaurentPoly& p) { return render(p, true); }

std::string to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& v : t.mono)
      exps.push_back({{"family", family_json(v.id.family)},
                      {"node", v.id.node},
                      {"shift", v.id.shift},
                      {"e", v.e}});
    terms.push_back({{"coeff", t.coeff.str()}, {"exps", std::move(exps)}});
  }
  return nlohmann::json{{"terms", std::move(terms)}}.dump();
}

LaurentPoly from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Term> terms;
  for (const auto& jt : j.at("terms")) {
    Mono m;
    for (const auto& je : jt.at("exps"))
      m.push_back({VarId{family_from_json(je.at("family").get<std::string>()),
                         je.at("node").get<int>(), je.at("shift").get<int>()},
                   je.at("e").get<int>()});
    std::sort(m.begin(), m.end(), [](const VarExp& a, const VarExp& b) { return a.id < b.id; });
    terms.push_back({std::move(m), Coeff(jt.at("coeff").get<std::string>())});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace qchar
