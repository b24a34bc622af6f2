#include "qvira/poly2.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace qvira {

std::strong_ordering compare_monomials(const Monomial2& x, const Monomial2& y) {
  if (auto c = x.total_degree() <=> y.total_degree(); c != 0) return c;
  return x.e_q <=> y.e_q;
}

namespace {

bool precedes(const Monomial2& x, const Monomial2& y) { return compare_monomials(x, y) > 0; }

// Merges two sorted term lists, with `sign` applied to rhs coefficients.
std::vector<Poly2::Term> merge(const std::vector<Poly2::Term>& lhs, const std::vector<Poly2::Term>& rhs, int sign) {
  std::vector<Poly2::Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto i = lhs.begin();
  auto j = rhs.begin();
  while (i != lhs.end() || j != rhs.end()) {
    if (j == rhs.end() || (i != lhs.end() && precedes(i->mono, j->mono))) {
      out.push_back(*i++);
    } else if (i == lhs.end() || precedes(j->mono, i->mono)) {
      out.push_back({j->mono, sign > 0 ? Rational(j->coeff) : Rational(-j->coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly2::Poly2(long c) {
  if (c != 0) terms_.push_back({{}, Rational(c)});
}

Poly2::Poly2(const Rational& c) {
  if (c != 0) terms_.push_back({{}, c});
}

Poly2 Poly2::monomial(const Rational& c, Monomial2 m) {
  Poly2 p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly2 Poly2::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return precedes(x.mono, y.mono); });
  Poly2 p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Rational Poly2::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.back().mono == Monomial2{} ? terms_.back().coeff : Rational(0);
}

Monomial2 Poly2::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial2 m = terms_.front().mono;
  for (const auto& t : terms_) {
    m.e_q = std::min(m.e_q, t.mono.e_q);
    m.e_a = std::min(m.e_a, t.mono.e_a);
  }
  return m;
}

std::uint32_t Poly2::degree_q() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.e_q);
  return d;
}

std::uint32_t Poly2::degree_a() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.e_a);
  return d;
}

std::uint32_t Poly2::min_total_degree() const {
  // Terms are sorted by total degree descending.
  return terms_.empty() ? 0 : terms_.back().mono.total_degree();
}

Poly2 Poly2::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly2 p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly2 Poly2::times_monomial(const Rational& c, Monomial2 m) const {
  if (c == 0) return {};
  Poly2 p = *this;
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return p;
}

Poly2 Poly2::divided_by_monomial(Monomial2 m) const {
  Poly2 p = *this;
  for (auto& t : p.terms_) {
    assert(m.divides(t.mono));
    t.mono.e_q -= m.e_q;
    t.mono.e_a -= m.e_a;
  }
  return p;
}

Rational Poly2::evaluate(const Rational& q0, const Rational& a0) const {
  std::vector<Rational> qpow{Rational(1)};
  std::vector<Rational> apow{Rational(1)};
  Rational sum = 0;
  for (const auto& t : terms_) {
    while (qpow.size() <= t.mono.e_q) qpow.push_back(qpow.back() * q0);
    while (apow.size() <= t.mono.e_a) apow.push_back(apow.back() * a0);
    sum += t.coeff * qpow[t.mono.e_q] * apow[t.mono.e_a];
  }
  return sum;
}

Poly2 Poly2::operator-() const { return scaled(-1); }

Poly2& Poly2::operator+=(const Poly2& rhs) {
  terms_ = merge(terms_, rhs.terms_, +1);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly2 operator*(const Poly2& x, const Poly2& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (y.is_monomial()) return x.times_monomial(y.leading().coeff, y.leading().mono);
  if (x.is_monomial()) return y.times_monomial(x.leading().coeff, x.leading().mono);
  std::vector<Poly2::Term> prod;
  prod.reserve(x.terms().size() * y.terms().size());
  for (const auto& s : x.terms())
    for (const auto& t : y.terms()) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly2::from_terms(std::move(prod));
}

bool operator==(const Poly2& x, const Poly2& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (!(x.terms_[i].mono == y.terms_[i].mono) || x.terms_[i].coeff != y.terms_[i].coeff) return false;
  }
  return true;
}

std::optional<Poly2> exact_divide(const Poly2& p, const Poly2& d) {
  if (d.is_zero()) return std::nullopt;
  if (d.is_monomial()) {
    const auto& lt = d.leading();
    for (const auto& t : p.terms())
      if (!lt.mono.divides(t.mono)) return std::nullopt;
    return p.divided_by_monomial(lt.mono).scaled(1 / lt.coeff);
  }
  const auto& lead = d.leading();
  Rational inv = 1 / lead.coeff;
  std::vector<Poly2::Term> quotient;
  Poly2 rem = p;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    Monomial2 m{lt.mono.e_q - lead.mono.e_q, lt.mono.e_a - lead.mono.e_a};
    Rational c = lt.coeff * inv;
    rem -= d.times_monomial(c, m);
    quotient.push_back({m, std::move(c)});
  }
  return Poly2::from_terms(std::move(quotient));
}

Poly2 unit_normalize(const Poly2& p) {
  if (p.is_zero()) return p;
  Integer lcm_den = 1;
  Integer gcd_num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(lcm_den, gcd_num);
  scale.canonicalize();
  if (p.leading().coeff < 0) scale = -scale;
  return p.scaled(scale);
}

namespace {

// Dense univariate polynomials in a over Q, index = degree, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

UPoly u_mul(const UPoly& x, const UPoly& y) {
  if (x.empty() || y.empty()) return {};
  UPoly r(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  trim(r);
  return r;
}

UPoly u_sub(UPoly x, const UPoly& y) {
  if (x.size() < y.size()) x.resize(y.size(), Rational(0));
  for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
  trim(x);
  return x;
}

// Returns (quotient, remainder).
std::pair<UPoly, UPoly> u_divmod(UPoly num, const UPoly& den) {
  assert(!den.empty());
  if (num.size() < den.size()) return {{}, num};
  UPoly quot(num.size() - den.size() + 1, Rational(0));
  const Rational inv = 1 / den.back();
  for (std::size_t i = num.size(); i-- >= den.size();) {
    Rational c = num[i] * inv;
    if (c == 0) continue;
    std::size_t shift = i - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

UPoly u_monic(UPoly u) {
  if (u.empty()) return u;
  Rational inv = 1 / u.back();
  for (auto& c : u) c *= inv;
  return u;
}

UPoly u_gcd(UPoly x, UPoly y) {
  while (!y.empty()) {
    UPoly r = u_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return u_monic(std::move(x));
}

// Polynomial in q with coefficients in Q[a]; index = q-degree.
using QPoly = std::vector<UPoly>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

QPoly to_qpoly(const Poly2& p) {
  QPoly out(p.degree_q() + 1);
  for (const auto& t : p.terms()) {
    auto& u = out[t.mono.e_q];
    if (u.size() <= t.mono.e_a) u.resize(t.mono.e_a + 1, Rational(0));
    u[t.mono.e_a] = t.coeff;
  }
  trim(out);
  return out;
}

Poly2 from_qpoly(const QPoly& p) {
  std::vector<Poly2::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] != 0)
        terms.push_back({{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, p[i][j]});
  return Poly2::from_terms(std::move(terms));
}

UPoly content(const QPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? u_monic(c) : u_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

QPoly primitive_part(const QPoly& p) {
  UPoly c = content(p);
  if (c.size() <= 1) return p;
  QPoly out;
  out.reserve(p.size());
  for (const auto& coeff : p) out.push_back(coeff.empty() ? UPoly{} : u_divmod(coeff, c).first);
  return out;
}

// lc(b)^k * x mod b, for the appropriate k.
QPoly pseudo_remainder(QPoly x, const QPoly& b) {
  const UPoly& lcb = b.back();
  const std::size_t db = b.size() - 1;
  while (!x.empty() && x.size() - 1 >= db) {
    const std::size_t shift = x.size() - 1 - db;
    const UPoly lcx = x.back();
    for (auto& c : x) c = u_mul(c, lcb);
    for (std::size_t i = 0; i < b.size(); ++i) x[shift + i] = u_sub(x[shift + i], u_mul(lcx, b[i]));
    trim(x);
  }
  return x;
}

// Primitive PRS over Q[a][q]; the fallback when the heuristic gives up.
Poly2 gcd_prs(const Poly2& p, const Poly2& r) {
  QPoly x = to_qpoly(p);
  QPoly y = to_qpoly(r);
  UPoly cont_gcd = u_gcd(content(x), content(y));
  QPoly gx = primitive_part(x);
  QPoly gy = primitive_part(y);
  if (gx.size() < gy.size()) std::swap(gx, gy);
  QPoly g;
  if (gy.size() <= 1) {
    g = QPoly{UPoly{Rational(1)}};
  } else {
    while (true) {
      QPoly rem = pseudo_remainder(gx, gy);
      if (rem.empty()) {
        g = gy;
        break;
      }
      if (rem.size() == 1) {
        g = QPoly{UPoly{Rational(1)}};
        break;
      }
      gx = std::move(gy);
      gy = primitive_part(rem);
    }
    g = primitive_part(g);
  }
  for (auto& c : g) c = u_mul(c, cont_gcd);
  return from_qpoly(g);
}

// Heuristic gcd over Z: evaluate at a large integer xi, take the integer gcd
// and read the result back in base xi with balanced digits. A candidate is
// accepted only after trial division, which makes it the exact gcd.

// Dense univariate polynomials over Z, index = degree, no trailing zeros.
using ZPoly = std::vector<Integer>;

constexpr int kHeuristicAttempts = 6;
constexpr std::size_t kMaxEvaluationBits = 200000;

void trim(ZPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

Integer height(const ZPoly& u) {
  Integer h = 0;
  for (const auto& c : u)
    if (abs(c) > h) h = abs(c);
  return h;
}

Integer height(const Poly2& p) {
  Integer h = 0;
  for (const auto& t : p.terms())
    if (abs(t.coeff.get_num()) > h) h = abs(t.coeff.get_num());
  return h;
}

Integer eval_at(const ZPoly& u, const Integer& x) {
  Integer v = 0;
  for (std::size_t i = u.size(); i-- > 0;) v = v * x + u[i];
  return v;
}

// Balanced base-xi digits of v, lowest first.
ZPoly to_digits(Integer v, const Integer& xi) {
  ZPoly out;
  const Integer half = xi / 2;
  while (v != 0) {
    Integer d;
    mpz_fdiv_r(d.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (d > half) d -= xi;
    out.push_back(d);
    v = (v - d) / xi;
  }
  return out;
}

Integer z_content(const ZPoly& u) {
  Integer g = 0;
  for (const auto& c : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

bool z_divides(const ZPoly& d, ZPoly x) {
  if (d.empty()) return x.empty();
  const Integer& lead = d.back();
  while (!x.empty()) {
    if (x.size() < d.size()) return false;
    if (!mpz_divisible_p(x.back().get_mpz_t(), lead.get_mpz_t())) return false;
    const Integer c = x.back() / lead;
    const std::size_t shift = x.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) x[shift + i] -= c * d[i];
    trim(x);
  }
  return true;
}

Integer next_xi(const Integer& xi) { return xi * 73794 / 27011; }

// gcd in Z[q] of nonzero polynomials, up to sign; nullopt when the heuristic gives up.
std::optional<ZPoly> z_heuristic_gcd(ZPoly x, ZPoly y) {
  const Integer cx = z_content(x);
  const Integer cy = z_content(y);
  Integer c;
  mpz_gcd(c.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
  for (auto& v : x) v /= cx;
  for (auto& v : y) v /= cy;
  if (x.size() == 1 || y.size() == 1) return ZPoly{c};
  Integer xi = 2 * std::min(height(x), height(y)) + 29;
  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(x.size(), y.size()) > kMaxEvaluationBits) break;
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), eval_at(x, xi).get_mpz_t(), eval_at(y, xi).get_mpz_t());
    ZPoly g = to_digits(gamma, xi);
    const Integer cg = z_content(g);
    if (cg != 0) {
      for (auto& v : g) v /= cg;
      if (z_divides(g, x) && z_divides(g, y)) {
        for (auto& v : g) v *= c;
        return g;
      }
    }
    xi = next_xi(xi);
  }
  return std::nullopt;
}

// Integer-coefficient view of p in powers of q, with a evaluated at xi.
ZPoly eval_a(const Poly2& p, const Integer& xi) {
  ZPoly out(p.degree_q() + 1, Integer(0));
  for (const auto& t : p.terms()) {
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), t.mono.e_a);
    out[t.mono.e_q] += t.coeff.get_num() * pw;
  }
  trim(out);
  return out;
}

// gcd in Z[q,a] of nonzero primitive integer polynomials; nullopt when the heuristic gives up.
std::optional<Poly2> heuristic_gcd(const Poly2& p, const Poly2& r) {
  Integer xi = 2 * std::min(height(p), height(r)) + 29;
  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    const std::size_t bits = mpz_sizeinbase(xi.get_mpz_t(), 2) * (std::max(p.degree_a(), r.degree_a()) + 1);
    if (bits > kMaxEvaluationBits) break;
    const auto gamma = z_heuristic_gcd(eval_a(p, xi), eval_a(r, xi));
    if (!gamma) return std::nullopt;
    std::vector<Poly2::Term> terms;
    for (std::size_t i = 0; i < gamma->size(); ++i) {
      const ZPoly digits = to_digits((*gamma)[i], xi);
      for (std::size_t j = 0; j < digits.size(); ++j)
        if (digits[j] != 0)
          terms.push_back({{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, Rational(digits[j])});
    }
    const Poly2 g = unit_normalize(Poly2::from_terms(std::move(terms)));
    if (!g.is_zero() && exact_divide(p, g) && exact_divide(r, g)) return g;
    xi = next_xi(xi);
  }
  return std::nullopt;
}

// gcd of two polynomials that are not divisible by q or a and are nonconstant.
Poly2 gcd_stripped(const Poly2& p, const Poly2& r) {
  if (auto g = heuristic_gcd(unit_normalize(p), unit_normalize(r))) return *g;
  return gcd_prs(p, r);
}

}  // namespace

Poly2 poly_gcd(const Poly2& p, const Poly2& r) {
  if (p.is_zero()) return unit_normalize(r);
  if (r.is_zero()) return unit_normalize(p);
  const Monomial2 mp = p.min_exponents();
  const Monomial2 mr = r.min_exponents();
  const Monomial2 common{std::min(mp.e_q, mr.e_q), std::min(mp.e_a, mr.e_a)};
  const Poly2 sp = p.divided_by_monomial(mp);
  const Poly2 sr = r.divided_by_monomial(mr);
  Poly2 g = Poly2::monomial(1, common);
  if (!sp.is_constant() && !sr.is_constant()) g = gcd_stripped(sp, sr).times_monomial(1, common);
  return unit_normalize(g);
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 || mpz_perfect_square_p(x.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer n;
  Integer d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  Rational s(n, d);
  s.canonicalize();
  return s;
}

std::optional<Poly2> poly_sqrt(const Poly2& p) {
  if (p.is_zero()) return Poly2{};
  const auto& lt = p.leading();
  if (lt.mono.e_q % 2 != 0 || lt.mono.e_a % 2 != 0) return std::nullopt;
  auto c0 = rational_sqrt(lt.coeff);
  if (!c0) return std::nullopt;
  const Monomial2 root_mono{lt.mono.e_q / 2, lt.mono.e_a / 2};
  Poly2 root = Poly2::monomial(*c0, root_mono);
  const Rational twice_lead = 2 * *c0;
  const std::uint32_t min_degree = p.min_total_degree();
  Poly2 rem = p - root * root;
  Monomial2 last = root_mono;
  while (!rem.is_zero()) {
    const auto& r = rem.leading();
    if (!root_mono.divides(r.mono)) return std::nullopt;
    Monomial2 m{r.mono.e_q - root_mono.e_q, r.mono.e_a - root_mono.e_a};
    // Each new term is strictly below the previous one, and no term of a
    // square root can have less than half the minimal degree of p.
    if (!precedes(last, m) || 2 * m.total_degree() < min_degree) return std::nullopt;
    Poly2 term = Poly2::monomial(r.coeff / twice_lead, m);
    rem -= (root.scaled(2) + term) * term;
    root += term;
    last = m;
  }
  return root;
}

namespace {

std::string monomial_text(const Monomial2& m) {
  std::string s;
  auto append = [&s](char var, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (e > 1) s += '^' + std::to_string(e);
  };
  append('q', m.e_q);
  append('a', m.e_a);
  return s;
}

}  // namespace

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    const std::string mono = monomial_text(t.mono);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

}  // namespace qvira
