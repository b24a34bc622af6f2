#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qvira {

using Integer = mpz_class;
using Rational = mpq_class;

/// q^e_q * a^e_a. Negative powers never appear here; they live in the
/// denominator of a RationalFunction.
struct Monomial2 {
  std::uint32_t e_q = 0;
  std::uint32_t e_a = 0;

  std::uint32_t total_degree() const { return e_q + e_a; }
  bool divides(const Monomial2& other) const { return e_q <= other.e_q && e_a <= other.e_a; }

  friend bool operator==(const Monomial2&, const Monomial2&) = default;
};

/// Fixed monomial order: total degree, then q-degree. Returns the ordering of
/// `x` relative to `y` with "greater" meaning printed earlier.
std::strong_ordering compare_monomials(const Monomial2& x, const Monomial2& y);

inline Monomial2 operator*(const Monomial2& x, const Monomial2& y) {
  return {x.e_q + y.e_q, x.e_a + y.e_a};
}

/// Sparse polynomial in q and a over Q. Terms are kept sorted in descending
/// monomial order with no zero coefficients.
class Poly2 {
 public:
  struct Term {
    Monomial2 mono;
    Rational coeff;
  };

  Poly2() = default;
  Poly2(long c);  // NOLINT(google-explicit-constructor)
  explicit Poly2(const Rational& c);

  static Poly2 monomial(const Rational& c, Monomial2 m);
  static Poly2 q() { return monomial(1, {1, 0}); }
  static Poly2 a() { return monomial(1, {0, 1}); }
  static Poly2 q_power(std::uint32_t e) { return monomial(1, {e, 0}); }
  /// Sorts, merges equal monomials and drops zeros.
  static Poly2 from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial2{}); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  /// Constant coefficient value; only meaningful when is_constant().
  Rational constant_value() const;

  /// Componentwise minimum exponents over all terms ({0,0} for zero).
  Monomial2 min_exponents() const;
  std::uint32_t degree_q() const;
  std::uint32_t degree_a() const;
  std::uint32_t min_total_degree() const;

  Poly2 scaled(const Rational& c) const;
  Poly2 times_monomial(const Rational& c, Monomial2 m) const;
  /// Divides every term by x^m; requires m to divide every monomial.
  Poly2 divided_by_monomial(Monomial2 m) const;

  Rational evaluate(const Rational& q0, const Rational& a0) const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Poly2& rhs);

  friend Poly2 operator+(Poly2 x, const Poly2& y) { return x += y; }
  friend Poly2 operator-(Poly2 x, const Poly2& y) { return x -= y; }
  friend Poly2 operator*(const Poly2& x, const Poly2& y);
  friend bool operator==(const Poly2& x, const Poly2& y);

 private:
  std::vector<Term> terms_;
};

/// Quotient when `d` divides `p` exactly over Q, otherwise nullopt.
std::optional<Poly2> exact_divide(const Poly2& p, const Poly2& d);

/// Scales by a rational so that all coefficients are coprime integers and the
/// leading coefficient is positive. Zero stays zero.
Poly2 unit_normalize(const Poly2& p);

/// Greatest common divisor in Q[q,a], unit-normalized. gcd(p, 0) = unit_normalize(p).
Poly2 poly_gcd(const Poly2& p, const Poly2& r);

/// Polynomial s with s*s == p and positive leading coefficient, if one exists.
std::optional<Poly2> poly_sqrt(const Poly2& p);

/// Square root of a rational if it is a perfect square, sign nonnegative.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Canonical text: "q^2*a - 3*q + 5", "0" for zero.
std::string to_string(const Poly2& p);

}  // namespace qvira
