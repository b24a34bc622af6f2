#pragma once

#include <optional>
#include <string>

#include "qvira/poly2.hpp"

namespace qvira {

/// Element of Q(q, a) held as a reduced fraction num/den.
///
/// Canonical form: gcd(num, den) is a unit, all coefficients are integers with
/// joint content 1, and the leading coefficient of den is positive. Two values
/// are equal exactly when their canonical forms coincide.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const Rational& c);
  explicit RationalFunction(const Poly2& p);

  static RationalFunction q();
  static RationalFunction a();
  /// Reduces num/den to canonical form; throws ZeroDenominator when den = 0.
  static RationalFunction normalize(const Poly2& num, const Poly2& den);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant; only meaningful when is_constant().
  Rational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  /// Throws DivisionByZero when rhs = 0.
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
  friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
  friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
  friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  /// Evaluates at q = q0, a = a0; throws PoleAtPoint if the denominator vanishes.
  Rational evaluate(const Rational& q0, const Rational& a0) const;

 private:
  friend RationalFunction q_power(long e);
  RationalFunction(Poly2 num, Poly2 den, bool /*trusted*/) : num_(std::move(num)), den_(std::move(den)) {}

  Poly2 num_;
  Poly2 den_;
};

/// x^n for any integer n; throws DivisionByZero for x = 0, n < 0.
RationalFunction pow(const RationalFunction& x, long n);

/// q^e for any integer e.
RationalFunction q_power(long e);

/// (-1)^n as a field element.
inline RationalFunction sign_power(long n) { return n % 2 == 0 ? RationalFunction(1) : RationalFunction(-1); }

/// "P" when the denominator is 1, otherwise "(P)/(Q)".
std::string print_canonical(const RationalFunction& x);

}  // namespace qvira
