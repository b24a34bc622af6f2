#include "qvira/rational_function.hpp"

#include <utility>

#include "qvira/errors.hpp"

namespace qvira {

namespace {

// Scales num and den jointly so all coefficients are coprime integers and the
// denominator's leading coefficient is positive.
void clear_content(Poly2& num, Poly2& den) {
  Integer lcm_den = 1;
  Integer gcd_num = 0;
  for (const Poly2* p : {&num, &den}) {
    for (const auto& t : p->terms()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coeff.get_den_mpz_t());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
  }
  Rational scale(lcm_den, gcd_num);
  scale.canonicalize();
  if (den.leading().coeff < 0) scale = -scale;
  if (scale != 1) {
    num = num.scaled(scale);
    den = den.scaled(scale);
  }
}

}  // namespace

RationalFunction::RationalFunction(const Rational& c) : num_(c), den_(1) {
  Rational r = c;
  r.canonicalize();
  num_ = Poly2(Rational(r.get_num()));
  den_ = Poly2(Rational(r.get_den()));
}

RationalFunction::RationalFunction(const Poly2& p) { *this = normalize(p, Poly2(1)); }

RationalFunction RationalFunction::q() { return {Poly2::q(), Poly2(1), true}; }

RationalFunction RationalFunction::a() { return {Poly2::a(), Poly2(1), true}; }

RationalFunction RationalFunction::normalize(const Poly2& num, const Poly2& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
  if (num.is_zero()) return {};
  Poly2 n = num;
  Poly2 d = den;
  if (!d.is_constant()) {
    Poly2 g = poly_gcd(n, d);
    if (!g.is_constant()) {
      n = *exact_divide(n, g);
      d = *exact_divide(d, g);
    }
  }
  clear_content(n, d);
  return {std::move(n), std::move(d), true};
}

Rational RationalFunction::constant_value() const { return num_.constant_value() / den_.constant_value(); }

RationalFunction RationalFunction::operator-() const { return {-num_, den_, true}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    *this = normalize(num_ + rhs.num_, den_);
  } else {
    *this = normalize(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RationalFunction();
  *this = normalize(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (is_zero()) return *this;
  *this = normalize(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

Rational RationalFunction::evaluate(const Rational& q0, const Rational& a0) const {
  Rational d = den_.evaluate(q0, a0);
  if (d == 0)
    throw Error(ErrorCode::PoleAtPoint,
                "denominator " + to_string(den_) + " vanishes at q=" + q0.get_str() + ", a=" + a0.get_str());
  return num_.evaluate(q0, a0) / d;
}

RationalFunction pow(const RationalFunction& x, long n) {
  if (n == 0) return 1;
  if (x.is_zero()) {
    if (n < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return {};
  }
  const bool invert = n < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Poly2 num(1);
  Poly2 den(1);
  Poly2 bn = x.num();
  Poly2 bd = x.den();
  // Powers of a reduced fraction stay reduced.
  while (e > 0) {
    if (e & 1UL) {
      num *= bn;
      den *= bd;
    }
    e >>= 1;
    if (e > 0) {
      bn = bn * bn;
      bd = bd * bd;
    }
  }
  return invert ? RationalFunction::normalize(den, num) : RationalFunction::normalize(num, den);
}

RationalFunction q_power(long e) {
  if (e >= 0) return {Poly2::q_power(static_cast<std::uint32_t>(e)), Poly2(1), true};
  return {Poly2(1), Poly2::q_power(static_cast<std::uint32_t>(-e)), true};
}

std::string print_canonical(const RationalFunction& x) {
  if (x.den() == Poly2(1)) return to_string(x.num());
  return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

}  // namespace qvira
