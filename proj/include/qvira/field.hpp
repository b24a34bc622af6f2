#pragma once

#include <optional>
#include <string>
#include <variant>

#include "qvira/rational_function.hpp"

namespace qvira {

/// Where coefficients live: Q(q, a) with q, a indeterminate, or Q with q and a
/// fixed to rationals. A rational q0 outside {0, 1, -1} is never a root of
/// unity, so numeric mode keeps q generic.
class FieldContext {
 public:
  enum class Mode { Symbolic, Numeric };

  static FieldContext symbolic() { return FieldContext(); }
  /// Throws InvalidContext unless q0 is outside {0, 1, -1} and a0 != 0.
  static FieldContext numeric(const Rational& q0, const Rational& a0);

  Mode mode() const { return mode_; }
  bool is_numeric() const { return mode_ == Mode::Numeric; }
  const Rational& q0() const { return q0_; }
  const Rational& a0() const { return a0_; }

  /// The element playing the role of q: the indeterminate, or the constant q0.
  RationalFunction q() const;
  /// Maps a symbolic value into this context (identity in symbolic mode).
  RationalFunction apply(const RationalFunction& x) const;

  friend bool operator==(const FieldContext&, const FieldContext&) = default;

 private:
  FieldContext() = default;

  Mode mode_ = Mode::Symbolic;
  Rational q0_ = 0;
  Rational a0_ = 0;
};

/// q -> q0, a -> a0. Requires a numeric context; throws PoleAtPoint.
RationalFunction substitute(const RationalFunction& x, const FieldContext& ctx);

/// Roots of alpha*x^2 + beta*x + gamma in the coefficient field.
struct TwoRoots {
  RationalFunction first;   // (-beta + sqrt(disc)) / (2 alpha)
  RationalFunction second;  // (-beta - sqrt(disc)) / (2 alpha)
};
struct RepeatedRoot {
  RationalFunction root;
};
struct RootsNotInField {};
using QuadraticRoots = std::variant<TwoRoots, RepeatedRoot, RootsNotInField>;

/// Square root inside the field, sign fixed by a positive leading coefficient
/// of the numerator.
std::optional<RationalFunction> field_sqrt(const RationalFunction& x);

/// Throws NotQuadratic when alpha = 0. sqrt(disc) is taken with the sign
/// convention of field_sqrt, which fixes the root order.
QuadraticRoots solve_quadratic(const RationalFunction& alpha, const RationalFunction& beta,
                               const RationalFunction& gamma);

}  // namespace qvira
