#include "qvira/field.hpp"

#include "qvira/errors.hpp"

namespace qvira {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::IndexZero: return "IndexZero";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::MissingData: return "MissingData";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::SingularFit: return "SingularFit";
    case ErrorCode::ZeroSample: return "ZeroSample";
    case ErrorCode::InvalidContext: return "InvalidContext";
  }
  return "Unknown";
}

FieldContext FieldContext::numeric(const Rational& q0, const Rational& a0) {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw Error(ErrorCode::InvalidContext, "q must avoid 0, 1 and -1, got " + q0.get_str());
  if (a0 == 0) throw Error(ErrorCode::InvalidContext, "a must be nonzero");
  FieldContext ctx;
  ctx.mode_ = Mode::Numeric;
  ctx.q0_ = q0;
  ctx.a0_ = a0;
  return ctx;
}

RationalFunction FieldContext::q() const {
  return is_numeric() ? RationalFunction(q0_) : RationalFunction::q();
}

RationalFunction FieldContext::apply(const RationalFunction& x) const {
  return is_numeric() ? RationalFunction(x.evaluate(q0_, a0_)) : x;
}

RationalFunction substitute(const RationalFunction& x, const FieldContext& ctx) {
  if (!ctx.is_numeric()) throw Error(ErrorCode::InvalidContext, "substitution needs a numeric context");
  return RationalFunction(x.evaluate(ctx.q0(), ctx.a0()));
}

std::optional<RationalFunction> field_sqrt(const RationalFunction& x) {
  // sqrt(N/D) = sqrt(N*D)/D.
  auto root = poly_sqrt(x.num() * x.den());
  if (!root) return std::nullopt;
  return RationalFunction::normalize(*root, x.den());
}

QuadraticRoots solve_quadratic(const RationalFunction& alpha, const RationalFunction& beta,
                               const RationalFunction& gamma) {
  if (alpha.is_zero()) throw Error(ErrorCode::NotQuadratic, "leading coefficient is zero");
  const RationalFunction disc = beta * beta - RationalFunction(4) * alpha * gamma;
  const RationalFunction two_alpha = RationalFunction(2) * alpha;
  if (disc.is_zero()) return RepeatedRoot{-beta / two_alpha};
  auto root = field_sqrt(disc);
  if (!root) return RootsNotInField{};
  return TwoRoots{(-beta + *root) / two_alpha, (-beta - *root) / two_alpha};
}

}  // namespace qvira
