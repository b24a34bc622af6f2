#include "qvira/lie_algebra.hpp"

#include <optional>
#include <random>

#include "qvira/errors.hpp"
#include "qvira/expr.hpp"

namespace qvira {

BasisIndex::BasisIndex(int h, int j) : h_(h), j_(j) {
  if (h == 0 && j == 0) throw Error(ErrorCode::IndexZero, "t[0,0] is not a basis element");
}

AlgebraElement AlgebraElement::basis(int h, int j, const RationalFunction& coeff) {
  AlgebraElement x;
  x.add_term(BasisIndex(h, j), coeff);
  return x;
}

RationalFunction AlgebraElement::coefficient(const BasisIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void AlgebraElement::add_term(const BasisIndex& index, const RationalFunction& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  for (const auto& [index, c] : rhs.terms_) add_term(index, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  for (const auto& [index, c] : rhs.terms_) add_term(index, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out;
  for (const auto& [index, c] : terms_) out.terms_.emplace(index, -c);
  return out;
}

AlgebraElement operator*(const RationalFunction& c, const AlgebraElement& x) {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [index, coeff] : x.terms_) out.terms_.emplace(index, c * coeff);
  return out;
}

RationalFunction structure_constant(int h, int j, int m, int n) {
  const long e1 = static_cast<long>(j) * m;
  const long e2 = static_cast<long>(h) * n;
  if (e1 == e2) return {};
  return q_power(e1) - q_power(e2);
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [s, cs] : x.terms()) {
    for (const auto& [t, ct] : y.terms()) {
      RationalFunction c = structure_constant(s.h(), s.j(), t.h(), t.j());
      if (c.is_zero()) continue;
      // A nonzero constant forces (h+m, j+n) != (0, 0).
      out.add_term(BasisIndex(s.h() + t.h(), s.j() + t.j()), c * cs * ct);
    }
  }
  return out;
}

AlgebraElement component_of_degree(const AlgebraElement& x, int u) {
  AlgebraElement out;
  for (const auto& [index, c] : x.terms())
    if (index.h() == u) out.add_term(index, c);
  return out;
}

bool is_homogeneous_of_degree(const AlgebraElement& x, int u) {
  for (const auto& [index, c] : x.terms())
    if (index.h() != u) return false;
  return true;
}

AlgebraElement random_element(std::uint64_t seed, int index_bound, std::span<const RationalFunction> coeff_pool) {
  if (index_bound < 1) throw Error(ErrorCode::BadParameter, "index_bound must be at least 1");
  if (coeff_pool.empty()) throw Error(ErrorCode::BadParameter, "empty coefficient pool");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> index(-index_bound, index_bound);
  std::uniform_int_distribution<std::size_t> pick(0, coeff_pool.size() - 1);
  AlgebraElement x;
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    int h = 0;
    int j = 0;
    while (h == 0 && j == 0) {
      h = index(rng);
      j = index(rng);
    }
    x.add_term(BasisIndex(h, j), coeff_pool[pick(rng)]);
  }
  return x;
}

namespace {

// Value of a parsed element expression: either a scalar or a vector.
struct LinearForm {
  std::optional<RationalFunction> scalar;
  AlgebraElement vector;
};

[[noreturn]] void not_linear(const std::string& what) {
  throw Error(ErrorCode::SemanticError, "not a linear combination of basis elements: " + what);
}

LinearForm eval_linear(const ExprAst& e) {
  switch (e->kind) {
    case ExprKind::Basis: return {std::nullopt, AlgebraElement::basis(e->h, e->j)};
    case ExprKind::Neg: {
      LinearForm v = eval_linear(e->lhs);
      if (v.scalar) return {-*v.scalar, {}};
      return {std::nullopt, -v.vector};
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
      LinearForm l = eval_linear(e->lhs);
      LinearForm r = eval_linear(e->rhs);
      const bool sub = e->kind == ExprKind::Sub;
      if (l.scalar && r.scalar) return {sub ? *l.scalar - *r.scalar : *l.scalar + *r.scalar, {}};
      // A zero scalar is also the zero element.
      if (l.scalar && !l.scalar->is_zero()) not_linear("scalar added to an element");
      if (r.scalar && !r.scalar->is_zero()) not_linear("scalar added to an element");
      return {std::nullopt, sub ? l.vector - r.vector : l.vector + r.vector};
    }
    case ExprKind::Mul: {
      LinearForm l = eval_linear(e->lhs);
      LinearForm r = eval_linear(e->rhs);
      if (l.scalar && r.scalar) return {*l.scalar * *r.scalar, {}};
      if (l.scalar) return {std::nullopt, *l.scalar * r.vector};
      if (r.scalar) return {std::nullopt, *r.scalar * l.vector};
      not_linear("product of two basis elements");
    }
    case ExprKind::Div: {
      LinearForm l = eval_linear(e->lhs);
      LinearForm r = eval_linear(e->rhs);
      if (!r.scalar) not_linear("division by a basis element");
      if (r.scalar->is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
      RationalFunction inv = RationalFunction(1) / *r.scalar;
      if (l.scalar) return {*l.scalar * inv, {}};
      return {std::nullopt, inv * l.vector};
    }
    case ExprKind::Pow: {
      LinearForm base = eval_linear(e->lhs);
      if (!base.scalar) not_linear("power of a basis element");
      return {pow(*base.scalar, e->exponent), {}};
    }
    default: return {evaluate(e), {}};
  }
}

}  // namespace

AlgebraElement parse_element(std::string_view text) {
  LinearForm v = eval_linear(parse_element_expr(text));
  if (v.scalar) {
    if (v.scalar->is_zero()) return {};
    not_linear("a bare scalar");
  }
  return v.vector;
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, c] : x.terms()) {
    const std::string basis = "t[" + std::to_string(index.h()) + "," + std::to_string(index.j()) + "]";
    const bool atom = c.num().is_monomial() && c.den() == Poly2(1);
    if (atom) {
      const bool negative = c.num().leading().coeff < 0;
      const std::string mag = print_canonical(negative ? -c : c);
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      out += (mag == "1" ? "" : mag + "*") + basis;
    } else {
      if (!first) out += " + ";
      out += "(" + print_canonical(c) + ")*" + basis;
    }
    first = false;
  }
  return out;
}

}  // namespace qvira
