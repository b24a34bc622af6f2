#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "qvira/rational_function.hpp"

namespace qvira {

enum class ExprKind { Integer, VarQ, VarA, Neg, Add, Sub, Mul, Div, Pow, Basis };

struct ExprNode;
/// Immutable expression tree; subtrees are shared.
using ExprAst = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind = ExprKind::Integer;
  Integer value = 0;   // Integer
  long exponent = 0;   // Pow
  int h = 0, j = 0;    // Basis: t[h,j]
  ExprAst lhs;         // Neg, Pow: operand; binary: left
  ExprAst rhs;         // binary: right
};

ExprAst make_integer(const Integer& v);
ExprAst make_var_q();
ExprAst make_var_a();
ExprAst make_neg(ExprAst child);
ExprAst make_binary(ExprKind op, ExprAst lhs, ExprAst rhs);
ExprAst make_pow(ExprAst base, long exponent);
ExprAst make_basis(int h, int j);

/// Grammar:
///   expr  := term { ("+"|"-") term }
///   term  := unary { ("*"|"/") unary }
///   unary := ["-"] power
///   power := atom ["^" signed_int]
///   atom  := integer | "q" | "a" | "(" expr ")"
/// Throws SyntaxError with a 1-based position.
ExprAst parse_expr(std::string_view text);

/// Same grammar with the extra atom "t[h,j]" for algebra elements.
ExprAst parse_element_expr(std::string_view text);

/// Exact value; throws DivisionByZero, or SemanticError on a basis atom.
RationalFunction evaluate(const ExprAst& e);

/// Structural rendering that re-parses to the same tree.
std::string to_source(const ExprAst& e);

/// Seeded random expression over q, a and small integers, at most max_depth
/// operators deep. May contain a division by zero; evaluate decides.
ExprAst random_expr(std::uint64_t seed, int max_depth);

}  // namespace qvira
