#include "qvira/expr.hpp"

#include <cctype>
#include <climits>
#include <random>
#include <utility>

#include "qvira/errors.hpp"

namespace qvira {

ExprAst make_integer(const Integer& v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Integer;
  n->value = v;
  return n;
}

ExprAst make_var_q() {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::VarQ;
  return n;
}

ExprAst make_var_a() {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::VarA;
  return n;
}

ExprAst make_neg(ExprAst child) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Neg;
  n->lhs = std::move(child);
  return n;
}

ExprAst make_binary(ExprKind op, ExprAst lhs, ExprAst rhs) {
  auto n = std::make_shared<ExprNode>();
  n->kind = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

ExprAst make_pow(ExprAst base, long exponent) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Pow;
  n->lhs = std::move(base);
  n->exponent = exponent;
  return n;
}

ExprAst make_basis(int h, int j) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Basis;
  n->h = h;
  n->j = j;
  return n;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool allow_basis) : text_(text), allow_basis_(allow_basis) {}

  ExprAst parse() {
    ExprAst e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("operator or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(0, pos_ + 1, expected); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!accept(c)) fail(what);
  }

  std::string digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digits");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long signed_int() {
    bool negative = accept('-');
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 9) {
      pos_ = start;
      fail("integer of at most 9 digits");
    }
    long v = std::stol(d);
    return negative ? -v : v;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = make_binary(ExprKind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make_binary(ExprKind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprAst term() {
    ExprAst lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = make_binary(ExprKind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_binary(ExprKind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprAst unary() {
    if (accept('-')) return make_neg(power());
    return power();
  }

  ExprAst power() {
    ExprAst base = atom();
    if (accept('^')) return make_pow(base, signed_int());
    return base;
  }

  ExprAst atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return make_integer(Integer(digits()));
    if (c == 'q') {
      ++pos_;
      return make_var_q();
    }
    if (c == 'a') {
      ++pos_;
      return make_var_a();
    }
    if (c == '(') {
      ++pos_;
      ExprAst inner = expr();
      expect(')', "')'");
      return inner;
    }
    if (allow_basis_ && c == 't') {
      ++pos_;
      expect('[', "'['");
      long h = signed_int();
      expect(',', "','");
      long j = signed_int();
      expect(']', "']'");
      return make_basis(static_cast<int>(h), static_cast<int>(j));
    }
    fail(allow_basis_ ? "integer, 'q', 'a', 't[h,j]' or '('" : "integer, 'q', 'a' or '('");
  }

  std::string_view text_;
  bool allow_basis_;
  std::size_t pos_ = 0;
};

int rank(const ExprAst& e) {
  switch (e->kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    case ExprKind::Integer: return e->value < 0 ? 0 : 5;
    default: return 5;
  }
}

std::string render(const ExprAst& e, int min_rank) {
  std::string s;
  switch (e->kind) {
    case ExprKind::Integer: s = e->value.get_str(); break;
    case ExprKind::VarQ: s = "q"; break;
    case ExprKind::VarA: s = "a"; break;
    case ExprKind::Basis: s = "t[" + std::to_string(e->h) + "," + std::to_string(e->j) + "]"; break;
    case ExprKind::Neg: s = "-" + render(e->lhs, 4); break;
    case ExprKind::Pow: s = render(e->lhs, 5) + "^" + std::to_string(e->exponent); break;
    case ExprKind::Add: s = render(e->lhs, 1) + " + " + render(e->rhs, 2); break;
    case ExprKind::Sub: s = render(e->lhs, 1) + " - " + render(e->rhs, 2); break;
    case ExprKind::Mul: s = render(e->lhs, 2) + "*" + render(e->rhs, 3); break;
    case ExprKind::Div: s = render(e->lhs, 2) + "/" + render(e->rhs, 3); break;
  }
  return rank(e) < min_rank ? "(" + s + ")" : s;
}

}  // namespace

ExprAst parse_expr(std::string_view text) { return Parser(text, false).parse(); }

ExprAst parse_element_expr(std::string_view text) { return Parser(text, true).parse(); }

RationalFunction evaluate(const ExprAst& e) {
  switch (e->kind) {
    case ExprKind::Integer: return RationalFunction(Rational(e->value));
    case ExprKind::VarQ: return RationalFunction::q();
    case ExprKind::VarA: return RationalFunction::a();
    case ExprKind::Neg: return -evaluate(e->lhs);
    case ExprKind::Add: return evaluate(e->lhs) + evaluate(e->rhs);
    case ExprKind::Sub: return evaluate(e->lhs) - evaluate(e->rhs);
    case ExprKind::Mul: return evaluate(e->lhs) * evaluate(e->rhs);
    case ExprKind::Div: return evaluate(e->lhs) / evaluate(e->rhs);
    case ExprKind::Pow: return pow(evaluate(e->lhs), e->exponent);
    case ExprKind::Basis: break;
  }
  throw Error(ErrorCode::SemanticError, "basis element inside a scalar expression");
}

std::string to_source(const ExprAst& e) { return render(e, 0); }

namespace {

ExprAst random_node(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 2);
  switch (pick(rng)) {
    case 0: return make_integer(std::uniform_int_distribution<int>(-9, 9)(rng));
    case 1: return make_var_q();
    case 2: return make_var_a();
    case 3: return make_neg(random_node(rng, depth - 1));
    case 4: return make_pow(random_node(rng, depth - 1), std::uniform_int_distribution<long>(-3, 3)(rng));
    default: break;
  }
  static constexpr ExprKind kOps[] = {ExprKind::Add, ExprKind::Sub, ExprKind::Mul, ExprKind::Div};
  const ExprKind op = kOps[std::uniform_int_distribution<int>(0, 3)(rng)];
  ExprAst lhs = random_node(rng, depth - 1);
  return make_binary(op, std::move(lhs), random_node(rng, depth - 1));
}

}  // namespace

ExprAst random_expr(std::uint64_t seed, int max_depth) {
  std::mt19937_64 rng(seed);
  return random_node(rng, max_depth);
}

}  // namespace qvira
