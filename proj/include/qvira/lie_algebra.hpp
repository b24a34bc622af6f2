#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "qvira/rational_function.hpp"

namespace qvira {

/// Index of the basis element t1^h t2^j; (0, 0) is not a basis element.
class BasisIndex {
 public:
  /// Throws IndexZero for (0, 0).
  BasisIndex(int h, int j);

  int h() const { return h_; }
  int j() const { return j_; }

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;

 private:
  int h_;
  int j_;
};

/// Finite linear combination of basis elements with nonzero coefficients,
/// ordered by (h, j).
class AlgebraElement {
 public:
  using Terms = std::map<BasisIndex, RationalFunction>;

  AlgebraElement() = default;
  static AlgebraElement basis(int h, int j, const RationalFunction& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(const BasisIndex& index) const;

  /// Adds coeff * t[index]; drops the term if it cancels.
  void add_term(const BasisIndex& index, const RationalFunction& coeff);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator*(const RationalFunction& c, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Terms terms_;
};

/// [t1^h t2^j, t1^m t2^n] = (q^{jm} - q^{hn}) t1^{h+m} t2^{j+n}, extended
/// bilinearly. Terms landing on (0, 0) have zero coefficient and are dropped.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// Structure constant q^{jm} - q^{hn} of the bracket of two basis elements.
RationalFunction structure_constant(int h, int j, int m, int n);

/// The homogeneous component in L_u (terms with h = u).
AlgebraElement component_of_degree(const AlgebraElement& x, int u);

/// True when every term has h = u.
bool is_homogeneous_of_degree(const AlgebraElement& x, int u);

/// Deterministic pseudo-random element with 1 to 3 terms, indices in
/// [-index_bound, index_bound]^2 minus (0,0), coefficients drawn from the pool.
AlgebraElement random_element(std::uint64_t seed, int index_bound, std::span<const RationalFunction> coeff_pool);

/// Parses "3*t[1,2] + (q^2-1)*t[-1,0]"; throws SyntaxError or SemanticError.
AlgebraElement parse_element(std::string_view text);

/// "(q^2 - 1)*t[3,1] + t[1,0]"; "0" for the zero element.
std::string to_string(const AlgebraElement& x);

}  // namespace qvira
