#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "qvira/field.hpp"
#include "qvira/lie_algebra.hpp"
#include "qvira/presentation.hpp"
#include "qvira/table_format.hpp"

namespace qvira {

/// The four intermediate-series families V(a, I) .. V(a, IV).
enum class Family { I, II, III, IV };

inline constexpr Family kAllFamilies[] = {Family::I, Family::II, Family::III, Family::IV};

std::string_view to_string(Family f);
/// Accepts "I", "II", "III", "IV"; throws BadParameter otherwise.
Family parse_family(std::string_view text);

/// Coefficient f with (t1^m t2^n).v_k = f v_{k+m}:
///   I    (a q^k)^n
///   II   (-1)^m (a q^k)^n
///   III  (-1)^{m+n+1} (a q^{-k-m})^n
///   IV   (-1)^{n+1} (a q^{-k-m})^n
/// Throws IndexZero for (m, n) = (0, 0) and BadParameter for a = 0.
RationalFunction action_coeff(Family family, const RationalFunction& a, int m, int n, int k);

class FamilyModule {
 public:
  /// Throws BadParameter for a = 0.
  FamilyModule(Family family, RationalFunction a);

  Family family() const { return family_; }
  const RationalFunction& a() const { return a_; }

 private:
  Family family_;
  RationalFunction a_;
};

/// Finite combination of basis vectors v_k, keyed by degree, no zero coordinates.
class GradedVector {
 public:
  GradedVector() = default;
  static GradedVector basis(int k, const RationalFunction& coeff = 1);

  const std::map<int, RationalFunction>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  RationalFunction coordinate(int k) const;
  void add(int k, const RationalFunction& coeff);

  GradedVector& operator+=(const GradedVector& rhs);
  GradedVector& operator-=(const GradedVector& rhs);
  friend GradedVector operator+(GradedVector x, const GradedVector& y) { return x += y; }
  friend GradedVector operator-(GradedVector x, const GradedVector& y) { return x -= y; }
  friend bool operator==(const GradedVector&, const GradedVector&) = default;

 private:
  std::map<int, RationalFunction> coords_;
};

std::string to_string(const GradedVector& v);

/// Direct sum of one-dimensional trivial modules on the given degrees; every
/// element of the algebra acts by zero.
struct TrivialSumModule {
  std::set<int> support;
};

GradedVector act(const FamilyModule& module, const AlgebraElement& x, const GradedVector& v);
inline GradedVector act(const TrivialSumModule&, const AlgebraElement&, const GradedVector&) { return {}; }

struct AxiomWitness {
  AlgebraElement x;
  AlgebraElement y;
  GradedVector v;
  GradedVector lhs;  // [x, y].v
  GradedVector rhs;  // x.(y.v) - y.(x.v)
};

/// Pass (nullopt) when [x, y].v = x.(y.v) - y.(x.v) exactly; otherwise the witness.
std::optional<AxiomWitness> verify_axiom(const FamilyModule& module, const AlgebraElement& x,
                                         const AlgebraElement& y, const GradedVector& v);

struct AxiomSweep {
  std::size_t checked = 0;
  std::optional<AxiomWitness> first_failure;
  std::size_t failures = 0;
};

/// verify_axiom over every pair of basis elements with indices in
/// [-bound, bound]^2 minus (0,0) and every v_k with |k| <= k_bound. Families
/// of pairs are checked on worker threads; the reported witness is the first
/// one in (x, y, k) order.
AxiomSweep sweep_axioms(const FamilyModule& module, int bound, int k_bound);

/// The table of a family on the window |h| <= h_bound, |j| <= j_bound,
/// |k| <= k_bound, all dims 1. In numeric mode the entries are evaluated at
/// (q0, a0). Throws BadParameter for bounds < 1 or a vanishing parameter.
TableDocument gen_table(Family family, const RationalFunction& a, int h_bound, int j_bound, int k_bound,
                        const FieldContext& mode);

/// f(m,0,0) of the nondegenerate case:
///   m >= 1   (lambda (1-b)/(1-q))^m (1-q^m)/(1-b^m)
///   m <= -1  (q/b) (lambda (1-b)/(1-q))^{m+2} (1-q^m)/(1-b^m)
RationalFunction closed_form_f_m00(const RationalFunction& b, const RationalFunction& lambda, int m);

/// Closed form of f(m,j,k) for b in {q, q^-1}, lambda in {1, -1}:
///   m = 0    lambda^2 (1-b^j)/(q^-j - 1) (a b^{k-1} (1-b)/(1-q))^j
///   m != 0   (a b^k (1-b^m)/(1-q^m))^j f(m,0,0)
/// Throws BadParameter outside that domain, for a = 0 or (m, j) = (0, 0).
RationalFunction closed_form_f(const RationalFunction& b, const RationalFunction& lambda, int m, int j, int k,
                               const RationalFunction& a);

struct Irreducible {};
struct Reducible {
  int degree = 0;
  /// "zero-dimension", "up" (f(1,0,degree) = 0) or "down" (f(-1,0,degree) = 0).
  std::string reason;
};

/// Graded irreducibility on the window: every degree has dimension 1 and t1,
/// t1^{-1} link all neighbouring degrees.
std::variant<Irreducible, Reducible> check_graded_irreducible(const TableDocument& doc);

}  // namespace qvira
