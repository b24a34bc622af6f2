#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qvira/families.hpp"
#include "qvira/field.hpp"
#include "qvira/presentation.hpp"
#include "qvira/table_format.hpp"

namespace qvira {

/// Ratio b of the geometric sequence f(0,1,k): Forward for b = q (families I
/// and II), Reverse for b = q^-1 (families III and IV).
enum class Orientation { Forward, Reverse, Neither };

std::string_view to_string(Orientation o);

enum class InconsistencyReason {
  BracketRelation,
  DegenerateNonzero,
  PNotOne,
  BadRatio,
  ClosedFormMismatch,
  WindowTooSmall,
};

std::string_view to_string(InconsistencyReason r);

struct TrivialSum {};

struct IsoClass {
  Orientation orientation = Orientation::Forward;
  RationalFunction a;
  /// Set only when the raw table equals one family formula on the whole window.
  std::optional<Family> exact_family;
};

struct Inconsistent {
  InconsistencyReason reason = InconsistencyReason::BracketRelation;
  std::string witness;
};

using ClassificationResult = std::variant<TrivialSum, IsoClass, Inconsistent>;

/// Decides which intermediate-series module a table presents on its window:
///   1. window check (|h|, |j| >= 2 and at least five degrees)
///   2. degeneracy: a degenerate table must vanish entirely (trivial sum)
///   3. bracket relation on every admissible index
///   4. normalization t1.w_k = w_{k+1} and invariants p, b, a
///   5. p = 1, b in {q, q^-1}
///   6. every normalized entry against the closed model
///        Forward  (a q^k)^j
///        Reverse  (-1)^{h+j+1} (a q^{-k-h})^j
///   7. exact family match of the raw entries
ClassificationResult classify(const TableDocument& doc);

/// Structured verdict, one "key: value" per line.
std::string describe(const ClassificationResult& r);

struct CharacteristicEquation {
  RationalFunction alpha;
  RationalFunction beta;
  RationalFunction gamma;
  QuadraticRoots roots;
};

/// x^2 coefficients of the recurrence satisfied by f(0, +-1, k) when t1 acts
/// with eigenvalue square lambda_sq:
///   lambda_sq x^2 - (2 lambda_sq + (1-q)(q^-1 - 1)) x + lambda_sq.
/// Throws BadParameter for lambda_sq = 0.
CharacteristicEquation characteristic_equation(const RationalFunction& lambda_sq,
                                               const RationalFunction& q = RationalFunction::q());

/// Forward iff b = q, Reverse iff b = q^-1, judged through (1+b)^2/b = (1+q)^2/q.
Orientation orientation_from_b(const RationalFunction& b, const RationalFunction& q = RationalFunction::q());

struct Geometric {
  RationalFunction a;  // value at k = 0
  RationalFunction b;
};

struct NotGeometric {
  int k = 0;  // first k where g(k+1)/g(k) differs from the initial ratio
};

/// Fits g(k) = a b^k to consecutive samples (k ascending by one). Throws
/// ZeroSample for a zero sample, BadParameter for fewer than three samples or
/// a gap in k.
std::variant<Geometric, NotGeometric> fit_geometric(const std::vector<std::pair<int, RationalFunction>>& g);

struct DistinctRootsSolution {
  RationalFunction x;        // first root of the characteristic quadratic
  RationalFunction y;        // second root; x^-1 when alpha = gamma
  RationalFunction lambda1;  // g(k) = lambda1 x^k + lambda2 y^k
  RationalFunction lambda2;
};

struct RepeatedRootSolution {
  RationalFunction r;
  RationalFunction lambda1;  // g(k) = r^k (lambda1 + k lambda2)
  RationalFunction lambda2;
};

using RecurrenceSolution = std::variant<DistinctRootsSolution, RepeatedRootSolution, RootsNotInField>;

/// Solves alpha g(k+1) + beta g(k) + gamma g(k-1) = 0 from g(0) = g0,
/// g(1) = g1 through the characteristic quadratic alpha x^2 + beta x + gamma.
/// Throws NotQuadratic for alpha = 0 and SingularFit when the fitting system
/// is singular (a zero repeated root).
RecurrenceSolution solve_recurrence2(const RationalFunction& alpha, const RationalFunction& beta,
                                     const RationalFunction& gamma, const RationalFunction& g0,
                                     const RationalFunction& g1);

/// g(k) of a solved recurrence.
RationalFunction evaluate_solution(const RecurrenceSolution& s, int k);

}  // namespace qvira
