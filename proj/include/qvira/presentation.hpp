#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qvira/field.hpp"
#include "qvira/table_format.hpp"

namespace qvira {

/// Evaluated action table: f(h,j,k) over a finite window, with
/// (t1^h t2^j).v_k = f(h,j,k) v_{k+h}. Entries outside the window or missing
/// from the file read as zero.
class ActionTable {
 public:
  ActionTable(FieldContext ctx, Range k_range, std::vector<bool> dims, Range h_range, Range j_range);

  /// Evaluates every entry in the document's context. Throws SemanticError if
  /// an entry has no value (division by zero, pole at the numeric point).
  static ActionTable from_document(const TableDocument& doc);
  /// Entries are rendered in canonical form; zero entries are omitted.
  TableDocument to_document() const;

  const FieldContext& context() const { return ctx_; }
  const Range& k_range() const { return k_range_; }
  const Range& h_range() const { return h_range_; }
  const Range& j_range() const { return j_range_; }
  const std::vector<bool>& dims() const { return dims_; }
  bool dim(int k) const { return k_range_.contains(k) && dims_[static_cast<std::size_t>(k - k_range_.lo)]; }
  bool all_dims_one() const;

  /// (h,j) != (0,0), h and j within their ranges, k and k+h within the k-range.
  bool in_window(int h, int j, int k) const;
  const RationalFunction& f(int h, int j, int k) const;
  /// Throws SemanticError outside the window or on a zero-dimensional degree
  /// (unless the value is zero).
  void set(int h, int j, int k, RationalFunction value);

  bool is_all_zero() const;
  /// Visits in-window indices in (h, j, k) order.
  template <class Fn>
  void for_each_index(Fn&& fn) const {
    for (int h = h_range_.lo; h <= h_range_.hi; ++h)
      for (int j = j_range_.lo; j <= j_range_.hi; ++j)
        for (int k = k_range_.lo; k <= k_range_.hi; ++k)
          if (in_window(h, j, k)) fn(h, j, k);
  }

  friend bool operator==(const ActionTable&, const ActionTable&) = default;

 private:
  std::size_t offset(int h, int j, int k) const;

  FieldContext ctx_;
  Range k_range_;
  std::vector<bool> dims_;
  Range h_range_;
  Range j_range_;
  std::vector<RationalFunction> values_;
};

/// One failed instance of the bracket relation
///   f(m,n,k) f(h,j,k+m) - f(h,j,k) f(m,n,k+h) = (q^{jm} - q^{nh}) f(h+m, j+n, k).
struct BracketViolation {
  int h, j, m, n, k;
  RationalFunction lhs;
  RationalFunction rhs;
};

struct ValidationReport {
  std::size_t checked = 0;
  std::vector<BracketViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks the bracket relation at every admissible index, in lexicographic
/// (h, j, m, n, k) order. `max_violations` = 0 collects all of them.
ValidationReport validate_table(const ActionTable& t, std::size_t max_violations = 0);

std::string describe(const BracketViolation& v);

/// The table rewritten in the basis w_k with t1.w_k = w_{k+1}.
struct NormalizedTable {
  ActionTable base;
  int anchor = 0;
  /// s_k with w_k = s_k v_k; s_anchor = 1.
  std::map<int, RationalFunction> scalings;
  ActionTable normalized;
};

/// Anchor is degree 0 when it lies in the k-range, else k_min. Throws
/// Degenerate when some f(1,0,k) vanishes, MissingData when dims are not all 1
/// or the window lacks h = 1.
NormalizedTable omega_normalize(const ActionTable& t);

/// The same module in the basis v'_k = s_k v_k: f'(h,j,k) = f(h,j,k) s_k / s_{k+h}.
/// Every degree of the k-range needs a nonzero scale; throws BadParameter otherwise.
ActionTable rescale_basis(const ActionTable& t, const std::map<int, RationalFunction>& s);

struct InvariantTriple {
  RationalFunction p;  // f(1,0,k) f(-1,0,k+1), the eigenvalue of t1^{-1} t1
  RationalFunction b;  // f(0,1,k+1) / f(0,1,k)
  RationalFunction a;  // f(0,1,0) read at k = 0
};

struct NotConstant {
  std::string quantity;  // "p" or "b"
  int k = 0;             // first degree where the value changes
  RationalFunction expected;
  RationalFunction found;
};

/// Throws MissingData when the window lacks (1,0), (-1,0) or (0,1) entries for
/// at least two consecutive degrees, ZeroEntry when some f(0,1,k) = 0.
std::variant<InvariantTriple, NotConstant> extract_invariants(const NormalizedTable& nt);

struct DegeneracyVerdict {
  enum class Kind { Nondegenerate, Degenerate, HasZeroDims };
  Kind kind = Kind::Nondegenerate;
  int k = 0;  // first degree with f(1,0,k) f(-1,0,k+1) = 0, or first zero dim
};

DegeneracyVerdict degeneracy_test(const ActionTable& t);

struct RelationCheck {
  enum class Status { Pass, Fail, Skipped };
  std::string name;
  Status status = Status::Skipped;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string witness;  // indices and both sides of the first failure
};

/// Checks the internal relations of the nondegenerate case against the
/// extracted invariants, in the normalized basis (where t1 acts by 1 and the
/// square of its eigenvalue enters as p):
///   shift-invariance      f(m,0,k) = f(m,0,anchor)
///   difference-product    (f(0,1,k)-f(0,1,k+1))(f(0,-1,k)-f(0,-1,k+1)) = (1-q)(1-q^-1)
///   power-ratio           (1-b^{m+1})/(1-q^{m+1}) f(m+1,0,.) = (1-b)/(1-q) (1-b^m)/(1-q^m) f(m,0,.)
///   first-t2-step         f(m,1,k) = a b^k (1-b^m)/(1-q^m) f(m,0,k)
///   t2-power              f(m,j,k) = (a b^k (1-b^m)/(1-q^m))^j f(m,0,anchor)
///   degree-zero-step      p (f(1,j,k-1) - f(1,j,k)) = (q^-j - 1) f(0,j,k)
///   degree-zero-closed    f(0,j,k) = p (1-b^j)/(q^-j - 1) (a b^{k-1} (1-b)/(1-q))^j
/// A relation with no admissible index in the window is reported Skipped.
std::vector<RelationCheck> verify_structure_relations(const NormalizedTable& nt, const InvariantTriple& inv);

std::string to_string(RelationCheck::Status s);

}  // namespace qvira
