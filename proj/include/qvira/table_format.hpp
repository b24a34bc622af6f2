#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qvira/expr.hpp"
#include "qvira/field.hpp"

namespace qvira {

/// Integer window [lo, hi].
struct Range {
  int lo = 0;
  int hi = 0;

  bool contains(int x) const { return lo <= x && x <= hi; }
  int size() const { return hi - lo + 1; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// Index (h, j, k) of the coefficient f(h,j,k) in (t1^h t2^j).v_k = f(h,j,k) v_{k+h}.
using EntryKey = std::tuple<int, int, int>;

/// Parsed "vlq-table" file.
///
///   vlq-table 1
///   mode symbolic | mode numeric q=<rat> a=<rat>
///   k-range <k_min> <k_max>
///   dims <bits>
///   h-range <h_min> <h_max>
///   j-range <j_min> <j_max>
///   f <h> <j> <k> <expr>      (zero or more)
///
/// '#' starts a comment running to the end of the line; blank lines are ignored.
struct TableDocument {
  int version = 1;
  FieldContext mode = FieldContext::symbolic();
  Range k_range;
  std::vector<bool> dims;
  Range h_range;
  Range j_range;
  std::map<EntryKey, ExprAst> entries;

  bool dim(int k) const { return k_range.contains(k) && dims[static_cast<std::size_t>(k - k_range.lo)]; }
};

/// Throws SyntaxError (line, column) or SemanticError.
TableDocument parse_table(std::string_view text);

/// Deterministic rendering: entries sorted by (h, j, k), values printed in
/// canonical form.
std::string write_table(const TableDocument& doc);

/// Checks the document invariants; throws SemanticError.
void check_document(const TableDocument& doc);

}  // namespace qvira
