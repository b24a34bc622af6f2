#include "qvira/presentation.hpp"

#include <functional>
#include <sstream>
#include <utility>

#include "qvira/errors.hpp"
#include "qvira/lie_algebra.hpp"

namespace qvira {

namespace {

const RationalFunction kZero;

std::string idx(std::initializer_list<std::pair<const char*, int>> items) {
  std::string s;
  for (const auto& [name, v] : items) {
    if (!s.empty()) s += ' ';
    s += std::string(name) + "=" + std::to_string(v);
  }
  return s;
}

}  // namespace

ActionTable::ActionTable(FieldContext ctx, Range k_range, std::vector<bool> dims, Range h_range, Range j_range)
    : ctx_(std::move(ctx)),
      k_range_(k_range),
      dims_(std::move(dims)),
      h_range_(h_range),
      j_range_(j_range),
      values_(static_cast<std::size_t>(h_range.size()) * j_range.size() * k_range.size()) {
  if (static_cast<int>(dims_.size()) != k_range_.size())
    throw Error(ErrorCode::SemanticError, "dims length does not match the k-range");
}

ActionTable ActionTable::from_document(const TableDocument& doc) {
  check_document(doc);
  ActionTable t(doc.mode, doc.k_range, doc.dims, doc.h_range, doc.j_range);
  for (const auto& [key, expr] : doc.entries) {
    auto [h, j, k] = key;
    RationalFunction v;
    try {
      v = doc.mode.apply(evaluate(expr));
    } catch (const Error& e) {
      throw Error(ErrorCode::SemanticError,
                  "entry " + idx({{"h", h}, {"j", j}, {"k", k}}) + " has no value: " + e.what());
    }
    t.set(h, j, k, std::move(v));
  }
  return t;
}

TableDocument ActionTable::to_document() const {
  TableDocument doc;
  doc.mode = ctx_;
  doc.k_range = k_range_;
  doc.dims = dims_;
  doc.h_range = h_range_;
  doc.j_range = j_range_;
  for_each_index([&](int h, int j, int k) {
    const auto& v = f(h, j, k);
    if (!v.is_zero()) doc.entries.emplace(EntryKey{h, j, k}, parse_expr(print_canonical(v)));
  });
  return doc;
}

bool ActionTable::all_dims_one() const {
  for (bool d : dims_)
    if (!d) return false;
  return true;
}

bool ActionTable::in_window(int h, int j, int k) const {
  return (h != 0 || j != 0) && h_range_.contains(h) && j_range_.contains(j) && k_range_.contains(k) &&
         k_range_.contains(k + h);
}

std::size_t ActionTable::offset(int h, int j, int k) const {
  return (static_cast<std::size_t>(h - h_range_.lo) * j_range_.size() + (j - j_range_.lo)) * k_range_.size() +
         (k - k_range_.lo);
}

const RationalFunction& ActionTable::f(int h, int j, int k) const {
  if (!in_window(h, j, k)) return kZero;
  return values_[offset(h, j, k)];
}

void ActionTable::set(int h, int j, int k, RationalFunction value) {
  if (!in_window(h, j, k))
    throw Error(ErrorCode::SemanticError, "index outside the window: " + idx({{"h", h}, {"j", j}, {"k", k}}));
  if (!value.is_zero() && (!dim(k) || !dim(k + h)))
    throw Error(ErrorCode::SemanticError,
                "entry on a zero-dimensional degree: " + idx({{"h", h}, {"j", j}, {"k", k}}));
  values_[offset(h, j, k)] = std::move(value);
}

bool ActionTable::is_all_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

ValidationReport validate_table(const ActionTable& t, std::size_t max_violations) {
  ValidationReport report;
  const Range& hr = t.h_range();
  const Range& jr = t.j_range();
  const Range& kr = t.k_range();
  for (int h = hr.lo; h <= hr.hi; ++h) {
    for (int j = jr.lo; j <= jr.hi; ++j) {
      if (h == 0 && j == 0) continue;
      for (int m = hr.lo; m <= hr.hi; ++m) {
        for (int n = jr.lo; n <= jr.hi; ++n) {
          if (m == 0 && n == 0) continue;
          const int hs = h + m;
          const int js = j + n;
          const bool sum_is_zero = hs == 0 && js == 0;
          if (!sum_is_zero && (!hr.contains(hs) || !jr.contains(js))) continue;
          const RationalFunction c = t.context().apply(structure_constant(h, j, m, n));
          for (int k = kr.lo; k <= kr.hi; ++k) {
            if (!kr.contains(k + m) || !kr.contains(k + h) || !kr.contains(k + h + m)) continue;
            if (!t.dim(k) || !t.dim(k + m) || !t.dim(k + h) || !t.dim(k + h + m)) continue;
            ++report.checked;
            const auto& f1 = t.f(m, n, k);
            const auto& f2 = t.f(h, j, k + m);
            const auto& f3 = t.f(h, j, k);
            const auto& f4 = t.f(m, n, k + h);
            const auto& fs = sum_is_zero ? kZero : t.f(hs, js, k);
            if (fs.is_zero() && (f1.is_zero() || f2.is_zero()) && (f3.is_zero() || f4.is_zero())) continue;
            RationalFunction lhs = f1 * f2 - f3 * f4;
            RationalFunction rhs = c * fs;
            if (lhs == rhs) continue;
            report.violations.push_back({h, j, m, n, k, std::move(lhs), std::move(rhs)});
            if (max_violations != 0 && report.violations.size() >= max_violations) return report;
          }
        }
      }
    }
  }
  return report;
}

std::string describe(const BracketViolation& v) {
  return idx({{"h", v.h}, {"j", v.j}, {"m", v.m}, {"n", v.n}, {"k", v.k}}) + " lhs=" + print_canonical(v.lhs) +
         " rhs=" + print_canonical(v.rhs);
}

NormalizedTable omega_normalize(const ActionTable& t) {
  if (!t.all_dims_one()) throw Error(ErrorCode::MissingData, "normalization needs every degree of dimension 1");
  if (!t.h_range().contains(1) && t.k_range().size() > 1)
    throw Error(ErrorCode::MissingData, "window has no t1 entries");
  const Range& kr = t.k_range();
  const int anchor = kr.contains(0) ? 0 : kr.lo;
  std::map<int, RationalFunction> s;
  s[anchor] = 1;
  for (int k = anchor; k < kr.hi; ++k) {
    const auto& up = t.f(1, 0, k);
    if (up.is_zero()) throw Error(ErrorCode::Degenerate, "f(1,0," + std::to_string(k) + ") = 0");
    s[k + 1] = s[k] * up;
  }
  for (int k = anchor; k > kr.lo; --k) {
    const auto& up = t.f(1, 0, k - 1);
    if (up.is_zero()) throw Error(ErrorCode::Degenerate, "f(1,0," + std::to_string(k - 1) + ") = 0");
    s[k - 1] = s[k] / up;
  }
  ActionTable normalized(t.context(), kr, t.dims(), t.h_range(), t.j_range());
  t.for_each_index([&](int h, int j, int k) {
    const auto& v = t.f(h, j, k);
    if (v.is_zero()) return;
    normalized.set(h, j, k, h == 0 ? v : v * s.at(k) / s.at(k + h));
  });
  return {t, anchor, std::move(s), std::move(normalized)};
}

ActionTable rescale_basis(const ActionTable& t, const std::map<int, RationalFunction>& s) {
  for (int k = t.k_range().lo; k <= t.k_range().hi; ++k) {
    auto it = s.find(k);
    if (it == s.end() || it->second.is_zero())
      throw Error(ErrorCode::BadParameter, "missing or zero scale at degree " + std::to_string(k));
  }
  ActionTable out(t.context(), t.k_range(), t.dims(), t.h_range(), t.j_range());
  t.for_each_index([&](int h, int j, int k) {
    const auto& v = t.f(h, j, k);
    if (!v.is_zero()) out.set(h, j, k, h == 0 ? v : v * s.at(k) / s.at(k + h));
  });
  return out;
}

std::variant<InvariantTriple, NotConstant> extract_invariants(const NormalizedTable& nt) {
  const ActionTable& t = nt.normalized;
  const Range& kr = t.k_range();
  if (kr.size() < 2 || !t.h_range().contains(1) || !t.h_range().contains(-1) || !t.j_range().contains(1))
    throw Error(ErrorCode::MissingData, "invariants need (1,0), (-1,0) and (0,1) entries on two consecutive degrees");
  std::optional<RationalFunction> p;
  for (int k = kr.lo; k < kr.hi; ++k) {
    RationalFunction pk = t.f(1, 0, k) * t.f(-1, 0, k + 1);
    if (!p) {
      p = pk;
    } else if (!(pk == *p)) {
      return NotConstant{"p", k, *p, pk};
    }
  }
  for (int k = kr.lo; k <= kr.hi; ++k)
    if (t.f(0, 1, k).is_zero()) throw Error(ErrorCode::ZeroEntry, "f(0,1," + std::to_string(k) + ") = 0");
  std::optional<RationalFunction> b;
  for (int k = kr.lo; k < kr.hi; ++k) {
    RationalFunction bk = t.f(0, 1, k + 1) / t.f(0, 1, k);
    if (!b) {
      b = bk;
    } else if (!(bk == *b)) {
      return NotConstant{"b", k, *b, bk};
    }
  }
  RationalFunction a = t.f(0, 1, nt.anchor) * pow(*b, -nt.anchor);
  return InvariantTriple{*p, *b, a};
}

DegeneracyVerdict degeneracy_test(const ActionTable& t) {
  const Range& kr = t.k_range();
  for (int k = kr.lo; k <= kr.hi; ++k)
    if (!t.dim(k)) return {DegeneracyVerdict::Kind::HasZeroDims, k};
  for (int k = kr.lo; k < kr.hi; ++k)
    if (t.f(1, 0, k).is_zero() || t.f(-1, 0, k + 1).is_zero()) return {DegeneracyVerdict::Kind::Degenerate, k};
  return {DegeneracyVerdict::Kind::Nondegenerate, 0};
}

std::string to_string(RelationCheck::Status s) {
  switch (s) {
    case RelationCheck::Status::Pass: return "pass";
    case RelationCheck::Status::Fail: return "fail";
    case RelationCheck::Status::Skipped: return "skipped";
  }
  return "?";
}

namespace {

class RelationRunner {
 public:
  explicit RelationRunner(std::string name) { check_.name = std::move(name); }

  // `sides` returns (lhs, rhs); evaluation failures count as mismatches.
  void instance(const std::string& where, const std::function<std::pair<RationalFunction, RationalFunction>()>& sides) {
    ++check_.checked;
    std::string witness;
    try {
      auto [lhs, rhs] = sides();
      if (lhs == rhs) return;
      witness = where + " lhs=" + print_canonical(lhs) + " rhs=" + print_canonical(rhs);
    } catch (const Error& e) {
      witness = where + " undefined: " + e.what();
    }
    if (check_.failed++ == 0) check_.witness = witness;
  }

  RelationCheck finish() {
    if (check_.checked == 0) {
      check_.status = RelationCheck::Status::Skipped;
      check_.witness = "no admissible index in the window";
    } else {
      check_.status = check_.failed == 0 ? RelationCheck::Status::Pass : RelationCheck::Status::Fail;
    }
    return check_;
  }

 private:
  RelationCheck check_;
};

}  // namespace

std::vector<RelationCheck> verify_structure_relations(const NormalizedTable& nt, const InvariantTriple& inv) {
  const ActionTable& t = nt.normalized;
  const Range& hr = t.h_range();
  const Range& jr = t.j_range();
  const Range& kr = t.k_range();
  const int anchor = nt.anchor;
  const RationalFunction q = t.context().q();
  const RationalFunction one = 1;
  const RationalFunction& p = inv.p;
  const RationalFunction& b = inv.b;
  const RationalFunction& a = inv.a;
  // (1 - b^m) / (1 - q^m), m != 0.
  auto ratio = [&](int m) { return (one - pow(b, m)) / (one - pow(q, m)); };
  auto has = [&](int h, int j, int k) { return t.in_window(h, j, k); };
  std::vector<RelationCheck> out;

  {
    RelationRunner r("shift-invariance");
    for (int m = hr.lo; m <= hr.hi; ++m) {
      if (m == 0 || !has(m, 0, anchor)) continue;
      for (int k = kr.lo; k <= kr.hi; ++k) {
        if (k == anchor || !has(m, 0, k)) continue;
        r.instance(idx({{"m", m}, {"k", k}}), [&] { return std::pair{t.f(m, 0, k), t.f(m, 0, anchor)}; });
      }
    }
    out.push_back(r.finish());
  }
  {
    RelationRunner r("difference-product");
    const RationalFunction target = (one - q) * (one - one / q);
    if (jr.contains(1) && jr.contains(-1)) {
      for (int k = kr.lo; k < kr.hi; ++k) {
        r.instance(idx({{"k", k}}), [&] {
          return std::pair{(t.f(0, 1, k) - t.f(0, 1, k + 1)) * (t.f(0, -1, k) - t.f(0, -1, k + 1)), target};
        });
      }
    }
    out.push_back(r.finish());
  }
  {
    RelationRunner r("power-ratio");
    for (int m = hr.lo; m < hr.hi; ++m) {
      if (m == 0 || m == -1 || !has(m, 0, anchor) || !has(m + 1, 0, anchor)) continue;
      r.instance(idx({{"m", m}}), [&] {
        return std::pair{ratio(m + 1) * t.f(m + 1, 0, anchor), ratio(1) * ratio(m) * t.f(m, 0, anchor)};
      });
    }
    out.push_back(r.finish());
  }
  {
    RelationRunner r("first-t2-step");
    if (jr.contains(1)) {
      for (int m = hr.lo; m <= hr.hi; ++m) {
        if (m == 0) continue;
        for (int k = kr.lo; k <= kr.hi; ++k) {
          if (!has(m, 1, k)) continue;
          r.instance(idx({{"m", m}, {"k", k}}), [&] {
            return std::pair{t.f(m, 1, k), a * pow(b, k) * ratio(m) * t.f(m, 0, k)};
          });
        }
      }
    }
    out.push_back(r.finish());
  }
  {
    RelationRunner r("t2-power");
    for (int m = hr.lo; m <= hr.hi; ++m) {
      if (m == 0 || !has(m, 0, anchor)) continue;
      for (int j = jr.lo; j <= jr.hi; ++j) {
        for (int k = kr.lo; k <= kr.hi; ++k) {
          if (!has(m, j, k)) continue;
          r.instance(idx({{"m", m}, {"j", j}, {"k", k}}), [&] {
            return std::pair{t.f(m, j, k), pow(a * pow(b, k) * ratio(m), j) * t.f(m, 0, anchor)};
          });
        }
      }
    }
    out.push_back(r.finish());
  }
  {
    RelationRunner r("degree-zero-step");
    if (hr.contains(1)) {
      for (int j = jr.lo; j <= jr.hi; ++j) {
        if (j == 0) continue;
        for (int k = kr.lo + 1; k < kr.hi; ++k) {
          r.instance(idx({{"j", j}, {"k", k}}), [&] {
            return std::pair{p * (t.f(1, j, k - 1) - t.f(1, j, k)), (pow(q, -j) - one) * t.f(0, j, k)};
          });
        }
      }
    }
    out.push_back(r.finish());
  }
  {
    RelationRunner r("degree-zero-closed");
    for (int j = jr.lo; j <= jr.hi; ++j) {
      if (j == 0) continue;
      for (int k = kr.lo; k <= kr.hi; ++k) {
        r.instance(idx({{"j", j}, {"k", k}}), [&] {
          RationalFunction base = a * pow(b, k - 1) * (one - b) / (one - q);
          return std::pair{t.f(0, j, k), p * (one - pow(b, j)) / (pow(q, -j) - one) * pow(base, j)};
        });
      }
    }
    out.push_back(r.finish());
  }
  return out;
}

}  // namespace qvira
