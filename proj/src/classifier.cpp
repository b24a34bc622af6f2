#include "qvira/classifier.hpp"

#include <sstream>

#include "qvira/errors.hpp"

namespace qvira {

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::Forward: return "Forward";
    case Orientation::Reverse: return "Reverse";
    case Orientation::Neither: return "Neither";
  }
  return "?";
}

std::string_view to_string(InconsistencyReason r) {
  switch (r) {
    case InconsistencyReason::BracketRelation: return "BracketRelation";
    case InconsistencyReason::DegenerateNonzero: return "DegenerateNonzero";
    case InconsistencyReason::PNotOne: return "PNotOne";
    case InconsistencyReason::BadRatio: return "BadRatio";
    case InconsistencyReason::ClosedFormMismatch: return "ClosedFormMismatch";
    case InconsistencyReason::WindowTooSmall: return "WindowTooSmall";
  }
  return "?";
}

namespace {

std::string entry_text(int h, int j, int k, const RationalFunction& v) {
  return "f(" + std::to_string(h) + "," + std::to_string(j) + "," + std::to_string(k) + ")=" + print_canonical(v);
}

// Entry of the normalized closed model for the given orientation.
RationalFunction closed_model(Orientation o, const RationalFunction& a, const RationalFunction& q, int h, int j,
                              int k) {
  if (o == Orientation::Forward) return pow(a * pow(q, k), j);
  return sign_power(h + j + 1) * pow(a * pow(q, -k - h), j);
}

}  // namespace

ClassificationResult classify(const TableDocument& doc) {
  const ActionTable t = ActionTable::from_document(doc);
  const Range& hr = t.h_range();
  const Range& jr = t.j_range();
  const Range& kr = t.k_range();
  if (hr.lo > -2 || hr.hi < 2 || jr.lo > -2 || jr.hi < 2 || kr.size() < 5) {
    return Inconsistent{InconsistencyReason::WindowTooSmall,
                        "need h and j ranges covering [-2,2] and at least 5 degrees"};
  }

  const DegeneracyVerdict degeneracy = degeneracy_test(t);
  if (degeneracy.kind != DegeneracyVerdict::Kind::Nondegenerate) {
    if (t.is_all_zero()) return TrivialSum{};
    std::string witness;
    t.for_each_index([&](int h, int j, int k) {
      if (witness.empty() && !t.f(h, j, k).is_zero()) witness = entry_text(h, j, k, t.f(h, j, k));
    });
    const char* what = degeneracy.kind == DegeneracyVerdict::Kind::HasZeroDims ? "zero-dimensional degree "
                                                                                : "t1^-1 t1 vanishes at degree ";
    return Inconsistent{InconsistencyReason::DegenerateNonzero,
                        what + std::to_string(degeneracy.k) + " but " + witness + " (on this window)"};
  }

  const ValidationReport report = validate_table(t, 1);
  if (!report.valid()) return Inconsistent{InconsistencyReason::BracketRelation, describe(report.violations.front())};

  const NormalizedTable nt = omega_normalize(t);
  std::variant<InvariantTriple, NotConstant> extracted;
  try {
    extracted = extract_invariants(nt);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroEntry) throw;
    return Inconsistent{InconsistencyReason::BadRatio, e.what()};
  }
  if (const auto* nc = std::get_if<NotConstant>(&extracted)) {
    const auto reason = nc->quantity == "p" ? InconsistencyReason::PNotOne : InconsistencyReason::BadRatio;
    return Inconsistent{reason, nc->quantity + " changes at k=" + std::to_string(nc->k) + ": " +
                                    print_canonical(nc->expected) + " then " + print_canonical(nc->found)};
  }
  const auto& inv = std::get<InvariantTriple>(extracted);
  if (!(inv.p == RationalFunction(1))) return Inconsistent{InconsistencyReason::PNotOne, "p=" + print_canonical(inv.p)};

  const RationalFunction q = t.context().q();
  const Orientation orientation = orientation_from_b(inv.b, q);
  if (orientation == Orientation::Neither) return Inconsistent{InconsistencyReason::BadRatio, "b=" + print_canonical(inv.b)};
  if (inv.a.is_zero()) return Inconsistent{InconsistencyReason::BadRatio, "a=0"};

  std::string mismatch;
  nt.normalized.for_each_index([&](int h, int j, int k) {
    if (!mismatch.empty()) return;
    const RationalFunction expected = closed_model(orientation, inv.a, q, h, j, k);
    if (!(nt.normalized.f(h, j, k) == expected))
      mismatch = entry_text(h, j, k, nt.normalized.f(h, j, k)) + " expected " + print_canonical(expected);
  });
  if (!mismatch.empty()) return Inconsistent{InconsistencyReason::ClosedFormMismatch, mismatch};

  IsoClass result{orientation, inv.a, std::nullopt};
  for (Family family : kAllFamilies) {
    bool match = true;
    t.for_each_index([&](int h, int j, int k) {
      if (match && !(t.f(h, j, k) == t.context().apply(action_coeff(family, inv.a, h, j, k)))) match = false;
    });
    if (match) {
      result.exact_family = family;
      break;
    }
  }
  return result;
}

std::string describe(const ClassificationResult& r) {
  std::ostringstream out;
  if (std::holds_alternative<TrivialSum>(r)) {
    out << "verdict: TrivialSum\n";
  } else if (const auto* iso = std::get_if<IsoClass>(&r)) {
    out << "verdict: IsoClass\n"
        << "orientation: " << to_string(iso->orientation) << '\n'
        << "a: " << print_canonical(iso->a) << '\n'
        << "exact-family: " << (iso->exact_family ? to_string(*iso->exact_family) : "none") << '\n';
  } else {
    const auto& bad = std::get<Inconsistent>(r);
    out << "verdict: Inconsistent\n"
        << "reason: " << to_string(bad.reason) << '\n'
        << "witness: " << bad.witness << '\n';
  }
  return out.str();
}

CharacteristicEquation characteristic_equation(const RationalFunction& lambda_sq, const RationalFunction& q) {
  if (lambda_sq.is_zero()) throw Error(ErrorCode::BadParameter, "lambda^2 must be nonzero");
  const RationalFunction one = 1;
  RationalFunction alpha = lambda_sq;
  RationalFunction beta = -(RationalFunction(2) * lambda_sq + (one - q) * (one / q - one));
  RationalFunction gamma = lambda_sq;
  QuadraticRoots roots = solve_quadratic(alpha, beta, gamma);
  return {std::move(alpha), std::move(beta), std::move(gamma), std::move(roots)};
}

Orientation orientation_from_b(const RationalFunction& b, const RationalFunction& q) {
  const RationalFunction one = 1;
  if (b.is_zero()) throw Error(ErrorCode::BadParameter, "b must be nonzero");
  if (!((one + b) * (one + b) / b == (one + q) * (one + q) / q)) return Orientation::Neither;
  if (b == q) return Orientation::Forward;
  if (b == one / q) return Orientation::Reverse;
  return Orientation::Neither;
}

std::variant<Geometric, NotGeometric> fit_geometric(const std::vector<std::pair<int, RationalFunction>>& g) {
  if (g.size() < 3) throw Error(ErrorCode::BadParameter, "need at least three samples");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].second.is_zero()) throw Error(ErrorCode::ZeroSample, "g(" + std::to_string(g[i].first) + ") = 0");
    if (i > 0 && g[i].first != g[i - 1].first + 1) throw Error(ErrorCode::BadParameter, "samples must be consecutive");
  }
  const RationalFunction b = g[1].second / g[0].second;
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    if (!(g[i + 1].second / g[i].second == b)) return NotGeometric{g[i].first};
  return Geometric{g[0].second * pow(b, -g[0].first), b};
}

RecurrenceSolution solve_recurrence2(const RationalFunction& alpha, const RationalFunction& beta,
                                     const RationalFunction& gamma, const RationalFunction& g0,
                                     const RationalFunction& g1) {
  const QuadraticRoots roots = solve_quadratic(alpha, beta, gamma);
  if (const auto* two = std::get_if<TwoRoots>(&roots)) {
    const RationalFunction& x = two->first;
    const RationalFunction& y = two->second;
    // lambda1 + lambda2 = g0, lambda1 x + lambda2 y = g1.
    RationalFunction lambda2 = (g1 - x * g0) / (y - x);
    RationalFunction lambda1 = g0 - lambda2;
    return DistinctRootsSolution{x, y, std::move(lambda1), std::move(lambda2)};
  }
  if (const auto* rep = std::get_if<RepeatedRoot>(&roots)) {
    if (rep->root.is_zero()) throw Error(ErrorCode::SingularFit, "repeated root 0");
    // g0 = lambda1, g1 = r (lambda1 + lambda2).
    return RepeatedRootSolution{rep->root, g0, g1 / rep->root - g0};
  }
  return RootsNotInField{};
}

RationalFunction evaluate_solution(const RecurrenceSolution& s, int k) {
  if (const auto* d = std::get_if<DistinctRootsSolution>(&s)) return d->lambda1 * pow(d->x, k) + d->lambda2 * pow(d->y, k);
  if (const auto* r = std::get_if<RepeatedRootSolution>(&s))
    return pow(r->r, k) * (r->lambda1 + RationalFunction(k) * r->lambda2);
  throw Error(ErrorCode::BadParameter, "roots are not in the field");
}

}  // namespace qvira
