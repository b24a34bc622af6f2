#include "qvira/families.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <vector>

#include "qvira/errors.hpp"

namespace qvira {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : kAllFamilies)
    if (text == to_string(f)) return f;
  throw Error(ErrorCode::BadParameter, "unknown family '" + std::string(text) + "' (expected I, II, III or IV)");
}

RationalFunction action_coeff(Family family, const RationalFunction& a, int m, int n, int k) {
  if (m == 0 && n == 0) throw Error(ErrorCode::IndexZero, "t[0,0] is not a basis element");
  if (a.is_zero()) throw Error(ErrorCode::BadParameter, "a must be nonzero");
  const long ln = n;
  switch (family) {
    case Family::I: return pow(a, n) * q_power(k * ln);
    case Family::II: return sign_power(m) * pow(a, n) * q_power(k * ln);
    case Family::III: return sign_power(m + n + 1) * pow(a, n) * q_power(-(k + m) * ln);
    case Family::IV: return sign_power(n + 1) * pow(a, n) * q_power(-(k + m) * ln);
  }
  throw Error(ErrorCode::BadParameter, "unknown family");
}

FamilyModule::FamilyModule(Family family, RationalFunction a) : family_(family), a_(std::move(a)) {
  if (a_.is_zero()) throw Error(ErrorCode::BadParameter, "a must be nonzero");
}

GradedVector GradedVector::basis(int k, const RationalFunction& coeff) {
  GradedVector v;
  v.add(k, coeff);
  return v;
}

RationalFunction GradedVector::coordinate(int k) const {
  auto it = coords_.find(k);
  return it == coords_.end() ? RationalFunction() : it->second;
}

void GradedVector::add(int k, const RationalFunction& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(k, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) coords_.erase(it);
}

GradedVector& GradedVector::operator+=(const GradedVector& rhs) {
  for (const auto& [k, c] : rhs.coords_) add(k, c);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& rhs) {
  for (const auto& [k, c] : rhs.coords_) add(k, -c);
  return *this;
}

std::string to_string(const GradedVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : v.coords()) {
    if (!out.empty()) out += " + ";
    out += "(" + print_canonical(c) + ")*v[" + std::to_string(k) + "]";
  }
  return out;
}

GradedVector act(const FamilyModule& module, const AlgebraElement& x, const GradedVector& v) {
  GradedVector out;
  for (const auto& [index, c] : x.terms())
    for (const auto& [k, coord] : v.coords())
      out.add(k + index.h(), c * coord * action_coeff(module.family(), module.a(), index.h(), index.j(), k));
  return out;
}

std::optional<AxiomWitness> verify_axiom(const FamilyModule& module, const AlgebraElement& x,
                                         const AlgebraElement& y, const GradedVector& v) {
  GradedVector lhs = act(module, bracket(x, y), v);
  GradedVector rhs = act(module, x, act(module, y, v)) - act(module, y, act(module, x, v));
  if (lhs == rhs) return std::nullopt;
  return AxiomWitness{x, y, v, std::move(lhs), std::move(rhs)};
}

AxiomSweep sweep_axioms(const FamilyModule& module, int bound, int k_bound) {
  std::vector<AlgebraElement> basis;
  for (int h = -bound; h <= bound; ++h)
    for (int j = -bound; j <= bound; ++j)
      if (h != 0 || j != 0) basis.push_back(AlgebraElement::basis(h, j));

  // One task per first element; results are merged in index order.
  auto run = [&](std::size_t xi) {
    AxiomSweep part;
    for (const auto& y : basis) {
      for (int k = -k_bound; k <= k_bound; ++k) {
        ++part.checked;
        auto w = verify_axiom(module, basis[xi], y, GradedVector::basis(k));
        if (!w) continue;
        if (part.failures++ == 0) part.first_failure = std::move(w);
      }
    }
    return part;
  };
  const std::size_t workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  std::vector<AxiomSweep> parts(basis.size());
  for (std::size_t start = 0; start < basis.size(); start += workers) {
    std::vector<std::future<AxiomSweep>> batch;
    for (std::size_t i = start; i < std::min(basis.size(), start + workers); ++i)
      batch.push_back(std::async(std::launch::async, run, i));
    for (std::size_t i = 0; i < batch.size(); ++i) parts[start + i] = batch[i].get();
  }
  AxiomSweep total;
  for (auto& part : parts) {
    total.checked += part.checked;
    total.failures += part.failures;
    if (!total.first_failure && part.first_failure) total.first_failure = std::move(part.first_failure);
  }
  return total;
}

TableDocument gen_table(Family family, const RationalFunction& a, int h_bound, int j_bound, int k_bound,
                        const FieldContext& mode) {
  if (h_bound < 1 || j_bound < 1 || k_bound < 1) throw Error(ErrorCode::BadParameter, "bounds must be at least 1");
  if (a.is_zero()) throw Error(ErrorCode::BadParameter, "a must be nonzero");
  if (mode.apply(a).is_zero()) throw Error(ErrorCode::BadParameter, "a vanishes at the numeric point");
  ActionTable t(mode, {-k_bound, k_bound}, std::vector<bool>(2 * k_bound + 1, true), {-h_bound, h_bound},
                {-j_bound, j_bound});
  t.for_each_index([&](int h, int j, int k) { t.set(h, j, k, mode.apply(action_coeff(family, a, h, j, k))); });
  return t.to_document();
}

namespace {

void require_orientation(const RationalFunction& b, const RationalFunction& lambda) {
  const RationalFunction q = RationalFunction::q();
  if (!(b == q) && !(b == RationalFunction(1) / q)) throw Error(ErrorCode::BadParameter, "b must be q or q^-1");
  if (!(lambda == RationalFunction(1)) && !(lambda == RationalFunction(-1)))
    throw Error(ErrorCode::BadParameter, "lambda must be 1 or -1");
}

}  // namespace

RationalFunction closed_form_f_m00(const RationalFunction& b, const RationalFunction& lambda, int m) {
  require_orientation(b, lambda);
  if (m == 0) throw Error(ErrorCode::BadParameter, "m must be nonzero");
  const RationalFunction q = RationalFunction::q();
  const RationalFunction one = 1;
  const RationalFunction step = lambda * (one - b) / (one - q);
  const RationalFunction tail = (one - pow(q, m)) / (one - pow(b, m));
  if (m >= 1) return pow(step, m) * tail;
  return q / b * pow(step, m + 2) * tail;
}

RationalFunction closed_form_f(const RationalFunction& b, const RationalFunction& lambda, int m, int j, int k,
                               const RationalFunction& a) {
  require_orientation(b, lambda);
  if (a.is_zero()) throw Error(ErrorCode::BadParameter, "a must be nonzero");
  if (m == 0 && j == 0) throw Error(ErrorCode::BadParameter, "(m, j) = (0, 0) is not a basis index");
  const RationalFunction q = RationalFunction::q();
  const RationalFunction one = 1;
  if (m == 0) {
    const RationalFunction base = a * pow(b, k - 1) * (one - b) / (one - q);
    return lambda * lambda * (one - pow(b, j)) / (pow(q, -j) - one) * pow(base, j);
  }
  const RationalFunction base = a * pow(b, k) * (one - pow(b, m)) / (one - pow(q, m));
  return pow(base, j) * closed_form_f_m00(b, lambda, m);
}

std::variant<Irreducible, Reducible> check_graded_irreducible(const TableDocument& doc) {
  const ActionTable t = ActionTable::from_document(doc);
  const Range& kr = t.k_range();
  for (int k = kr.lo; k <= kr.hi; ++k)
    if (!t.dim(k)) return Reducible{k, "zero-dimension"};
  for (int k = kr.lo; k <= kr.hi; ++k) {
    if (k < kr.hi && t.f(1, 0, k).is_zero()) return Reducible{k, "up"};
    if (k > kr.lo && t.f(-1, 0, k).is_zero()) return Reducible{k, "down"};
  }
  return Irreducible{};
}

}  // namespace qvira
