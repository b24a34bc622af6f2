#include "qvira/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qvira/classifier.hpp"
#include "qvira/errors.hpp"
#include "qvira/expr.hpp"
#include "qvira/families.hpp"
#include "qvira/lie_algebra.hpp"
#include "qvira/presentation.hpp"
#include "qvira/table_format.hpp"

namespace qvira {

namespace {

// Time budget for the symbolic module-axiom sweep.
constexpr double kAxiomSweepSeconds = 60.0;
constexpr int kLieTriples = 100;
constexpr int kPerturbedPositions = 12;
constexpr int kFuzzCases = 1000;
constexpr std::uint64_t kSeed = 20240229;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

FieldContext numeric_context() { return FieldContext::numeric(2, 3); }

bool forward(Family f) { return f == Family::I || f == Family::II; }

Outcome module_axiom() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (Family f : kAllFamilies) {
    const AxiomSweep sweep = sweep_axioms(FamilyModule(f, RationalFunction::a()), 2, 4);
    checked += sweep.checked;
    if (sweep.failures != 0) {
      const auto& w = *sweep.first_failure;
      return fail("family " + std::string(to_string(f)) + ": " + std::to_string(sweep.failures) + " failures, x=" +
                  to_string(w.x) + " y=" + to_string(w.y) + " v=" + to_string(w.v));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d.precision(2);
  d << std::fixed << checked << " checks, 0 failures, " << secs << " s (limit " << kAxiomSweepSeconds << " s)";
  return {secs < kAxiomSweepSeconds, d.str()};
}

Outcome lie_axioms() {
  const RationalFunction q = RationalFunction::q();
  const RationalFunction a = RationalFunction::a();
  const std::vector<RationalFunction> pool = {1, -2, q, a, q * q - a, RationalFunction(1) / (q + 1), a / q};
  for (int i = 0; i < kLieTriples; ++i) {
    const std::uint64_t base = kSeed + 3U * static_cast<std::uint64_t>(i);
    const AlgebraElement x = random_element(base, 3, pool);
    const AlgebraElement y = random_element(base + 1, 3, pool);
    const AlgebraElement z = random_element(base + 2, 3, pool);
    if (!(bracket(x, y) == -bracket(y, x))) return fail("antisymmetry fails at triple " + std::to_string(i));
    const AlgebraElement jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    if (!jacobi.is_zero()) return fail("Jacobi fails at triple " + std::to_string(i) + ": " + to_string(jacobi));
    for (int u = -3; u <= 3; ++u)
      for (int v = -3; v <= 3; ++v)
        if (!is_homogeneous_of_degree(bracket(component_of_degree(x, u), component_of_degree(y, v)), u + v))
          return fail("grading fails at triple " + std::to_string(i));
  }
  return {true, std::to_string(kLieTriples) + " triples: antisymmetry, Jacobi, grading"};
}

Outcome round_trip_classification() {
  int cases = 0;
  for (const FieldContext& ctx : {FieldContext::symbolic(), numeric_context()}) {
    const RationalFunction expected_a = ctx.apply(RationalFunction::a());
    for (Family f : kAllFamilies) {
      const ClassificationResult r = classify(gen_table(f, RationalFunction::a(), 3, 3, 6, ctx));
      const auto* iso = std::get_if<IsoClass>(&r);
      const std::string tag = std::string(to_string(f)) + (ctx.is_numeric() ? " numeric" : " symbolic");
      if (!iso) return fail(tag + ": " + describe(r));
      if (iso->orientation != (forward(f) ? Orientation::Forward : Orientation::Reverse))
        return fail(tag + ": orientation " + std::string(to_string(iso->orientation)));
      if (!(iso->a == expected_a)) return fail(tag + ": a = " + print_canonical(iso->a));
      if (iso->exact_family != f) return fail(tag + ": exact family mismatch");
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " tables (symbolic and q=2, a=3)"};
}

std::map<int, RationalFunction> random_scales(std::mt19937_64& rng, const Range& kr) {
  std::uniform_int_distribution<long> num(1, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::bernoulli_distribution negative(0.5);
  std::map<int, RationalFunction> s;
  for (int k = kr.lo; k <= kr.hi; ++k) {
    const long n = num(rng);
    s[k] = RationalFunction(Rational(negative(rng) ? -n : n, den(rng)));
  }
  return s;
}

Outcome gauge_invariance() {
  std::mt19937_64 rng(kSeed);
  int cases = 0;
  for (const FieldContext& ctx : {FieldContext::symbolic(), numeric_context()}) {
    for (Family f : kAllFamilies) {
      const TableDocument doc = gen_table(f, RationalFunction::a(), 3, 3, 6, ctx);
      const auto base = std::get<IsoClass>(classify(doc));
      for (int trial = 0; trial < 2; ++trial) {
        const ActionTable t = ActionTable::from_document(doc);
        const ClassificationResult r = classify(rescale_basis(t, random_scales(rng, t.k_range())).to_document());
        const auto* iso = std::get_if<IsoClass>(&r);
        if (!iso || iso->orientation != base.orientation || !(iso->a == base.a))
          return fail(std::string(to_string(f)) + " rescaled: " + describe(r));
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " rescaled tables keep orientation and a"};
}

Outcome trivial_branch() {
  const ActionTable zero(FieldContext::symbolic(), {-6, 6}, std::vector<bool>(13, true), {-3, 3}, {-3, 3});
  const ClassificationResult r0 = classify(zero.to_document());
  if (!std::holds_alternative<TrivialSum>(r0)) return fail("all-zero table: " + describe(r0));
  ActionTable t = ActionTable::from_document(gen_table(Family::I, RationalFunction::a(), 3, 3, 6, FieldContext::symbolic()));
  t.set(1, 0, 0, 0);
  const ClassificationResult r1 = classify(t.to_document());
  const auto* bad = std::get_if<Inconsistent>(&r1);
  if (!bad || bad->reason != InconsistencyReason::DegenerateNonzero) return fail("f(1,0,0)=0 table: " + describe(r1));
  return {true, "all-zero -> TrivialSum, f(1,0,0)=0 -> DegenerateNonzero"};
}

Outcome perturbation() {
  const ActionTable t = ActionTable::from_document(gen_table(Family::I, RationalFunction::a(), 3, 3, 6, FieldContext::symbolic()));
  std::vector<std::tuple<int, int, int>> positions;
  t.for_each_index([&](int h, int j, int k) { positions.emplace_back(h, j, k); });
  std::mt19937_64 rng(kSeed);
  std::shuffle(positions.begin(), positions.end(), rng);
  for (int i = 0; i < kPerturbedPositions; ++i) {
    const auto [h, j, k] = positions[static_cast<std::size_t>(i)];
    ActionTable p = t;
    p.set(h, j, k, t.f(h, j, k) + 1);
    if (validate_table(p, 1).valid())
      return fail("f(" + std::to_string(h) + "," + std::to_string(j) + "," + std::to_string(k) + ")+1 not detected");
  }
  return {true, std::to_string(kPerturbedPositions) + " perturbed positions all violate the bracket relation"};
}

Outcome characteristic() {
  const RationalFunction q = RationalFunction::q();
  const CharacteristicEquation eq = characteristic_equation(1);
  const auto* two = std::get_if<TwoRoots>(&eq.roots);
  if (!two) return fail("characteristic_equation(1) has no distinct roots");
  const RationalFunction inv = RationalFunction(1) / q;
  const bool roots_ok = (two->first == q && two->second == inv) || (two->first == inv && two->second == q);
  if (!roots_ok) return fail("roots " + print_canonical(two->first) + ", " + print_canonical(two->second));
  for (const RationalFunction& b : {q * q, RationalFunction(2), RationalFunction::a()})
    if (orientation_from_b(b) != Orientation::Neither) return fail("b = " + print_canonical(b) + " not Neither");
  return {true, "roots {q, q^-1}; q^2, 2, a -> Neither"};
}

Outcome closed_forms() {
  const RationalFunction q = RationalFunction::q();
  const RationalFunction a = RationalFunction::a();
  const RationalFunction qinv = RationalFunction(1) / q;
  struct Case {
    RationalFunction b;
    RationalFunction lambda;
    Family family;
  };
  const Case cases[] = {{q, 1, Family::I}, {q, -1, Family::II}, {qinv, 1, Family::III}, {qinv, -1, Family::IV}};
  int checked = 0;
  for (const Case& c : cases) {
    for (int m = -3; m <= 3; ++m)
      for (int j = -3; j <= 3; ++j)
        for (int k = -3; k <= 3; ++k) {
          if (m == 0 && j == 0) continue;
          if (!(closed_form_f(c.b, c.lambda, m, j, k, a) == action_coeff(c.family, a, m, j, k)))
            return fail("family " + std::string(to_string(c.family)) + " at (" + std::to_string(m) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
          ++checked;
        }
  }
  for (const RationalFunction& lambda : {RationalFunction(1), RationalFunction(-1)})
    for (int m = -5; m <= 5; ++m)
      if (m != 0 && !(closed_form_f_m00(q, lambda, m) == pow(lambda, m)))
        return fail("f(m,0,0) at b=q, m=" + std::to_string(m));
  return {true, std::to_string(checked) + " entries match; f(m,0,0) = lambda^m"};
}

Outcome relation_suite() {
  int passed = 0;
  for (const FieldContext& ctx : {FieldContext::symbolic(), numeric_context()}) {
    for (Family f : kAllFamilies) {
      const NormalizedTable nt = omega_normalize(ActionTable::from_document(gen_table(f, RationalFunction::a(), 3, 3, 6, ctx)));
      const auto extracted = extract_invariants(nt);
      const auto* inv = std::get_if<InvariantTriple>(&extracted);
      if (!inv) return fail(std::string(to_string(f)) + ": invariants not constant");
      for (const RelationCheck& rc : verify_structure_relations(nt, *inv)) {
        if (rc.status == RelationCheck::Status::Fail)
          return fail(std::string(to_string(f)) + ": " + rc.name + " " + rc.witness);
        if (rc.status == RelationCheck::Status::Pass) ++passed;
      }
    }
  }
  return {passed > 0, std::to_string(passed) + " relation checks pass, none fail"};
}

Outcome irreducibility() {
  for (Family f : kAllFamilies) {
    const auto r = check_graded_irreducible(gen_table(f, RationalFunction::a(), 3, 3, 6, FieldContext::symbolic()));
    if (!std::holds_alternative<Irreducible>(r)) return fail(std::string(to_string(f)) + " reported reducible");
  }
  const ActionTable zero(FieldContext::symbolic(), {0, 1}, {true, true}, {-1, 1}, {-1, 1});
  if (!std::holds_alternative<Reducible>(check_graded_irreducible(zero.to_document())))
    return fail("two-degree zero table reported irreducible");
  return {true, "families irreducible; two-degree zero table reducible"};
}

Outcome serialization() {
  int tables = 0;
  for (const FieldContext& ctx : {FieldContext::symbolic(), numeric_context()}) {
    for (Family f : kAllFamilies) {
      const std::string text = write_table(gen_table(f, RationalFunction::a(), 3, 3, 6, ctx));
      if (write_table(parse_table(text)) != text) return fail(std::string(to_string(f)) + " table text changed");
      ++tables;
    }
  }
  int cases = 0;
  for (std::uint64_t seed = kSeed; cases < kFuzzCases; ++seed) {
    const ExprAst e = random_expr(seed, 4);
    RationalFunction value;
    try {
      value = evaluate(e);
    } catch (const Error&) {
      continue;  // division by zero in the sample
    }
    const std::string source = to_source(e);
    if (!(evaluate(parse_expr(source)) == value)) return fail("to_source changed value: " + source);
    const std::string canonical = print_canonical(value);
    if (!(evaluate(parse_expr(canonical)) == value)) return fail("canonical form changed value: " + canonical);
    ++cases;
  }
  return {true, std::to_string(tables) + " tables byte-identical; " + std::to_string(cases) + " fuzzed expressions"};
}

}  // namespace

bool run_acceptance(std::ostream& out) {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "module axiom", module_axiom},
      {2, "Lie axioms", lie_axioms},
      {3, "round-trip classification", round_trip_classification},
      {4, "gauge invariance", gauge_invariance},
      {5, "trivial branch", trivial_branch},
      {6, "perturbation soundness", perturbation},
      {7, "characteristic machinery", characteristic},
      {8, "closed-form consistency", closed_forms},
      {9, "structure relation suite", relation_suite},
      {10, "irreducibility", irreducibility},
      {11, "serialization", serialization},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    out << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << '\n';
  }
  return all;
}

}  // namespace qvira
