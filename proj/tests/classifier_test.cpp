#include "qvira/classifier.hpp"

#include <gtest/gtest.h>

#include "qvira/errors.hpp"
#include "test_support.hpp"

namespace qvira {
namespace {

using testing_support::kA;
using testing_support::kQ;

const RationalFunction kQInv = RationalFunction(1) / kQ;

ActionTable family_table(Family f, const RationalFunction& a = kA, const FieldContext& ctx = FieldContext::symbolic()) {
  return ActionTable::from_document(gen_table(f, a, 3, 3, 6, ctx));
}

Inconsistent expect_inconsistent(const ClassificationResult& r) {
  EXPECT_TRUE(std::holds_alternative<Inconsistent>(r)) << describe(r);
  return std::holds_alternative<Inconsistent>(r) ? std::get<Inconsistent>(r) : Inconsistent{};
}

TEST(ClassifyTest, RoundTripAllFamilies) {
  const RationalFunction params[] = {kA, (kA + 1) / kQ, RationalFunction(Rational(-2, 5))};
  for (const RationalFunction& a : params) {
    for (Family f : kAllFamilies) {
      const ClassificationResult r = classify(family_table(f, a).to_document());
      ASSERT_TRUE(std::holds_alternative<IsoClass>(r)) << describe(r);
      const auto& iso = std::get<IsoClass>(r);
      const bool forward = f == Family::I || f == Family::II;
      EXPECT_EQ(iso.orientation, forward ? Orientation::Forward : Orientation::Reverse);
      EXPECT_EQ(iso.a, a);
      EXPECT_EQ(iso.exact_family, f);
    }
  }
}

TEST(ClassifyTest, NumericRoundTrip) {
  const FieldContext ctx = FieldContext::numeric(2, 3);
  for (Family f : kAllFamilies) {
    const ClassificationResult r = classify(family_table(f, kA, ctx).to_document());
    ASSERT_TRUE(std::holds_alternative<IsoClass>(r)) << describe(r);
    EXPECT_EQ(std::get<IsoClass>(r).a, RationalFunction(3));
    EXPECT_EQ(std::get<IsoClass>(r).exact_family, f);
  }
}

TEST(ClassifyTest, DescribeFormat) {
  EXPECT_EQ(describe(classify(family_table(Family::III).to_document())),
            "verdict: IsoClass\norientation: Reverse\na: a\nexact-family: III\n");
  EXPECT_EQ(describe(TrivialSum{}), "verdict: TrivialSum\n");
}

TEST(ClassifyTest, RescaledTableLosesOnlyExactFamily) {
  std::mt19937_64 rng(51);
  for (Family f : kAllFamilies) {
    const ActionTable t = family_table(f);
    std::map<int, RationalFunction> s;
    for (int k = -6; k <= 6; ++k) s[k] = RationalFunction(Rational(static_cast<long>(rng() % 9) + 2, static_cast<long>(rng() % 5) + 1));
    const ClassificationResult r = classify(rescale_basis(t, s).to_document());
    ASSERT_TRUE(std::holds_alternative<IsoClass>(r)) << describe(r);
    const auto& iso = std::get<IsoClass>(r);
    EXPECT_EQ(iso.a, kA);
    EXPECT_EQ(iso.orientation, (f == Family::I || f == Family::II) ? Orientation::Forward : Orientation::Reverse);
    EXPECT_FALSE(iso.exact_family.has_value());
  }
}

TEST(ClassifyTest, TrivialAndDegenerate) {
  const ActionTable zero(FieldContext::symbolic(), {-6, 6}, std::vector<bool>(13, true), {-3, 3}, {-3, 3});
  EXPECT_TRUE(std::holds_alternative<TrivialSum>(classify(zero.to_document())));

  ActionTable broken = family_table(Family::I);
  broken.set(1, 0, 0, 0);
  EXPECT_EQ(expect_inconsistent(classify(broken.to_document())).reason, InconsistencyReason::DegenerateNonzero);

  // Valid as a presentation but degenerate: only t2 acts, and only on the lowest degree.
  ActionTable lone = zero;
  lone.set(0, 1, -6, kA);
  EXPECT_TRUE(validate_table(lone).valid());
  EXPECT_EQ(expect_inconsistent(classify(lone.to_document())).reason, InconsistencyReason::DegenerateNonzero);

  std::vector<bool> dims(13, true);
  dims[3] = false;
  const ActionTable gap(FieldContext::symbolic(), {-6, 6}, dims, {-3, 3}, {-3, 3});
  EXPECT_TRUE(std::holds_alternative<TrivialSum>(classify(gap.to_document())));
}

TEST(ClassifyTest, PerturbedTableBreaksBracketRelation) {
  ActionTable t = family_table(Family::I);
  t.set(2, -1, 1, t.f(2, -1, 1) + 1);
  const Inconsistent bad = expect_inconsistent(classify(t.to_document()));
  EXPECT_EQ(bad.reason, InconsistencyReason::BracketRelation);
  EXPECT_NE(bad.witness.find("lhs="), std::string::npos);
}

TEST(ClassifyTest, WindowTooSmall) {
  const ClassificationResult r = classify(gen_table(Family::I, kA, 1, 3, 6, FieldContext::symbolic()));
  EXPECT_EQ(expect_inconsistent(r).reason, InconsistencyReason::WindowTooSmall);
  EXPECT_EQ(expect_inconsistent(classify(gen_table(Family::I, kA, 3, 3, 1, FieldContext::symbolic()))).reason,
            InconsistencyReason::WindowTooSmall);
}

TEST(ClassifyTest, ModuleOverWrongParameterOfQ) {
  // Family I with q replaced by q^2 is a module of a different algebra; the
  // bracket relation already fails.
  ActionTable t = family_table(Family::I);
  t.for_each_index([&](int h, int j, int k) { t.set(h, j, k, pow(kA * pow(kQ, 2 * k), j)); });
  EXPECT_EQ(expect_inconsistent(classify(t.to_document())).reason, InconsistencyReason::BracketRelation);
}

TEST(CharacteristicTest, RootsForUnitEigenvalue) {
  const CharacteristicEquation eq = characteristic_equation(1);
  EXPECT_EQ(eq.alpha, RationalFunction(1));
  EXPECT_EQ(eq.gamma, RationalFunction(1));
  // Oracle: (x - q)(x - q^-1) = x^2 - (q + q^-1) x + 1.
  EXPECT_EQ(eq.beta, -(kQ + kQInv));
  const auto* two = std::get_if<TwoRoots>(&eq.roots);
  ASSERT_NE(two, nullptr);
  EXPECT_TRUE((two->first == kQ && two->second == kQInv) || (two->first == kQInv && two->second == kQ));
}

TEST(CharacteristicTest, RepeatedRootMinusOne) {
  // lambda^2 with (1-q)(q^-1-1) = -4 lambda^2.
  const RationalFunction lambda_sq = -((RationalFunction(1) - kQ) * (kQInv - 1)) / 4;
  const CharacteristicEquation eq = characteristic_equation(lambda_sq);
  ASSERT_TRUE(std::holds_alternative<RepeatedRoot>(eq.roots));
  EXPECT_EQ(std::get<RepeatedRoot>(eq.roots).root, RationalFunction(-1));
  EXPECT_THROW(characteristic_equation(0), Error);
}

TEST(CharacteristicTest, NumericQ) {
  const CharacteristicEquation eq = characteristic_equation(1, RationalFunction(3));
  const auto& two = std::get<TwoRoots>(eq.roots);
  EXPECT_EQ(two.first * two.second, RationalFunction(1));
  EXPECT_TRUE(two.first == RationalFunction(3) || two.second == RationalFunction(3));
}

TEST(OrientationTest, Examples) {
  EXPECT_EQ(orientation_from_b(kQ), Orientation::Forward);
  EXPECT_EQ(orientation_from_b(kQInv), Orientation::Reverse);
  EXPECT_EQ(orientation_from_b(kQ * kQ), Orientation::Neither);
  EXPECT_EQ(orientation_from_b(2), Orientation::Neither);
  EXPECT_EQ(orientation_from_b(kA), Orientation::Neither);
  EXPECT_EQ(orientation_from_b(-kQ), Orientation::Neither);
  EXPECT_EQ(orientation_from_b(RationalFunction(Rational(1, 2)), 2), Orientation::Reverse);
}

TEST(FitGeometricTest, Examples) {
  std::vector<std::pair<int, RationalFunction>> up, down;
  for (int k = -2; k <= 2; ++k) {
    up.emplace_back(k, kA * pow(kQ, k));
    down.emplace_back(k, kA * pow(kQ, -k));
  }
  const auto g1 = std::get<Geometric>(fit_geometric(up));
  EXPECT_EQ(g1.a, kA);
  EXPECT_EQ(g1.b, kQ);
  const auto g2 = std::get<Geometric>(fit_geometric(down));
  EXPECT_EQ(g2.a, kA);
  EXPECT_EQ(g2.b, kQInv);
  const auto ng = fit_geometric({{0, 1}, {1, 1}, {2, 2}});
  ASSERT_TRUE(std::holds_alternative<NotGeometric>(ng));
  EXPECT_EQ(std::get<NotGeometric>(ng).k, 1);
  EXPECT_THROW(fit_geometric({{0, 1}, {1, 0}, {2, 2}}), Error);
  EXPECT_THROW(fit_geometric({{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(fit_geometric({{0, 1}, {2, 1}, {3, 1}}), Error);
}

TEST(RecurrenceTest, Examples) {
  const RecurrenceSolution s = solve_recurrence2(1, -(kQ + kQInv), 1, kA, kA * kQ);
  ASSERT_TRUE(std::holds_alternative<DistinctRootsSolution>(s));
  const auto& d = std::get<DistinctRootsSolution>(s);
  EXPECT_EQ(d.x, kQ);
  EXPECT_EQ(d.lambda1, kA);
  EXPECT_TRUE(d.lambda2.is_zero());
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(evaluate_solution(s, k), kA * pow(kQ, k));

  const RationalFunction c = kQ + 5;
  const RecurrenceSolution r = solve_recurrence2(1, 2, 1, c, -c);
  ASSERT_TRUE(std::holds_alternative<RepeatedRootSolution>(r));
  const auto& rep = std::get<RepeatedRootSolution>(r);
  EXPECT_EQ(rep.r, RationalFunction(-1));
  EXPECT_EQ(rep.lambda1, c);
  EXPECT_TRUE(rep.lambda2.is_zero());

  EXPECT_TRUE(std::holds_alternative<RootsNotInField>(solve_recurrence2(1, 0, -kQ, 1, 1)));
  EXPECT_THROW(solve_recurrence2(0, 1, 1, 1, 1), Error);
}

TEST(RecurrenceTest, SolutionSatisfiesRecurrence) {
  // Oracle: iterate the recurrence forward from g0, g1.
  const RationalFunction alpha = 2, beta = -(kQ + 2 * kA), gamma = kQ * kA;  // roots q/2 and a
  const RationalFunction g0 = kA + 1, g1 = kQ - 3;
  const RecurrenceSolution s = solve_recurrence2(alpha, beta, gamma, g0, g1);
  ASSERT_TRUE(std::holds_alternative<DistinctRootsSolution>(s));
  std::vector<RationalFunction> g = {g0, g1};
  for (int k = 1; k < 5; ++k) g.push_back(-(beta * g[k] + gamma * g[k - 1]) / alpha);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(evaluate_solution(s, k), g[k]) << k;

  const RecurrenceSolution rep = solve_recurrence2(1, -2 * kQ, kQ * kQ, 1, kQ * 3);
  std::vector<RationalFunction> h = {1, kQ * 3};
  for (int k = 1; k < 5; ++k) h.push_back(2 * kQ * h[k] - kQ * kQ * h[k - 1]);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(evaluate_solution(rep, k), h[k]) << k;
}

}  // namespace
}  // namespace qvira
