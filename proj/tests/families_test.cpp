#include "qvira/families.hpp"

#include <gtest/gtest.h>

#include "qvira/errors.hpp"
#include "qvira/presentation.hpp"
#include "test_support.hpp"

namespace qvira {
namespace {

using testing_support::kA;
using testing_support::kQ;

AlgebraElement t(int h, int j, const RationalFunction& c = 1) { return AlgebraElement::basis(h, j, c); }

// Independent transcription of the four action formulas.
RationalFunction oracle_coeff(Family f, const RationalFunction& a, int m, int n, int k) {
  const RationalFunction up = a * pow(kQ, k);
  const RationalFunction down = a * pow(kQ, -k - m);
  switch (f) {
    case Family::I: return pow(up, n);
    case Family::II: return pow(RationalFunction(-1), m) * pow(up, n);
    case Family::III: return pow(RationalFunction(-1), m + n + 1) * pow(down, n);
    case Family::IV: return pow(RationalFunction(-1), n + 1) * pow(down, n);
  }
  return 0;
}

TEST(ActionCoeffTest, HandComputedValues) {
  EXPECT_EQ(action_coeff(Family::I, kA, 0, 2, 3), kA * kA * pow(kQ, 6));
  for (int k = -4; k <= 4; ++k) EXPECT_EQ(action_coeff(Family::I, kA, 1, 0, k), RationalFunction(1));
  EXPECT_EQ(action_coeff(Family::II, kA, 3, 1, 0), -kA);
  EXPECT_EQ(action_coeff(Family::III, kA, 0, 1, 2), kA / (kQ * kQ));
  EXPECT_EQ(action_coeff(Family::IV, kA, 1, 1, 0), kA / kQ);
}

TEST(ActionCoeffTest, MatchesOracleOnWindow) {
  const RationalFunction a = kA * kQ + 2;
  for (Family f : kAllFamilies)
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n)
        for (int k = -3; k <= 3; ++k)
          if (m != 0 || n != 0) ASSERT_EQ(action_coeff(f, a, m, n, k), oracle_coeff(f, a, m, n, k));
}

TEST(ActionCoeffTest, TableRelationHoldsForOracle) {
  // f(m,n,k) f(h,j,k+m) - f(h,j,k) f(m,n,k+h) = (q^{jm} - q^{nh}) f(h+m,j+n,k)
  for (Family f : kAllFamilies)
    for (int h = -2; h <= 2; ++h)
      for (int j = -2; j <= 2; ++j)
        for (int m = -2; m <= 2; ++m)
          for (int n = -2; n <= 2; ++n) {
            if ((h == 0 && j == 0) || (m == 0 && n == 0)) continue;
            for (int k = -2; k <= 2; ++k) {
              const RationalFunction lhs = oracle_coeff(f, kA, m, n, k) * oracle_coeff(f, kA, h, j, k + m) -
                                           oracle_coeff(f, kA, h, j, k) * oracle_coeff(f, kA, m, n, k + h);
              const RationalFunction rhs = (h + m == 0 && j + n == 0)
                                               ? RationalFunction()
                                               : (pow(kQ, j * m) - pow(kQ, n * h)) * oracle_coeff(f, kA, h + m, j + n, k);
              ASSERT_EQ(lhs, rhs);
            }
          }
}

TEST(ActionCoeffTest, RejectsBadArguments) {
  EXPECT_THROW(action_coeff(Family::I, kA, 0, 0, 0), Error);
  EXPECT_THROW(action_coeff(Family::I, 0, 1, 0, 0), Error);
  EXPECT_THROW(FamilyModule(Family::II, 0), Error);
  EXPECT_EQ(parse_family("III"), Family::III);
  EXPECT_THROW(parse_family("V"), Error);
}

TEST(ActTest, Examples) {
  const FamilyModule m1(Family::I, kA);
  for (int k = -2; k <= 2; ++k) EXPECT_EQ(act(m1, t(0, 1), GradedVector::basis(k)), GradedVector::basis(k, kA * pow(kQ, k)));
  EXPECT_TRUE(act(m1, AlgebraElement(), GradedVector::basis(3)).is_zero());
  const GradedVector v = GradedVector::basis(0) + GradedVector::basis(1);
  EXPECT_EQ(act(m1, t(0, 1), v), GradedVector::basis(0, kA) + GradedVector::basis(1, kA * kQ));
  EXPECT_TRUE(act(TrivialSumModule{{0, 1}}, t(1, 1), v).is_zero());
}

TEST(VerifyAxiomTest, Examples) {
  const FamilyModule m1(Family::I, kA);
  for (int k = -2; k <= 2; ++k) {
    EXPECT_FALSE(verify_axiom(m1, t(0, 1), t(1, 0), GradedVector::basis(k)).has_value());
    // Hand expansion: [t2, t1] = (q-1) t1 t2, acting by (q-1) a q^k.
    EXPECT_EQ(act(m1, bracket(t(0, 1), t(1, 0)), GradedVector::basis(k)),
              GradedVector::basis(k + 1, (kQ - 1) * kA * pow(kQ, k)));
    EXPECT_FALSE(verify_axiom(m1, t(1, 0), t(-1, 0), GradedVector::basis(k)).has_value());
  }
  const FamilyModule m3(Family::III, kA + kQ);
  const AlgebraElement x = t(2, -1, kQ) + t(-1, 1);
  EXPECT_FALSE(verify_axiom(m3, x, x, GradedVector::basis(1)).has_value());
}

TEST(SweepTest, AllFamiliesPass) {
  for (Family f : kAllFamilies) {
    const AxiomSweep s = sweep_axioms(FamilyModule(f, kA), 2, 2);
    EXPECT_EQ(s.failures, 0U) << to_string(f);
    EXPECT_EQ(s.checked, 24U * 24U * 5U);
  }
  const AxiomSweep s = sweep_axioms(FamilyModule(Family::IV, RationalFunction(Rational(-3, 5))), 1, 3);
  EXPECT_EQ(s.failures, 0U);
}

TEST(GenTableTest, WindowEnumeration) {
  const ActionTable t1 = ActionTable::from_document(gen_table(Family::I, kA, 1, 1, 1, FieldContext::symbolic()));
  int entries = 0;
  t1.for_each_index([&](int h, int j, int k) {
    ++entries;
    EXPECT_FALSE(t1.f(h, j, k).is_zero());
    EXPECT_TRUE(t1.k_range().contains(k + h));
  });
  // (h,j) in 8 indices; h = 0 has 3 admissible k, h = +-1 have 2.
  EXPECT_EQ(entries, 2 * 3 + 6 * 2);
  for (int k = -1; k <= 0; ++k) EXPECT_EQ(t1.f(1, 0, k), RationalFunction(1));
}

TEST(GenTableTest, NumericModeAndErrors) {
  const ActionTable t = ActionTable::from_document(gen_table(Family::III, kA, 1, 1, 2, FieldContext::numeric(2, 3)));
  EXPECT_EQ(t.f(0, 1, 1), RationalFunction(Rational(3, 2)));
  EXPECT_THROW(gen_table(Family::I, kA, 0, 1, 1, FieldContext::symbolic()), Error);
  EXPECT_THROW(gen_table(Family::I, kA - 3, 1, 1, 1, FieldContext::numeric(2, 3)), Error);
}

TEST(GenTableTest, GeneratedTablesValidate) {
  for (Family f : kAllFamilies) {
    const ActionTable t = ActionTable::from_document(gen_table(f, kA / (kQ + 1), 2, 2, 3, FieldContext::symbolic()));
    EXPECT_TRUE(validate_table(t).valid()) << to_string(f);
  }
}

TEST(ClosedFormTest, DegreeZeroBranchesCollapse) {
  for (int m : {1, 2, -1, -2}) {
    EXPECT_EQ(closed_form_f(kQ, 1, m, 0, 0, kA), RationalFunction(1));
    EXPECT_EQ(closed_form_f(kQ, -1, m, 0, 0, kA), pow(RationalFunction(-1), m));
  }
}

TEST(ClosedFormTest, ReproducesFamilies) {
  const RationalFunction qi = RationalFunction(1) / kQ;
  const std::pair<std::pair<RationalFunction, RationalFunction>, Family> cases[] = {
      {{kQ, 1}, Family::I}, {{kQ, -1}, Family::II}, {{qi, 1}, Family::III}, {{qi, -1}, Family::IV}};
  for (const auto& [bl, f] : cases)
    for (int m = -3; m <= 3; ++m)
      for (int j = -3; j <= 3; ++j)
        for (int k = -3; k <= 3; ++k)
          if (m != 0 || j != 0) ASSERT_EQ(closed_form_f(bl.first, bl.second, m, j, k, kA), oracle_coeff(f, kA, m, j, k));
}

TEST(ClosedFormTest, DomainChecks) {
  EXPECT_THROW(closed_form_f(kQ * kQ, 1, 1, 0, 0, kA), Error);
  EXPECT_THROW(closed_form_f(kQ, 2, 1, 0, 0, kA), Error);
  EXPECT_THROW(closed_form_f(kQ, 1, 0, 0, 0, kA), Error);
  EXPECT_THROW(closed_form_f(kQ, 1, 1, 1, 0, 0), Error);
}

TEST(IrreducibleTest, Examples) {
  for (Family f : kAllFamilies)
    EXPECT_TRUE(std::holds_alternative<Irreducible>(check_graded_irreducible(gen_table(f, kA, 2, 2, 3, FieldContext::symbolic()))));
  const ActionTable zero(FieldContext::symbolic(), {0, 1}, {true, true}, {-1, 1}, {-1, 1});
  const auto r = check_graded_irreducible(zero.to_document());
  ASSERT_TRUE(std::holds_alternative<Reducible>(r));
  EXPECT_EQ(std::get<Reducible>(r).degree, 0);

  ActionTable broken = ActionTable::from_document(gen_table(Family::I, kA, 2, 2, 3, FieldContext::symbolic()));
  broken.set(1, 0, 0, 0);
  EXPECT_TRUE(std::holds_alternative<Reducible>(check_graded_irreducible(broken.to_document())));

  const ActionTable gap(FieldContext::symbolic(), {0, 2}, {true, false, true}, {-1, 1}, {-1, 1});
  const auto g = check_graded_irreducible(gap.to_document());
  ASSERT_TRUE(std::holds_alternative<Reducible>(g));
  EXPECT_EQ(std::get<Reducible>(g).reason, "zero-dimension");
}

}  // namespace
}  // namespace qvira
