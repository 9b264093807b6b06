#include <gtest/gtest.h>

#include "cannonball/beeckmans.hpp"
#include "cannonball/classifier.hpp"

using namespace cannonball;

namespace {

// Residue-loop reading of C4.2/C4.3: violated iff some α ≥ 2 has
// M ≡ 2^α − 1 (resp. 2^α) modulo 2^{α+2}.
bool loop_violates(long M, long offset, int max_alpha) {
  for (int alpha = 2; alpha <= max_alpha; ++alpha) {
    long mod = 1L << (alpha + 2);
    long target = (1L << alpha) + offset;
    if (((M - target) % mod + mod) % mod == 0) return true;
  }
  return false;
}

}  // namespace

TEST(Strict, ConditionExamples) {
  EXPECT_EQ(check_condition(25, ConditionId::c2).status, Status::pass);
  EXPECT_EQ(check_condition(3, ConditionId::c4_1).status, Status::violated);
  EXPECT_EQ(check_condition(842, ConditionId::c2).status, Status::pass);

  auto v48 = check_condition(48, ConditionId::c1_1);
  ASSERT_EQ(v48.status, Status::violated);
  ASSERT_EQ(v48.witnesses.size(), 1u);
  EXPECT_EQ(v48.witnesses[0].p, Integer{2});
  EXPECT_EQ(v48.witnesses[0].e, Integer{4});
}

TEST(Strict, OverallExamples) {
  EXPECT_TRUE(check_all(25).passed());
  EXPECT_TRUE(check_all(842).passed());
  EXPECT_TRUE(check_all(24).passed());

  auto r10 = check_all(10);
  EXPECT_FALSE(r10.passed());
  ASSERT_EQ(r10[ConditionId::c2].status, Status::violated);
  EXPECT_EQ(r10[ConditionId::c2].witnesses[0].p, Integer{5});
  EXPECT_EQ(r10[ConditionId::c2].witnesses[0].e, Integer{1});
}

TEST(Strict, ReportShape) {
  for (int M = 2; M <= 3000; ++M) {
    auto r = check_all(M);
    ASSERT_EQ(r.semantics, Semantics::strict);
    bool any = false;
    for (std::size_t k = 0; k < r.verdicts.size(); ++k) {
      const auto& v = r.verdicts[k];
      ASSERT_EQ(v.condition, kAllConditions[k]);
      ASSERT_EQ(v.status == Status::violated, !v.witnesses.empty());
      any = any || v.status == Status::violated;
    }
    ASSERT_EQ(r.passed(), !any);
  }
}

TEST(Strict, WitnessesReproduce) {
  for (int M = 2; M <= 20000; ++M) {
    auto r = check_all(M);
    for (ConditionId id : r.violated())
      for (const auto& w : r[id].witnesses) ASSERT_TRUE(witness_reproduces(M, id, w)) << M << " " << label(id);
  }
}

TEST(Strict, WitnessReproductionRejectsForgery) {
  Witness w;
  w.p = 5;
  w.e = 1;
  EXPECT_TRUE(witness_reproduces(10, ConditionId::c2, w));
  EXPECT_FALSE(witness_reproduces(25, ConditionId::c2, w));
  EXPECT_FALSE(witness_reproduces(11, ConditionId::c2, w));
}

TEST(Strict, ExcludedClassesAlwaysViolate) {
  for (int M = 2; M <= 10000; ++M) {
    int r = M % 12;
    if (r == 3 || r == 5 || r == 6 || r == 7 || r == 8 || r == 10) ASSERT_FALSE(check_all(M).passed()) << M;
  }
}

TEST(Strict, SurvivorsLieInAllowedClasses) {
  for (int M = 2; M <= 10000; ++M)
    if (check_all(M).passed()) ASSERT_TRUE(classify(M).allowed()) << M;
}

TEST(Strict, PowerOfTwoConditionsMatchResidueLoop) {
  for (long M = 2; M <= 100000; ++M) {
    ASSERT_EQ(check_condition(Integer{M}, ConditionId::c4_2).status == Status::violated, loop_violates(M, -1, 30))
        << M;
    ASSERT_EQ(check_condition(Integer{M}, ConditionId::c4_3).status == Status::violated, loop_violates(M, 0, 30))
        << M;
  }
}

TEST(Strict, LargeInput) {
  Integer M = Integer{"170141183460469231731687303715884105727"} * 2;
  auto r = check_all(M);
  EXPECT_EQ(r.m_value, M);
  EXPECT_THROW(check_all(1), std::invalid_argument);
}

TEST(Labels, RoundTrip) {
  for (ConditionId id : kAllConditions) EXPECT_EQ(parse_condition(label(id)), id);
  EXPECT_EQ(label(ConditionId::c4_1), "C4.1");
  EXPECT_EQ(parse_status("violated"), Status::violated);
  EXPECT_EQ(parse_semantics("literal"), Semantics::literal);
  EXPECT_FALSE(parse_condition("C5"));
}
