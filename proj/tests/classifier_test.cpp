#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cannonball/classifier.hpp"

using namespace cannonball;

namespace {

const std::set<int> kAllowed72 = {0, 24, 9, 33, 1, 25, 49, 2, 26, 50, 16, 40, 64, 11, 23, 35, 47, 59, 71};

}  // namespace

TEST(Classify, Examples) {
  auto c25 = classify(25);
  EXPECT_TRUE(c25.allowed());
  ASSERT_TRUE(c25.decomposition);
  EXPECT_EQ(c25.decomposition->mu, 1);
  EXPECT_EQ(c25.decomposition->m1, 1);

  auto c842 = classify(842);
  EXPECT_TRUE(c842.allowed());
  ASSERT_TRUE(c842.decomposition);
  EXPECT_EQ(c842.decomposition->mu, 2);
  EXPECT_EQ(c842.decomposition->m1, 35);

  auto c7 = classify(7);
  EXPECT_EQ(c7.verdict, (ClassVerdict{ClassKind::excluded_mod12, 12, 7}));
  EXPECT_EQ(describe(c7.verdict), "ExcludedMod12(7)");

  auto c48 = classify(48);
  EXPECT_FALSE(c48.allowed());
  EXPECT_EQ(c48.verdict.kind, ClassKind::excluded_mod72_or_24);
  ASSERT_TRUE(c48.decomposition);
  EXPECT_EQ(c48.decomposition->mu, 0);
}

TEST(Classify, RejectsSmallM) {
  EXPECT_THROW(classify(1), std::invalid_argument);
  EXPECT_THROW(classify(-5), std::invalid_argument);
}

TEST(Classify, PointwiseAgreementWithResidueSet) {
  for (int M = 2; M <= 10000; ++M) {
    auto c = classify(M);
    ASSERT_EQ(c.allowed(), kAllowed72.count(M % 72) == 1) << M;
    ASSERT_EQ(c.m_value, M);
    ASSERT_EQ(12 * c.m + M % 12, M);
    if (c.decomposition) {
      ASSERT_EQ(c.decomposition->reconstruct(), M) << M;
      ASSERT_GE(c.decomposition->m1, 0);
    }
    // Every allowed M has a decomposition.
    if (c.allowed()) ASSERT_TRUE(c.decomposition) << M;
  }
}

TEST(Classify, DecompositionShapes) {
  struct Case {
    int M, mu, A, B;
  };
  for (auto [M, mu, A, B] : {Case{24, 0, 2, 0}, Case{49, 1, 2, 1}, Case{50, 2, 2, 1}, Case{40, 4, 2, 4},
                             Case{33, 9, 2, 1}, Case{59, 11, 1, 1}}) {
    auto d = classify(M).decomposition;
    ASSERT_TRUE(d) << M;
    EXPECT_EQ(d->mu, mu) << M;
    EXPECT_EQ(d->A, A) << M;
    EXPECT_EQ(d->B, B) << M;
  }
  EXPECT_FALSE(classify(12).decomposition);
  EXPECT_FALSE(classify(7).decomposition);
}

TEST(Classify, LargeValues) {
  Integer M = Integer{"1000000000000000000000000"} * 72 + 33;
  auto c = classify(M);
  EXPECT_TRUE(c.allowed());
  ASSERT_TRUE(c.decomposition);
  EXPECT_EQ(c.decomposition->mu, 9);
  EXPECT_EQ(c.decomposition->reconstruct(), M);
}

TEST(AllowedResidues, Tables) {
  EXPECT_EQ(allowed_residues(12), (std::vector<int>{0, 1, 2, 4, 9, 11}));
  EXPECT_EQ(allowed_residues(24), (std::vector<int>{0, 1, 2, 9, 11, 16, 23}));
  auto r72 = allowed_residues(72);
  EXPECT_EQ(std::set<int>(r72.begin(), r72.end()), kAllowed72);
  EXPECT_TRUE(std::is_sorted(r72.begin(), r72.end()));
  EXPECT_THROW(allowed_residues(10), std::invalid_argument);
}

TEST(AllowedResidues, Labels) {
  EXPECT_EQ(residue_class_label(72, 33), "M≡9,33 (mod 72)");
  EXPECT_EQ(residue_class_label(24, 16), "M≡16 (mod 24)");
  EXPECT_THROW(residue_class_label(72, 48), std::invalid_argument);
}

TEST(ClassKind, LabelsRoundTrip) {
  for (auto k : {ClassKind::allowed_mod72, ClassKind::allowed_mod24, ClassKind::allowed_mod12,
                 ClassKind::excluded_mod12, ClassKind::excluded_mod72_or_24})
    EXPECT_EQ(parse_class_kind(label(k)), k);
  EXPECT_FALSE(parse_class_kind("AllowedMod7"));
}
