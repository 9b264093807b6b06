#include <gtest/gtest.h>

#include <random>

#include "cannonball/arith.hpp"
#include "cannonball/fixed_width.hpp"

using namespace cannonball;

TEST(SumSquares, KnownValues) {
  EXPECT_EQ(sum_squares(1, 24), 4900);
  EXPECT_EQ(sum_squares(3, 2), 25);
  EXPECT_EQ(sum_squares(20, 2), 841);
  EXPECT_EQ(sum_squares(7, 33), 20449);
  EXPECT_EQ(sum_squares(25, 26), 38025);
  EXPECT_EQ(sum_squares(1, 1), 1);
}

TEST(SumSquares, ClosedFormMatchesDirectSummation) {
  for (int M = 1; M <= 200; ++M)
    for (int a = 1; a <= 200; ++a)
      ASSERT_EQ(sum_squares(a, M), sum_squares(a, M, SumMode::direct)) << "a=" << a << " M=" << M;
}

TEST(SumSquares, LargeArguments) {
  Integer a{"123456789012345678901234567890"};
  EXPECT_EQ(sum_squares(a, 37), sum_squares(a, 37, SumMode::direct));
}

TEST(SumSquares, RejectsNonPositive) {
  EXPECT_THROW(sum_squares(0, 5), std::invalid_argument);
  EXPECT_THROW(sum_squares(5, 0), std::invalid_argument);
  EXPECT_THROW(sum_squares(-1, 5, SumMode::direct), std::invalid_argument);
}

TEST(Isqrt, SmallValues) {
  for (int n = 0; n < 10000; ++n) {
    Integer r = isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + 1) * (r + 1), n);
  }
}

TEST(Isqrt, RandomLargeValues) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240611);
  for (int k = 0; k < 500; ++k) {
    Integer n = rng.get_z_bits(1 + k % 400);
    Integer r = isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + 1) * (r + 1), n);
  }
}

TEST(Isqrt, RejectsNegative) { EXPECT_THROW(isqrt(-1), std::invalid_argument); }

TEST(PerfectSquare, SquaresAndNeighbours) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(7);
  for (int k = 0; k < 500; ++k) {
    Integer s = rng.get_z_bits(1 + k % 300);
    auto hit = is_perfect_square(s * s);
    ASSERT_TRUE(hit);
    EXPECT_EQ(*hit, s);
    if (s > 1) {
      EXPECT_FALSE(is_perfect_square(s * s + 1));
      EXPECT_FALSE(is_perfect_square(s * s - 1));
    }
  }
  EXPECT_EQ(is_perfect_square(0), Integer{0});
  EXPECT_FALSE(is_perfect_square(-4));
}

TEST(PerfectSquare, FixedWidthAgreesWithGmp) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 20000; ++k) {
    detail::u128 n = (detail::u128{rng()} << 60) ^ rng();
    if (k % 3 == 0) {
      detail::u128 r = rng() >> 2;
      n = r * r;
    }
    Integer big = detail::from_u128(n);
    auto fast = detail::square_root_u128(n);
    auto slow = is_perfect_square(big);
    ASSERT_EQ(fast.has_value(), slow.has_value());
    if (fast) ASSERT_EQ(detail::from_u128(*fast), *slow);
    ASSERT_EQ(detail::to_u128(big), n);
  }
}

TEST(ExactDiv, ThrowsOnRemainder) {
  EXPECT_EQ(exact_div(144, 12), 12);
  EXPECT_THROW(exact_div(145, 12), std::logic_error);
}

TEST(ParseInteger, RoundTripAndErrors) {
  Integer big{"-98765432109876543210987654321"};
  EXPECT_EQ(parse_integer(to_string(big)), big);
  EXPECT_EQ(parse_integer("42"), 42);
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
  EXPECT_THROW(parse_integer("12x"), std::invalid_argument);
  EXPECT_THROW(parse_integer("0x10"), std::invalid_argument);
}
