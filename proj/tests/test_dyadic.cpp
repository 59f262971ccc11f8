#include <gtest/gtest.h>

#include "dis/dyadic.hpp"

using dis::DyadicRational;

TEST(Dyadic, NormalizesToLowestTerms) {
  DyadicRational a(4, 3);
  EXPECT_EQ(a.numerator(), 1);
  EXPECT_EQ(a.exponent(), 1u);
  EXPECT_EQ(a, DyadicRational::half());
  EXPECT_EQ(DyadicRational(0, 9).exponent(), 0u);
}

TEST(Dyadic, Arithmetic) {
  const DyadicRational q(1, 2), h = DyadicRational::half();
  EXPECT_EQ(q + q, h);
  EXPECT_EQ(h - q, q);
  EXPECT_EQ(h * h, q);
  EXPECT_EQ(DyadicRational::midpoint(q, h), DyadicRational(3, 3));
  EXPECT_EQ(DyadicRational::one().scaled_down(3), DyadicRational(1, 3));
  EXPECT_EQ(DyadicRational(3, 2) - DyadicRational(3, 2), DyadicRational::zero());
}

TEST(Dyadic, Ordering) {
  EXPECT_LT(DyadicRational(1, 3), DyadicRational(1, 2));
  EXPECT_LT(DyadicRational(3, 3), DyadicRational(1, 1));
  EXPECT_GT(DyadicRational(5, 3), DyadicRational(1, 1));
  EXPECT_LT(DyadicRational(-1, 1), DyadicRational::zero());
}

TEST(Dyadic, TextForms) {
  EXPECT_EQ(DyadicRational(3, 3).str(), "3/2^3");
  EXPECT_EQ(DyadicRational::one().str(), "1/2^0");
  EXPECT_EQ(DyadicRational::parse("3/2^3"), DyadicRational(3, 3));
  EXPECT_EQ(DyadicRational::parse("6/16"), DyadicRational(3, 3));
  EXPECT_EQ(DyadicRational::parse("1"), DyadicRational::one());
  EXPECT_EQ(DyadicRational::parse("-1/2"), DyadicRational(-1, 1));
  for (const char* bad : {"", "1/3", "1/2^", "a", "1/0", "1/2^99"}) EXPECT_THROW(DyadicRational::parse(bad), dis::parse_error) << bad;
}

TEST(Dyadic, ExponentOverflowDetected) {
  const DyadicRational tiny(1, 40);
  EXPECT_THROW(tiny * tiny, dis::error);
  EXPECT_THROW(tiny.scaled_down(30), dis::error);
}

TEST(Dyadic, ExactSums) {
  DyadicRational total;
  for (unsigned k = 1; k <= 40; ++k) total = total + DyadicRational(1, k);
  EXPECT_EQ(total + DyadicRational(1, 40), DyadicRational::one());
}
