#include <gtest/gtest.h>

#include "properties.hpp"

using namespace dis;
using namespace dis::testing;

namespace {

const PropertySuite& suite() {
  static const PropertySuite s = run_property_suite(10'000, 2024);
  return s;
}

void expect_clean(const Tally& t, std::size_t at_least) {
  EXPECT_EQ(t.violations, 0u) << t.first;
  EXPECT_GE(t.checked, at_least);
}

}  // namespace

TEST(Properties, RealizationIsAnOperadMorphism) { expect_clean(suite().morphism, 20'000); }
TEST(Properties, InterchangePreservesPartition) { expect_clean(suite().interchange, 10'000); }
TEST(Properties, AssociativityPreservesAlternatingTree) { expect_clean(suite().associativity, 10'000); }
TEST(Properties, BorderAndInteriorBlocksAreStable) { expect_clean(suite().border, 10'000); }
TEST(Properties, BoundaryOrderIsStable) { expect_clean(suite().order, 10'000); }

TEST(Properties, BorderFlagsAndSides) {
  auto p = realize(V(H(1, 2), H(3, 4)));
  EXPECT_EQ(border_flags(p), (std::vector<bool>{true, true, true, true}));
  auto s = side_orders(p);
  EXPECT_EQ(s[0], (std::vector<unsigned>{1, 2}));
  EXPECT_EQ(s[1], (std::vector<unsigned>{3, 4}));
  EXPECT_EQ(s[2], (std::vector<unsigned>{1, 3}));
  EXPECT_EQ(s[3], (std::vector<unsigned>{2, 4}));
}

TEST(Properties, ViolationsAreReported) {
  Tally t;
  compare_boundary(realize(H(1, 2)), realize(H(2, 1)), "swap", t, t);
  EXPECT_EQ(t.violations, 1u);
  EXPECT_EQ(t.first, "swap");
}
