#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_util.hpp"

using namespace dis;
using namespace dis::testing;

TEST(ToAlternating, FlattensEqualLabels) {
  auto a = to_alternating(H(H(1, 2), L(3)));
  ASSERT_FALSE(a.is_leaf());
  EXPECT_EQ(a.op, Op::H);
  ASSERT_EQ(a.children.size(), 3u);
  EXPECT_EQ(a.leaves(), (std::vector<unsigned>{1, 2, 3}));
  EXPECT_EQ(a, to_alternating(H(L(1), H(2, 3))));
}

TEST(ToAlternating, AlreadyAlternatingUnchanged) {
  auto a = to_alternating(H(L(1), V(2, 3)));
  ASSERT_EQ(a.children.size(), 2u);
  EXPECT_EQ(a.children[1].op, Op::V);
  EXPECT_EQ(right_comb_representative(a), H(L(1), V(2, 3)));
}

TEST(ToAlternating, Idempotent) {
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_shapes(n)) {
      auto a = to_alternating(t);
      EXPECT_TRUE(is_alternating(a));
      EXPECT_EQ(to_alternating(right_comb_representative(a)), a);
    }
}

TEST(Representatives, Leaf) {
  auto r = binary_representatives(to_alternating(L(1)));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], L(1));
}

TEST(Representatives, ThreeLeafComb) {
  auto r = binary_representatives(to_alternating(H(H(1, 2), L(3))));
  std::set<Tree> got(r.begin(), r.end());
  EXPECT_EQ(got, (std::set<Tree>{H(H(1, 2), L(3)), H(L(1), H(2, 3))}));
}

TEST(Representatives, SectionProperty) {
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_shapes(n)) {
      auto a = to_alternating(t);
      auto r = binary_representatives(a);
      EXPECT_NE(std::find(r.begin(), r.end(), t), r.end());
      EXPECT_EQ(r.size(), representative_count(a));
    }
}

TEST(Enumerate, SchroederCounts) {
  const std::size_t expected[] = {1, 2, 6, 22, 90, 394, 1806};
  for (unsigned n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_alternating(n).size(), expected[n - 1]) << n;
}

TEST(Enumerate, FibersPartitionTheShapes) {
  for (unsigned n = 1; n <= 6; ++n) {
    std::map<std::string, std::size_t> fiber_size;
    for (const auto& t : enumerate_shapes(n)) ++fiber_size[canonical_key(to_alternating(t))];
    std::size_t total = 0;
    std::set<std::string> alt_keys;
    for (const auto& a : enumerate_alternating(n)) {
      alt_keys.insert(canonical_key(a));
      ASSERT_TRUE(fiber_size.count(canonical_key(a)));
      EXPECT_EQ(fiber_size[canonical_key(a)], representative_count(a));
      total += representative_count(a);
    }
    EXPECT_EQ(alt_keys.size(), fiber_size.size());
    EXPECT_EQ(total, shape_count(n));
  }
}

TEST(Enumerate, AssociativityClosureMatchesNormalForm) {
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_shapes(n)) {
      auto c = closure(t, RuleSet::assoc_only());
      ASSERT_TRUE(c.exhausted);
      auto reps = binary_representatives(to_alternating(t));
      std::set<Tree> a(c.members.begin(), c.members.end()), b(reps.begin(), reps.end());
      EXPECT_EQ(a, b) << to_string(t);
    }
}

TEST(Text, RoundTrip) {
  Names names;
  auto a = parse_alternating("(a (b c)_v d)_h", nullptr, &names);
  EXPECT_EQ(a.arity(), 4u);
  EXPECT_EQ(parse_alternating(to_string(a)), a);
}

TEST(Text, ShapeAndKey) {
  auto a = to_alternating(V(H(3, 1), L(2)));
  EXPECT_EQ(shape_of(a), to_alternating(V(H(1, 2), L(3))));
  EXPECT_NE(canonical_key(a), canonical_key(shape_of(a)));
}
