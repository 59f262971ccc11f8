#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"

using namespace dis;
using namespace dis::testing;

TEST(Graph, ArityTwo) {
  auto g = interchange_graph(2);
  EXPECT_EQ(g.vertices.size(), 2u);
  EXPECT_TRUE(g.edges.empty());
}

TEST(Graph, ArityFour) {
  auto g = interchange_graph(4);
  EXPECT_EQ(g.vertices.size(), 22u);
  EXPECT_EQ(g.isolated(), 20u);
  ASSERT_EQ(g.edges.size(), 1u);
  // the two classes joined are the two sides of the interchange law
  std::set<std::string> ends{canonical_key(g.vertices[g.edges[0].first]), canonical_key(g.vertices[g.edges[0].second])};
  EXPECT_EQ(ends, (std::set<std::string>{canonical_key(to_alternating(V(H(1, 2), H(3, 4)))),
                                         canonical_key(to_alternating(H(V(1, 2), V(3, 4))))}));
}

TEST(Graph, EdgesAreWellFormed) {
  for (unsigned n = 2; n <= 6; ++n) {
    auto g = interchange_graph(n);
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      auto [i, j] = g.edges[k];
      EXPECT_LT(i, j);
      if (k) {
        EXPECT_LT(g.edges[k - 1], g.edges[k]);
      }
    }
  }
}

TEST(Graph, LimitEnforced) { EXPECT_THROW(interchange_graph(9), limit_error); }

TEST(Isolated, KnownValues) {
  const std::size_t expected[] = {1, 2, 6, 20, 70, 254, 948};
  for (unsigned n = 1; n <= 7; ++n) {
    EXPECT_EQ(isolated_count(n), expected[n - 1]) << n;
    EXPECT_EQ(isolated_count_direct(n), expected[n - 1]) << n;
  }
}

TEST(Orbits, ArityFour) {
  auto orbits = dihedral_orbits(4);
  ASSERT_EQ(orbits.size(), 9u);
  std::multiset<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& o : orbits) {
    sizes.insert(o.members.size());
    total += o.members.size();
    EXPECT_EQ(8 % o.members.size(), 0u);
    EXPECT_EQ(o.representative, o.members.front());
  }
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 2, 4, 4, 4, 4, 4, 8, 8}));
  EXPECT_EQ(total, 40u);
}

TEST(Orbits, PartitionOtherArities) {
  for (unsigned n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    for (const auto& o : dihedral_orbits(n)) total += o.members.size();
    EXPECT_EQ(total, shape_count(n));
  }
}

TEST(FiberEquivalence, SmallArities) {
  auto f3 = verify_fiber_equivalence(3);
  EXPECT_TRUE(f3.ok);
  EXPECT_EQ(f3.nonsingleton, 0u);
  auto f4 = verify_fiber_equivalence(4);
  EXPECT_TRUE(f4.ok);
  EXPECT_EQ(f4.shapes, 40u);
  EXPECT_EQ(f4.partitions, 39u);
  EXPECT_EQ(f4.nonsingleton, 1u);
  EXPECT_EQ(f4.largest, 2u);
}

TEST(FiberEquivalence, FiveAndSix) {
  for (unsigned n : {5u, 6u}) {
    auto f = verify_fiber_equivalence(n);
    EXPECT_TRUE(f.ok) << n;
    EXPECT_TRUE(f.counterexamples.empty());
  }
  EXPECT_THROW(verify_fiber_equivalence(7), limit_error);
}

TEST(FiberEquivalence, NoninjectiveArityFour) {
  auto groups = noninjective_fibers(4);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(std::set<Tree>(groups[0].begin(), groups[0].end()), (std::set<Tree>{V(H(1, 2), H(3, 4)), H(V(1, 2), V(3, 4))}));
}
