#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_util.hpp"

using namespace dis;
using namespace dis::testing;

namespace {

Dyadic d(std::int64_t a, unsigned b) { return Dyadic(a, b); }

const Tree grid_left = V(H(1, 2), H(3, 4));
const Tree grid_right = H(V(1, 3), V(2, 4));

BlockPartition grid() { return build_dyadic({{1, Axis::x}, {1, Axis::y}, {3, Axis::y}}); }

Dyadic total_area(const BlockPartition& p) {
  Dyadic a;
  for (const auto& b : p.blocks) a = a + b.rect.area();
  return a;
}

}  // namespace

TEST(Realize, Leaf) {
  auto p = realize(L(1));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.blocks[0].rect, Rect::unit());
  EXPECT_EQ(p.blocks[0].label, 1u);
}

TEST(Realize, SingleNodes) {
  auto h = realize(H(1, 2));
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h.blocks[0].rect, (Rect{d(0, 0), d(1, 1), d(0, 0), d(1, 0)}));
  EXPECT_EQ(h.blocks[0].label, 1u);
  auto v = realize(V(1, 2));
  EXPECT_EQ(v.blocks[0].rect, Rect::unit().south());
  EXPECT_EQ(v.blocks[1].rect, Rect::unit().north());
  EXPECT_EQ(v.blocks[1].label, 2u);
}

TEST(Realize, BothSidesOfTheInterchangeLaw) {
  EXPECT_EQ(realize(grid_left), realize(grid_right));
  EXPECT_EQ(unlabeled(realize(grid_left)), grid());
}

TEST(Join, UnitSquares) {
  EXPECT_EQ(hjoin(unit_partition(), unit_partition()), build_dyadic({{1, Axis::x}}));
  EXPECT_EQ(vjoin(unit_partition(), unit_partition()), build_dyadic({{1, Axis::y}}));
}

TEST(Join, MatchesRealize) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    auto t = random_shape(2 + unsigned(rng() % 8), rng);
    auto p = hjoin(realize(t.left()), realize(shape_of(t.right())));
    auto q = vjoin(realize(t.left()), realize(shape_of(t.right())));
    EXPECT_EQ(realize(t), t.op() == Op::H ? p : q);
    EXPECT_EQ(p.size(), t.arity());
  }
}

TEST(Compose, IntoUnitSquare) {
  auto q = realize(V(H(1, 2), L(3)));
  EXPECT_EQ(compose_partition(realize(L(1)), 1, q), q);
}

TEST(Compose, MorphismAndBlockCount) {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 500; ++k) {
    unsigned m = 1 + rng() % 4, n = 1 + rng() % 4, i = 1 + unsigned(rng() % m);
    auto t = random_monomial(m, rng), u = random_monomial(n, rng);
    auto c = compose_partition(realize(t), i, realize(u));
    EXPECT_EQ(c, realize(partial_compose(t, i, u)));
    EXPECT_EQ(c.size(), m + n - 1);
    EXPECT_EQ(total_area(c), Dyadic::one());
  }
}

TEST(Compose, ByOrdinalWhenUnlabeled) {
  auto c = compose_partition(unlabeled(realize(H(1, 2))), 2, unlabeled(realize(V(1, 2))));
  EXPECT_EQ(c, build_dyadic({{1, Axis::x}, {2, Axis::y}}));
  EXPECT_THROW(compose_partition(realize(H(1, 2)), 3, realize(L(1))), error);
}

TEST(Build, Examples) {
  EXPECT_EQ(build_dyadic({}), unit_partition());
  auto p = build_dyadic({{1, Axis::x}});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.blocks[0].rect.x2, Dyadic::half());
  EXPECT_EQ(grid().size(), 4u);
  EXPECT_THROW(build_dyadic({{2, Axis::x}}), error);
}

TEST(Cuts, Examples) {
  EXPECT_TRUE(cuts(unit_partition()).empty());
  auto g = cuts(grid());
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], (Cut{Orientation::vertical, Dyadic::half(), {Dyadic::zero(), Dyadic::one()}}));
  EXPECT_EQ(g[1], (Cut{Orientation::horizontal, Dyadic::half(), {Dyadic::zero(), Dyadic::one()}}));
  auto c = cuts(realize(H(H(1, 2), L(3))));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].at, d(1, 2));
  EXPECT_EQ(c[1].at, d(1, 1));
  for (const auto& x : c) EXPECT_EQ(x.orientation, Orientation::vertical);
}

TEST(Cuts, PartialSpan) {
  auto c = cuts(realize(H(V(1, 2), L(3))));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1].orientation, Orientation::horizontal);
  EXPECT_EQ(c[1].span, (Interval{Dyadic::zero(), Dyadic::half()}));
}

TEST(MainCuts, Examples) {
  auto g = main_cuts(grid());
  EXPECT_TRUE(g.both());
  auto v = main_cuts(build_dyadic({{1, Axis::x}}));
  EXPECT_TRUE(v.vertical);
  EXPECT_FALSE(v.horizontal);
  EXPECT_TRUE(main_cuts(unit_partition()).none());
  EXPECT_THROW(main_cuts(realize(H(1, 2)), Rect{d(1, 2), d(3, 2), d(0, 0), d(1, 0)}), error);
}

TEST(Slices, FourVerticalStrips) {
  auto p = realize(H(H(1, 2), H(3, 4)));
  auto s = primary_cuts_and_slices(p, Rect::unit(), Orientation::vertical);
  ASSERT_EQ(s.primary_cuts.size(), 3u);
  ASSERT_EQ(s.slices.size(), 4u);
  EXPECT_EQ(s.primary_cuts[0].at, d(1, 2));
  EXPECT_EQ(s.primary_cuts[2].at, d(3, 2));
}

TEST(Slices, GridAndErrors) {
  auto s = primary_cuts_and_slices(grid(), Rect::unit(), Orientation::horizontal);
  EXPECT_EQ(s.primary_cuts.size(), 1u);
  EXPECT_EQ(s.slices.size(), 2u);
  EXPECT_THROW(primary_cuts_and_slices(build_dyadic({{1, Axis::x}}), Rect::unit(), Orientation::horizontal), error);
}

TEST(Classify, Examples) {
  for (auto c : classify_blocks(grid())) EXPECT_EQ(c, BlockClass::border);
  // a 4x4 grid has the four middle cells interior
  auto p = realize(V(V(H(H(1, 2), H(3, 4)), H(H(5, 6), H(7, 8))), V(H(H(9, 10), H(11, 12)), H(H(13, 14), H(15, 16)))));
  auto c = classify_blocks(p);
  EXPECT_EQ(std::count(c.begin(), c.end(), BlockClass::interior), 4);
}

TEST(Classify, ConfigurationA) {
  auto m = parse_monomial("(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))");
  auto p = realize(m.tree);
  auto c = classify_blocks(p);
  std::string interior;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (c[k] == BlockClass::interior) interior += m.names[p.blocks[k].label - 1];
  std::sort(interior.begin(), interior.end());
  EXPECT_EQ(interior, "dg");
}

TEST(Fiber, Examples) {
  auto u = fiber(unit_partition());
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u[0], L(1));
  auto g = fiber(realize(grid_left));
  std::set<Tree> got(g.begin(), g.end());
  EXPECT_EQ(got, (std::set<Tree>{grid_left, grid_right}));
}

TEST(Fiber, ArityFourInjectiveExceptGrid) {
  std::map<std::string, std::set<Tree>> by_partition;
  for (const auto& t : enumerate_shapes(4)) by_partition[to_text(unlabeled(realize(t)))].insert(t);
  std::size_t doubles = 0;
  for (const auto& [k, s] : by_partition) {
    auto f = fiber(partition_from_text(k));
    EXPECT_EQ(f.size(), s.size());
    if (s.size() > 1) {
      ++doubles;
      EXPECT_EQ(s, (std::set<Tree>{grid_left, shape_of(grid_right)}));
    }
  }
  EXPECT_EQ(doubles, 1u);
}

TEST(Fiber, ContainsEveryPreimage) {
  for (unsigned n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_shapes(n)) {
      auto f = fiber(realize(t));
      EXPECT_NE(std::find(f.begin(), f.end(), t), f.end());
    }
}

TEST(Fiber, NotDyadic) {
  // a pinwheel of four rectangles around a central square has no main cut
  BlockPartition p{{{{d(0, 0), d(3, 2), d(0, 0), d(1, 2)}, 0},
                    {{d(3, 2), d(1, 0), d(0, 0), d(3, 2)}, 0},
                    {{d(1, 2), d(1, 0), d(3, 2), d(1, 0)}, 0},
                    {{d(0, 0), d(1, 2), d(1, 2), d(1, 0)}, 0},
                    {{d(1, 2), d(3, 2), d(1, 2), d(3, 2)}, 0}}};
  p.sort();
  validate(p);
  EXPECT_TRUE(main_cuts(p).none());
  EXPECT_THROW(fiber(p), error);
}

TEST(Subrectangle, Examples) {
  auto g = grid();
  for (const auto& b : g.blocks) EXPECT_EQ(is_subrectangle(g, b.rect), 1u);
  EXPECT_EQ(is_subrectangle(g, Rect::unit().west()), 2u);
  EXPECT_EQ(is_subrectangle(g, Rect::unit()), 4u);
  EXPECT_FALSE(is_subrectangle(g, Rect{d(1, 2), d(1, 0), d(0, 0), d(1, 0)}.west()));
}

TEST(Validate, Rejects) {
  BlockPartition overlap{{{Rect::unit(), 0}, {Rect::unit().west(), 0}}};
  EXPECT_THROW(validate(overlap), error);
  BlockPartition gap{{{Rect::unit().west(), 0}}};
  EXPECT_THROW(validate(gap), error);
  auto bad_labels = realize(H(1, 2));
  bad_labels.blocks[1].label = 1;
  EXPECT_THROW(validate(bad_labels), error);
}

TEST(Symmetry, MatchesTreeAction) {
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_shapes(n))
      for (const auto& g : dihedral_group()) EXPECT_EQ(realize(apply_symmetry(t, g)), apply_symmetry(realize(t), g));
}

TEST(Text, RoundTrip) {
  auto p = realize(P("(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))"));
  auto text = to_text(p);
  EXPECT_EQ(partition_from_text(text), p);
  EXPECT_EQ(to_text(realize(H(1, 2))), "0/2^0 1/2^1 0/2^0 1/2^0 1\n1/2^1 1/2^0 0/2^0 1/2^0 2\n");
  EXPECT_EQ(partition_from_text("# comment\n0 1/2 0 1 -\n1/2 1 0 1 -\n"), build_dyadic({{1, Axis::x}}));
  EXPECT_THROW(partition_from_text("0 1 0\n"), parse_error);
  EXPECT_THROW(partition_from_text("0 1/2 0 1 1\n"), error);
}

TEST(Area, ConservedByConstructors) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 200; ++k) {
    auto t = random_monomial(1 + unsigned(rng() % 12), rng);
    EXPECT_EQ(total_area(realize(t)), Dyadic::one());
    EXPECT_EQ(total_area(random_partition(1 + unsigned(rng() % 12), rng)), Dyadic::one());
  }
}
