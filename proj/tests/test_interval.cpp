#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"

using namespace dis;
using namespace dis::testing;

namespace {

DyadicRational d(std::int64_t a, unsigned b) { return DyadicRational(a, b); }

std::vector<TreeSequence> all_sequences(unsigned letters) {
  std::vector<TreeSequence> out;
  for (const auto& t : enumerate_associations(letters)) out.push_back(association_to_sequence(t));
  return out;
}

}  // namespace

TEST(TreeParent, Examples) {
  EXPECT_FALSE(tree_parent(d(1, 1)));
  EXPECT_EQ(*tree_parent(d(1, 2)), d(1, 1));
  EXPECT_EQ(*tree_parent(d(3, 2)), d(1, 1));
  EXPECT_EQ(*tree_parent(d(5, 3)), d(3, 2));
  EXPECT_EQ(*tree_parent(d(7, 3)), d(3, 2));
  EXPECT_EQ(*tree_parent(d(1, 3)), d(1, 2));
}

TEST(TreeSequenceCheck, Examples) {
  EXPECT_TRUE(is_tree_sequence({d(1, 1)}));
  EXPECT_TRUE(is_tree_sequence({d(1, 2), d(1, 1)}));
  EXPECT_FALSE(is_tree_sequence({d(1, 2)}));
  EXPECT_TRUE(is_tree_sequence({}));
  EXPECT_THROW(is_tree_sequence({d(1, 1), d(1, 2)}), error);
  EXPECT_THROW(is_tree_sequence({d(1, 0)}), error);
}

TEST(Bijection, Examples) {
  EXPECT_EQ(association_string(sequence_to_association({d(1, 1)})), "ab");
  EXPECT_EQ(association_string(sequence_to_association({d(1, 2), d(1, 1)})), "(ab)c");
  EXPECT_EQ(association_string(sequence_to_association({d(1, 1), d(3, 2)})), "a(bc)");
  EXPECT_EQ(association_to_sequence(H(1, 2)), (TreeSequence{d(1, 1)}));
  EXPECT_EQ(association_to_sequence(parse_association("((ab)c)d")), (TreeSequence{d(1, 3), d(1, 2), d(1, 1)}));
  EXPECT_EQ(sequence_to_association({}), L(1));
}

TEST(Bijection, RoundTripUpToSixLetters) {
  const std::size_t catalan_counts[] = {1, 2, 5, 14, 42};
  for (unsigned n = 2; n <= 6; ++n) {
    auto assoc = enumerate_associations(n);
    EXPECT_EQ(assoc.size(), catalan_counts[n - 2]);
    std::set<std::string> seqs;
    for (const auto& t : assoc) {
      auto s = association_to_sequence(t);
      EXPECT_TRUE(is_tree_sequence(s));
      EXPECT_EQ(s.size(), n - 1);
      EXPECT_EQ(sequence_to_association(s), t);
      EXPECT_EQ(parse_association(association_string(t)), t);
      seqs.insert(sequence_string(s));
    }
    EXPECT_EQ(seqs.size(), assoc.size());
  }
}

TEST(Text, SequenceStrings) {
  TreeSequence s{d(1, 2), d(1, 1), d(3, 2)};
  EXPECT_EQ(sequence_string(s), "1/2^2,1/2^1,3/2^2");
  EXPECT_EQ(parse_sequence(sequence_string(s)), s);
  EXPECT_EQ(parse_sequence("1/4,1/2"), (TreeSequence{d(1, 2), d(1, 1)}));
  EXPECT_THROW(parse_association("(ab"), parse_error);
}

TEST(Table, MatchesBijection) {
  std::size_t five = 0;
  for (const auto& row : association_table()) {
    auto t = parse_association(row.association);
    EXPECT_EQ(association_to_sequence(t), row_sequence(row)) << row.association;
    EXPECT_EQ(row.widths.size(), t.arity());
    five += t.arity() == 5;
  }
  EXPECT_EQ(five, 14u);
}

TEST(Thompson, Identity) {
  TreeSequence a{d(1, 2), d(1, 1)};
  auto f = thompson_map(a, a);
  EXPECT_EQ(f.breakpoints().size(), 2u);
  EXPECT_EQ(f, PiecewiseLinearMap());
}

TEST(Thompson, Reassociation) {
  auto f = thompson_map({d(1, 2), d(1, 1)}, {d(1, 1), d(3, 2)});
  EXPECT_EQ(f.slopes(), (std::vector<DyadicRational>{d(2, 0), d(1, 0), d(1, 1)}));
  EXPECT_EQ(f(d(1, 3)), d(1, 2));
  EXPECT_EQ(f.inverse(d(7, 3)), d(3, 2));
}

TEST(Thompson, Errors) {
  EXPECT_THROW(thompson_map({d(1, 1)}, {d(1, 2), d(1, 1)}), error);
  EXPECT_THROW(thompson_map({d(1, 2)}, {d(1, 2)}), error);
  EXPECT_THROW(PiecewiseLinearMap({{d(0, 0), d(0, 0)}, {d(1, 1), d(3, 2)}, {d(1, 0), d(1, 0)}}), error);
  EXPECT_THROW(PiecewiseLinearMap({{d(0, 0), d(0, 0)}, {d(1, 0), d(1, 1)}}), error);
}

TEST(Thompson, DefiningPropertyAndComposition) {
  for (unsigned n = 2; n <= 6; ++n) {
    auto seqs = all_sequences(n);
    for (std::size_t i = 0; i < seqs.size(); i += 3)
      for (std::size_t j = 0; j < seqs.size(); j += 2) {
        const auto& a = seqs[i];
        const auto& b = seqs[j];
        const auto& c = seqs[(i + j) % seqs.size()];
        auto f = thompson_map(a, b), g = thompson_map(b, c), h = thompson_map(a, c);
        for (std::size_t k = 0; k < a.size(); ++k) {
          EXPECT_EQ(f(a[k]), b[k]);
          EXPECT_EQ(f.inverse(b[k]), a[k]);
          EXPECT_EQ((g * f)(a[k]), c[k]);
        }
        EXPECT_EQ(g * f, h);
        // breakpoints lie at points of a
        for (const auto& bp : f.breakpoints()) {
          if (bp.x != DyadicRational::zero() && bp.x != DyadicRational::one()) {
            EXPECT_TRUE(std::binary_search(a.begin(), a.end(), bp.x));
          }
        }
      }
  }
}
