#pragma once

#include <algorithm>
#include <ostream>
#include <random>

#include "dis/dis.hpp"

namespace dis {

// readable gtest failure output
inline void PrintTo(const BlockPartition& p, std::ostream* os) { *os << '\n' << to_text(p); }

}  // namespace dis

namespace dis::testing {

inline Tree L(unsigned k) { return Tree::leaf(k); }
inline Tree H(const Tree& a, const Tree& b) { return Tree::node(Op::H, a, b); }
inline Tree V(const Tree& a, const Tree& b) { return Tree::node(Op::V, a, b); }
inline Tree H(unsigned a, unsigned b) { return H(L(a), L(b)); }
inline Tree V(unsigned a, unsigned b) { return V(L(a), L(b)); }

inline Tree P(std::string_view s) { return parse_tree(s); }

/// Random operation-labelled shape with leaves 1..n left to right.
inline Tree random_shape(unsigned n, std::mt19937_64& rng) {
  auto rec = [&](auto&& self, unsigned k) -> Tree {
    if (k == 1) return Tree::leaf(1);
    std::uniform_int_distribution<unsigned> split(1, k - 1);
    std::bernoulli_distribution hv(0.5);
    const unsigned s = split(rng);
    Tree l = self(self, s);
    Tree r = self(self, k - s);
    return Tree::node(hv(rng) ? Op::H : Op::V, l, r);
  };
  return shape_of(rec(rec, n));
}

/// Random shape with a random leaf permutation.
inline Tree random_monomial(unsigned n, std::mt19937_64& rng) {
  std::vector<unsigned> perm(n);
  for (unsigned k = 0; k < n; ++k) perm[k] = k + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  return with_leaf_sequence(random_shape(n, rng), perm);
}

}  // namespace dis::testing
