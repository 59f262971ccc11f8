#pragma once

// Interchange moves between associativity classes.
//
// Two binary monomials are related by associativity iff they have the same
// alternating tree, so the interchange law induces a graph on alternating
// trees. An edge comes from a node N (operation s) with two adjacent children
// that are internal with the opposite operation o. Splitting the first child's
// children at a and the second's at b, the bracketing
//   (X_L o X_R) s (Y_L o Y_R)  =  (X_L s Y_L) o (X_R s Y_R)
// replaces the pair.

#include <cstdint>
#include <string>
#include <vector>

#include "dis/alternating.hpp"

namespace dis {

struct ClassMove {
  std::vector<std::uint8_t> path;  // child indices from the root to N
  std::uint8_t pair = 0;           // children pair, pair + 1 of N
  std::uint8_t split_left = 1;     // split point inside child `pair`
  std::uint8_t split_right = 1;    // split point inside child `pair + 1`

  friend bool operator==(const ClassMove&, const ClassMove&) = default;
};

namespace detail {

inline void collect_class_moves(const AltTree& a, std::vector<std::uint8_t>& path, std::vector<ClassMove>& out) {
  if (a.is_leaf()) return;
  const auto k = a.children.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto& l = a.children[i];
    const auto& r = a.children[i + 1];
    if (l.is_leaf() || r.is_leaf()) continue;
    for (std::size_t x = 1; x < l.children.size(); ++x)
      for (std::size_t y = 1; y < r.children.size(); ++y)
        out.push_back({path, std::uint8_t(i), std::uint8_t(x), std::uint8_t(y)});
  }
  for (std::size_t i = 0; i < k; ++i) {
    path.push_back(std::uint8_t(i));
    collect_class_moves(a.children[i], path, out);
    path.pop_back();
  }
}

inline AltTree group_of(Op op, const std::vector<AltTree>& items, std::size_t from, std::size_t to) {
  if (to - from == 1) return items[from];
  return AltTree::node(op, std::vector<AltTree>(items.begin() + std::ptrdiff_t(from), items.begin() + std::ptrdiff_t(to)));
}

// Rebuilds `a` along `path`, replacing the node at the end by `f(node)` and
// flattening on the way back up.
template <class F>
AltTree rebuild_along(const AltTree& a, const std::vector<std::uint8_t>& path, std::size_t depth, F&& f) {
  if (depth == path.size()) return f(a);
  std::vector<AltTree> kids = a.children;
  kids[path[depth]] = rebuild_along(a.children[path[depth]], path, depth + 1, f);
  return AltTree::node(a.op, std::move(kids));
}

}  // namespace detail

inline std::vector<ClassMove> class_moves(const AltTree& a) {
  std::vector<ClassMove> out;
  std::vector<std::uint8_t> path;
  detail::collect_class_moves(a, path, out);
  return out;
}

/// Does any binary representative of `a` contain an interchange redex?
inline bool has_class_move(const AltTree& a) {
  if (a.is_leaf()) return false;
  for (std::size_t i = 0; i + 1 < a.children.size(); ++i)
    if (!a.children[i].is_leaf() && !a.children[i + 1].is_leaf()) return true;
  for (const auto& c : a.children)
    if (has_class_move(c)) return true;
  return false;
}

inline AltTree apply_class_move(const AltTree& a, const ClassMove& m) {
  return detail::rebuild_along(a, m.path, 0, [&](const AltTree& n) {
    const Op s = n.op;
    const auto& l = n.children.at(m.pair);
    const auto& r = n.children.at(m.pair + 1);
    if (l.is_leaf() || r.is_leaf()) throw error("apply_class_move: pair is not internal");
    const Op o = l.op;
    auto xl = detail::group_of(o, l.children, 0, m.split_left);
    auto xr = detail::group_of(o, l.children, m.split_left, l.children.size());
    auto yl = detail::group_of(o, r.children, 0, m.split_right);
    auto yr = detail::group_of(o, r.children, m.split_right, r.children.size());
    AltTree swapped = AltTree::node(o, {AltTree::node(s, {std::move(xl), std::move(yl)}), AltTree::node(s, {std::move(xr), std::move(yr)})});
    std::vector<AltTree> kids;
    kids.reserve(n.children.size() - 1);
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i == m.pair) kids.push_back(swapped);
      else if (i != std::size_t(m.pair) + 1) kids.push_back(n.children[i]);
    }
    return AltTree::node(s, std::move(kids));
  });
}

/// Decodes a key produced by canonical_key(const AltTree&).
inline AltTree alt_from_key(std::string_view key) {
  std::size_t pos = 0;
  auto rec = [&](auto&& self) -> AltTree {
    if (pos >= key.size()) throw error("alt_from_key: truncated key");
    const auto tag = static_cast<std::uint8_t>(key[pos++]);
    if (tag == detail::leaf_tag) return AltTree::leaf(static_cast<std::uint8_t>(key[pos++]));
    AltTree a;
    a.op = static_cast<Op>(tag);
    const auto k = static_cast<std::uint8_t>(key[pos++]);
    a.children.reserve(k);
    for (unsigned i = 0; i < k; ++i) a.children.push_back(self(self));
    return a;
  };
  return rec(rec);
}

/// Builds a binary representative of `a` in which the move `m` is a single
/// interchange redex, and returns it with the redex position. Everything not
/// involved in the move is bracketed as a right comb.
inline std::pair<Tree, TreePosition> expose_class_move(const AltTree& a, const ClassMove& m) {
  std::string path;
  auto rec = [&](auto&& self, const AltTree& s, std::size_t depth) -> Tree {
    if (s.is_leaf()) return Tree::leaf(s.label);
    const bool on_path = depth <= m.path.size();
    const bool target = depth == m.path.size();
    const std::size_t next = (on_path && !target) ? m.path[depth] : std::size_t(-1);
    std::vector<Tree> items;
    std::size_t special = std::size_t(-1);  // item index that continues the path
    for (std::size_t i = 0; i < s.children.size(); ++i) {
      if (target && i == m.pair) {
        auto half = [&](const AltTree& c, std::size_t split) {
          std::vector<Tree> lo, hi;
          for (std::size_t j = 0; j < c.children.size(); ++j)
            (j < split ? lo : hi).push_back(right_comb_representative(c.children[j]));
          return Tree::node(c.op, right_comb(c.op, lo), right_comb(c.op, hi));
        };
        special = items.size();
        items.push_back(Tree::node(s.op, half(s.children[i], m.split_left), half(s.children[i + 1], m.split_right)));
        ++i;
      } else if (i == next) {
        special = items.size();
        items.push_back(Tree());  // filled below once the path prefix is known
      } else {
        items.push_back(right_comb_representative(s.children[i]));
      }
    }
    if (on_path) {
      // in a right comb of m items, item j sits at 1^j 0 (the last item at 1^(m-1))
      for (std::size_t j = 0; j < special; ++j) path.push_back('1');
      if (special + 1 < items.size()) path.push_back('0');
      if (!target) items[special] = self(self, s.children[next], depth + 1);
    }
    return right_comb(s.op, items);
  };
  Tree t = rec(rec, a, 0);
  return {t, TreePosition::parse(path)};
}

}  // namespace dis
