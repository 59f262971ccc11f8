#pragma once

// Block partitions of the open unit square with exact dyadic coordinates:
// the geometric realization of tree monomials, the operad operations on
// partitions, cuts and slices, and tree preimages.
//
// Coordinates: origin at the bottom-left corner, x grows east, y grows north.

#include <algorithm>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dis/dyadic.hpp"
#include "dis/tree.hpp"

namespace dis {

using Dyadic = DyadicRational;

struct Rect {
  Dyadic x1 = Dyadic::zero(), x2 = Dyadic::one(), y1 = Dyadic::zero(), y2 = Dyadic::one();

  static Rect unit() { return {}; }
  Dyadic width() const { return x2 - x1; }
  Dyadic height() const { return y2 - y1; }
  Dyadic area() const { return width() * height(); }

  bool contains(const Rect& o) const { return x1 <= o.x1 && o.x2 <= x2 && y1 <= o.y1 && o.y2 <= y2; }
  bool overlaps(const Rect& o) const { return x1 < o.x2 && o.x1 < x2 && y1 < o.y2 && o.y1 < y2; }

  Rect west() const { return {x1, Dyadic::midpoint(x1, x2), y1, y2}; }
  Rect east() const { return {Dyadic::midpoint(x1, x2), x2, y1, y2}; }
  Rect south() const { return {x1, x2, y1, Dyadic::midpoint(y1, y2)}; }
  Rect north() const { return {x1, x2, Dyadic::midpoint(y1, y2), y2}; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

struct Block {
  Rect rect;
  unsigned label = 0;  // 0: unlabeled

  friend bool operator==(const Block&, const Block&) = default;
};

enum class Axis { x, y };
enum class Orientation { horizontal, vertical };

inline const char* orientation_name(Orientation o) { return o == Orientation::horizontal ? "horizontal" : "vertical"; }

struct BlockPartition {
  std::vector<Block> blocks;  // sorted by (x1, y1)

  std::size_t size() const noexcept { return blocks.size(); }

  void sort() {
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
      if (a.rect.x1 != b.rect.x1) return a.rect.x1 < b.rect.x1;
      return a.rect.y1 < b.rect.y1;
    });
  }

  bool labeled() const {
    return !blocks.empty() && std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.label != 0; });
  }

  /// Block carrying `label`, if any.
  const Block* find_label(unsigned label) const {
    for (const auto& b : blocks)
      if (b.label == label) return &b;
    return nullptr;
  }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

inline BlockPartition unit_partition(unsigned label = 0) { return {{Block{Rect::unit(), label}}}; }

/// Throws if blocks leave the square, are degenerate, overlap, do not cover
/// the square, or carry labels that are not a permutation of 1..n.
inline void validate(const BlockPartition& p) {
  if (p.blocks.empty()) throw error("partition has no blocks");
  Dyadic total;
  for (const auto& b : p.blocks) {
    const auto& r = b.rect;
    if (!(r.x1 < r.x2 && r.y1 < r.y2)) throw error("degenerate block");
    if (!Rect::unit().contains(r)) throw error("block outside the unit square");
    total = total + r.area();
  }
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < p.blocks.size(); ++j)
      if (p.blocks[i].rect.overlaps(p.blocks[j].rect)) throw error("overlapping blocks");
  if (total != Dyadic::one()) throw error("blocks do not cover the unit square (area " + total.str() + ")");
  if (std::any_of(p.blocks.begin(), p.blocks.end(), [](const Block& b) { return b.label != 0; })) {
    std::vector<bool> seen(p.blocks.size() + 1, false);
    for (const auto& b : p.blocks) {
      if (b.label == 0 || b.label > p.blocks.size() || seen[b.label]) throw error("block labels are not a permutation of 1..n");
      seen[b.label] = true;
    }
  }
}

/// Labels blocks 1..n in their stored order.
inline BlockPartition label_by_order(BlockPartition p) {
  for (std::size_t i = 0; i < p.blocks.size(); ++i) p.blocks[i].label = unsigned(i + 1);
  return p;
}

inline BlockPartition unlabeled(BlockPartition p) {
  for (auto& b : p.blocks) b.label = 0;
  return p;
}

// ---------------------------------------------------------------------------
// Realization and operad structure

namespace detail {

inline void realize_into(const Tree& t, const Rect& r, std::vector<Block>& out) {
  if (t.is_leaf()) {
    out.push_back({r, t.label()});
    return;
  }
  if (t.op() == Op::H) {
    realize_into(t.left(), r.west(), out);
    realize_into(t.right(), r.east(), out);
  } else {
    realize_into(t.left(), r.south(), out);
    realize_into(t.right(), r.north(), out);
  }
}

// Affine image of `inner` (a rectangle of the unit square) inside `outer`.
inline Rect place(const Rect& inner, const Rect& outer) {
  const auto w = outer.width(), h = outer.height();
  return {outer.x1 + inner.x1 * w, outer.x1 + inner.x2 * w, outer.y1 + inner.y1 * h, outer.y1 + inner.y2 * h};
}

}  // namespace detail

/// The geometric realization: h splits east-west, v splits south-north.
inline BlockPartition realize(const Tree& t) {
  BlockPartition p;
  detail::realize_into(t, Rect::unit(), p.blocks);
  p.sort();
  return p;
}

namespace detail {

inline BlockPartition join(const BlockPartition& p, const BlockPartition& q, Axis axis) {
  const Rect first = axis == Axis::x ? Rect::unit().west() : Rect::unit().south();
  const Rect second = axis == Axis::x ? Rect::unit().east() : Rect::unit().north();
  BlockPartition r;
  const bool relabel = p.labeled() && q.labeled();
  for (const auto& b : p.blocks) r.blocks.push_back({place(b.rect, first), b.label});
  for (const auto& b : q.blocks) r.blocks.push_back({place(b.rect, second), relabel ? b.label + unsigned(p.size()) : b.label});
  r.sort();
  return r;
}

}  // namespace detail

/// p to the west of q. Labels of q shift by |p| when both are labeled.
inline BlockPartition hjoin(const BlockPartition& p, const BlockPartition& q) { return detail::join(p, q, Axis::x); }

/// p to the south of q. Labels of q shift by |p| when both are labeled.
inline BlockPartition vjoin(const BlockPartition& p, const BlockPartition& q) { return detail::join(p, q, Axis::y); }

/// Scales q into block i of p. For labeled partitions `i` is a label and the
/// labels follow partial_compose; otherwise `i` is the 1-based block ordinal.
inline BlockPartition compose_partition(const BlockPartition& p, unsigned i, const BlockPartition& q) {
  const bool labeled = p.labeled() && q.labeled();
  std::size_t at = p.size();
  for (std::size_t k = 0; k < p.size(); ++k)
    if (labeled ? p.blocks[k].label == i : k + 1 == i) at = k;
  if (i == 0 || at == p.size()) throw error("compose_partition: block " + std::to_string(i) + " out of range");
  const unsigned m = unsigned(q.size());
  BlockPartition r;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k == at) continue;
    unsigned lab = p.blocks[k].label;
    if (labeled && lab > i) lab += m - 1;
    r.blocks.push_back({p.blocks[k].rect, lab});
  }
  for (const auto& b : q.blocks) r.blocks.push_back({detail::place(b.rect, p.blocks[at].rect), labeled ? b.label + i - 1 : 0});
  r.sort();
  return r;
}

/// Starts from the unit square and bisects, at each step, the block with the
/// given 1-based ordinal (in (x1, y1) order) across the given axis: Axis::x
/// halves the x-extent (a vertical cut), Axis::y the y-extent.
inline BlockPartition build_dyadic(const std::vector<std::pair<unsigned, Axis>>& choices) {
  BlockPartition p = unit_partition();
  for (std::size_t s = 0; s < choices.size(); ++s) {
    auto [ord, axis] = choices[s];
    if (ord == 0 || ord > p.size())
      throw error("build_dyadic: step " + std::to_string(s + 1) + " names block " + std::to_string(ord) + " of " + std::to_string(p.size()));
    const Rect r = p.blocks[ord - 1].rect;
    p.blocks.erase(p.blocks.begin() + (ord - 1));
    if (axis == Axis::x) {
      p.blocks.push_back({r.west(), 0});
      p.blocks.push_back({r.east(), 0});
    } else {
      p.blocks.push_back({r.south(), 0});
      p.blocks.push_back({r.north(), 0});
    }
    p.sort();
  }
  return p;
}

// ---------------------------------------------------------------------------
// Cuts

struct Interval {
  Dyadic lo, hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Cut {
  Orientation orientation;
  Dyadic at;      // x for vertical cuts, y for horizontal cuts
  Interval span;  // extent along the cut

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Maximal horizontal and vertical open segments separating the blocks.
/// Vertical cuts come first, each family sorted by coordinate then extent.
inline std::vector<Cut> cuts(const BlockPartition& p) {
  std::vector<Cut> out;
  for (Orientation o : {Orientation::vertical, Orientation::horizontal}) {
    std::vector<std::pair<Dyadic, Interval>> edges;
    for (const auto& b : p.blocks) {
      const auto& r = b.rect;
      if (o == Orientation::vertical) {
        for (auto x : {r.x1, r.x2})
          if (Dyadic::zero() < x && x < Dyadic::one()) edges.push_back({x, {r.y1, r.y2}});
      } else {
        for (auto y : {r.y1, r.y2})
          if (Dyadic::zero() < y && y < Dyadic::one()) edges.push_back({y, {r.x1, r.x2}});
      }
    }
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second.lo < b.second.lo;
    });
    for (std::size_t i = 0; i < edges.size();) {
      Dyadic at = edges[i].first;
      Interval cur = edges[i].second;
      ++i;
      while (i < edges.size() && edges[i].first == at && edges[i].second.lo <= cur.hi) {
        cur.hi = std::max(cur.hi, edges[i].second.hi);
        ++i;
      }
      out.push_back({o, at, cur});
    }
  }
  return out;
}

/// Number of blocks of p forming r, or nullopt when r is not a union of blocks.
inline std::optional<std::size_t> is_subrectangle(const BlockPartition& p, const Rect& r) {
  if (!(r.x1 < r.x2 && r.y1 < r.y2)) return std::nullopt;
  std::size_t m = 0;
  Dyadic area;
  for (const auto& b : p.blocks) {
    if (r.contains(b.rect)) {
      ++m;
      area = area + b.rect.area();
    } else if (r.overlaps(b.rect)) {
      return std::nullopt;
    }
  }
  if (area != r.area()) return std::nullopt;
  return m;
}

namespace detail {

inline std::vector<const Block*> blocks_in(const BlockPartition& p, const Rect& r) {
  std::vector<const Block*> v;
  for (const auto& b : p.blocks)
    if (r.contains(b.rect)) v.push_back(&b);
  return v;
}

// Does the bisection of r in the given orientation avoid every block interior?
inline bool has_bisection(const std::vector<const Block*>& inside, const Rect& r, Orientation o) {
  if (inside.size() < 2) return false;
  if (o == Orientation::vertical) {
    const auto mid = Dyadic::midpoint(r.x1, r.x2);
    return std::none_of(inside.begin(), inside.end(), [&](const Block* b) { return b->rect.x1 < mid && mid < b->rect.x2; });
  }
  const auto mid = Dyadic::midpoint(r.y1, r.y2);
  return std::none_of(inside.begin(), inside.end(), [&](const Block* b) { return b->rect.y1 < mid && mid < b->rect.y2; });
}

}  // namespace detail

struct MainCuts {
  bool horizontal = false;
  bool vertical = false;
  bool both() const { return horizontal && vertical; }
  bool none() const { return !horizontal && !vertical; }
  bool has(Orientation o) const { return o == Orientation::horizontal ? horizontal : vertical; }
};

inline MainCuts main_cuts(const BlockPartition& p, const Rect& r = Rect::unit()) {
  if (!is_subrectangle(p, r)) throw error("main_cuts: rectangle is not a subrectangle of the partition");
  auto inside = detail::blocks_in(p, r);
  return {detail::has_bisection(inside, r, Orientation::horizontal), detail::has_bisection(inside, r, Orientation::vertical)};
}

struct SliceDecomposition {
  std::vector<Cut> primary_cuts;  // natural order, main cut included
  std::vector<Rect> slices;       // primary_cuts.size() + 1 strips
};

/// Recursive bisections of r parallel to its main cut in orientation `o`, and
/// the strips between them.
inline SliceDecomposition primary_cuts_and_slices(const BlockPartition& p, const Rect& r, Orientation o) {
  if (!main_cuts(p, r).has(o)) throw error(std::string("primary_cuts_and_slices: no ") + orientation_name(o) + " main cut");
  SliceDecomposition d;
  auto rec = [&](auto&& self, const Rect& s) -> void {
    auto inside = detail::blocks_in(p, s);
    if (!detail::has_bisection(inside, s, o)) {
      d.slices.push_back(s);
      return;
    }
    if (o == Orientation::vertical) {
      self(self, s.west());
      d.primary_cuts.push_back({o, Dyadic::midpoint(s.x1, s.x2), {s.y1, s.y2}});
      self(self, s.east());
    } else {
      self(self, s.south());
      d.primary_cuts.push_back({o, Dyadic::midpoint(s.y1, s.y2), {s.x1, s.x2}});
      self(self, s.north());
    }
  };
  rec(rec, r);
  return d;
}

enum class BlockClass { interior, border };

inline bool is_border(const Rect& r) {
  return r.x1 == Dyadic::zero() || r.y1 == Dyadic::zero() || r.x2 == Dyadic::one() || r.y2 == Dyadic::one();
}

/// Border or interior, per block in stored order.
inline std::vector<BlockClass> classify_blocks(const BlockPartition& p) {
  std::vector<BlockClass> out;
  for (const auto& b : p.blocks) out.push_back(is_border(b.rect) ? BlockClass::border : BlockClass::interior);
  return out;
}

// ---------------------------------------------------------------------------
// Preimages

namespace detail {

inline std::vector<Tree> fiber_of(const BlockPartition& p, const Rect& r) {
  auto inside = blocks_in(p, r);
  if (inside.size() == 1 && inside[0]->rect == r) return {Tree::leaf(inside[0]->label)};
  std::vector<Tree> out;
  std::set<std::string> seen;
  for (Orientation o : {Orientation::vertical, Orientation::horizontal}) {
    if (!has_bisection(inside, r, o)) continue;
    const bool v = o == Orientation::vertical;
    auto lo = fiber_of(p, v ? r.west() : r.south());
    auto hi = fiber_of(p, v ? r.east() : r.north());
    for (const auto& a : lo)
      for (const auto& b : hi) {
        Tree t = Tree::node(v ? Op::H : Op::V, a, b);
        if (seen.insert(t.bytes()).second) out.push_back(std::move(t));
      }
  }
  return out;
}

}  // namespace detail

/// All trees realizing p (labels taken from the blocks; unlabeled partitions
/// are labeled by block order first). Empty result is reported as an error.
inline std::vector<Tree> fiber(const BlockPartition& p) {
  const BlockPartition q = p.labeled() ? p : label_by_order(p);
  auto out = detail::fiber_of(q, Rect::unit());
  if (out.empty()) throw error("fiber: partition is not dyadic (no preimage)");
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Symmetries

/// Geometric action matching apply_symmetry on trees: flip_h is x -> 1 - x,
/// flip_v is y -> 1 - y, transpose swaps the axes; applied in that order.
inline BlockPartition apply_symmetry(const BlockPartition& p, const Dihedral& g) {
  BlockPartition r;
  for (auto b : p.blocks) {
    auto& q = b.rect;
    if (g.flip_h) q = {Dyadic::one() - q.x2, Dyadic::one() - q.x1, q.y1, q.y2};
    if (g.flip_v) q = {q.x1, q.x2, Dyadic::one() - q.y2, Dyadic::one() - q.y1};
    if (g.transpose) q = {q.y1, q.y2, q.x1, q.x2};
    r.blocks.push_back(b);
  }
  r.sort();
  return r;
}

// ---------------------------------------------------------------------------
// Text format: one block per line, "x1 x2 y1 y2 label" with label "-" if absent

inline std::string to_text(const BlockPartition& p) {
  std::ostringstream os;
  for (const auto& b : p.blocks) {
    os << b.rect.x1 << ' ' << b.rect.x2 << ' ' << b.rect.y1 << ' ' << b.rect.y2 << ' ';
    if (b.label) os << b.label;
    else os << '-';
    os << '\n';
  }
  return os.str();
}

inline BlockPartition partition_from_text(std::istream& in) {
  BlockPartition p;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string f[5];
    std::size_t n = 0;
    while (n < 5 && ls >> f[n]) ++n;
    if (n == 0) continue;
    std::string extra;
    if (n < 5 || (ls >> extra)) throw parse_error("line " + std::to_string(lineno) + ": expected 'x1 x2 y1 y2 label'", 0);
    Block b;
    b.rect = {Dyadic::parse(f[0]), Dyadic::parse(f[1]), Dyadic::parse(f[2]), Dyadic::parse(f[3])};
    if (f[4] != "-") {
      try {
        b.label = unsigned(std::stoul(f[4]));
      } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(lineno) + ": bad label '" + f[4] + "'", 0);
      }
    }
    p.blocks.push_back(b);
  }
  p.sort();
  validate(p);
  return p;
}

inline BlockPartition partition_from_text(const std::string& text) {
  std::istringstream in(text);
  return partition_from_text(in);
}

}  // namespace dis
