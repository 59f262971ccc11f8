#pragma once

// The one-dimensional picture: tree sequences (dyadic partitions of the unit
// interval), their bijection with association types, and the piecewise-linear
// maps between two tree sequences of equal size.

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dis/dyadic.hpp"
#include "dis/tree.hpp"

namespace dis {

using TreeSequence = std::vector<DyadicRational>;

/// The point one level up in the bisection tree; nullopt for 1/2.
inline std::optional<DyadicRational> tree_parent(const DyadicRational& x) {
  const unsigned b = x.exponent();
  if (b <= 1) return std::nullopt;
  const auto a = x.numerator();
  // exactly one of a - 1, a + 1 is twice an odd number
  const auto even = ((a - 1) / 2) % 2 == 1 ? a - 1 : a + 1;
  return DyadicRational(even, b);
}

/// Strictly increasing dyadic points of (0,1) closed under tree parents.
inline bool is_tree_sequence(const TreeSequence& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(DyadicRational::zero() < pts[i] && pts[i] < DyadicRational::one())) throw error("tree sequence point outside (0,1)");
    if (i && !(pts[i - 1] < pts[i])) throw error("tree sequence points must be strictly increasing");
  }
  for (const auto& x : pts) {
    auto p = tree_parent(x);
    if (p && !std::binary_search(pts.begin(), pts.end(), *p)) return false;
  }
  return true;
}

/// Association types are binary trees written with h at every node; leaves are numbered left to right.
inline Tree sequence_to_association(const TreeSequence& pts) {
  if (!is_tree_sequence(pts)) throw error("not a tree sequence");
  unsigned next = 1;
  std::size_t used = 0;
  auto rec = [&](auto&& self, DyadicRational lo, DyadicRational hi) -> Tree {
    auto mid = DyadicRational::midpoint(lo, hi);
    if (!std::binary_search(pts.begin(), pts.end(), mid)) return Tree::leaf(next++);
    ++used;
    Tree l = self(self, lo, mid);
    Tree r = self(self, mid, hi);
    return Tree::node(Op::H, l, r);
  };
  Tree t = rec(rec, DyadicRational::zero(), DyadicRational::one());
  if (used != pts.size()) throw error("not a tree sequence");
  return t;
}

inline TreeSequence association_to_sequence(const Tree& t) {
  TreeSequence out;
  auto rec = [&](auto&& self, const Tree& s, DyadicRational lo, DyadicRational hi) -> void {
    if (s.is_leaf()) return;
    auto mid = DyadicRational::midpoint(lo, hi);
    self(self, s.left(), lo, mid);
    out.push_back(mid);
    self(self, s.right(), mid, hi);
  };
  rec(rec, t, DyadicRational::zero(), DyadicRational::one());
  return out;
}

/// Letters-and-parentheses form: "a", "ab", "(ab)c", "a((bc)d)".
inline std::string association_string(const Tree& t) {
  unsigned next = 0;
  auto rec = [&](auto&& self, const Tree& s, bool top) -> std::string {
    if (s.is_leaf()) return std::string(1, char('a' + next++));
    std::string in = self(self, s.left(), false);
    in += self(self, s.right(), false);
    return top ? in : "(" + in + ")";
  };
  return rec(rec, t, true);
}

inline Tree parse_association(std::string_view s) {
  std::size_t pos = 0;
  unsigned next = 1;
  // term := letter | "(" term term ")" ; the top level omits its parentheses
  auto term = [&](auto&& self) -> Tree {
    if (pos >= s.size()) throw parse_error("unexpected end of association", pos);
    if (s[pos] == '(') {
      ++pos;
      Tree l = self(self);
      Tree r = self(self);
      if (pos >= s.size() || s[pos] != ')') throw parse_error("expected ')'", pos);
      ++pos;
      return Tree::node(Op::H, l, r);
    }
    if (!std::isalpha(static_cast<unsigned char>(s[pos]))) throw parse_error("expected letter or '('", pos);
    ++pos;
    return Tree::leaf(next++);
  };
  Tree t = term(term);
  if (pos < s.size()) {
    Tree r = term(term);
    t = Tree::node(Op::H, t, r);
  }
  if (pos != s.size()) throw parse_error("trailing input in association", pos);
  return t;
}

/// All association types (h-only shapes) with n leaves.
inline std::vector<Tree> enumerate_associations(unsigned n) {
  std::vector<Tree> out;
  for (const auto& t : enumerate_shapes(n, std::max(n, default_shape_limit))) {
    const auto& b = t.bytes();
    bool only_h = true;
    for (std::size_t i = 0; i < b.size();) {
      if (detail::is_leaf_byte(b[i])) {
        i += 2;
        continue;
      }
      if (static_cast<Op>(b[i]) != Op::H) only_h = false;
      ++i;
    }
    if (only_h) out.push_back(t);
  }
  return out;
}

inline std::string sequence_string(const TreeSequence& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ',';
    s += pts[i].str();
  }
  return s;
}

inline TreeSequence parse_sequence(std::string_view s) {
  TreeSequence out;
  std::size_t start = 0;
  while (start < s.size()) {
    auto end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    auto item = s.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(DyadicRational::parse(item));
    start = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Piecewise-linear maps

namespace detail {

// x = odd * 2^e, returns (odd, e) for x > 0
inline std::pair<std::int64_t, int> odd_part(const DyadicRational& x) {
  std::int64_t n = x.numerator();
  int e = -int(x.exponent());
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return {n, e};
}

// log2(num / den) when the ratio is a power of two
inline std::optional<int> log2_ratio(const DyadicRational& num, const DyadicRational& den) {
  auto [a, ea] = odd_part(num);
  auto [b, eb] = odd_part(den);
  if (a != b) return std::nullopt;
  return ea - eb;
}

inline DyadicRational times_pow2(const DyadicRational& x, int k) {
  if (k >= 0) return x * DyadicRational(std::int64_t{1} << k);
  return x.scaled_down(unsigned(-k));
}

}  // namespace detail

struct Breakpoint {
  DyadicRational x, y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Increasing homeomorphism of [0,1], linear between breakpoints with
/// power-of-two slopes.
class PiecewiseLinearMap {
public:
  PiecewiseLinearMap() : pts_{{DyadicRational::zero(), DyadicRational::zero()}, {DyadicRational::one(), DyadicRational::one()}} {}

  /// Validates endpoints, monotonicity and slopes; merges collinear pieces.
  explicit PiecewiseLinearMap(std::vector<Breakpoint> pts) : pts_(std::move(pts)) {
    if (pts_.size() < 2 || pts_.front() != Breakpoint{DyadicRational::zero(), DyadicRational::zero()} ||
        pts_.back() != Breakpoint{DyadicRational::one(), DyadicRational::one()})
      throw error("piecewise-linear map must fix 0 and 1");
    for (std::size_t i = 1; i < pts_.size(); ++i) {
      if (!(pts_[i - 1].x < pts_[i].x) || !(pts_[i - 1].y < pts_[i].y)) throw error("piecewise-linear map must be strictly increasing");
      if (!detail::log2_ratio(pts_[i].y - pts_[i - 1].y, pts_[i].x - pts_[i - 1].x)) throw error("slope is not a power of two");
    }
    simplify();
  }

  const std::vector<Breakpoint>& breakpoints() const noexcept { return pts_; }

  /// log2 of the slope of each piece, left to right.
  std::vector<int> slope_exponents() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < pts_.size(); ++i) out.push_back(*detail::log2_ratio(pts_[i].y - pts_[i - 1].y, pts_[i].x - pts_[i - 1].x));
    return out;
  }

  std::vector<DyadicRational> slopes() const {
    std::vector<DyadicRational> out;
    for (int k : slope_exponents()) out.push_back(detail::times_pow2(DyadicRational::one(), k));
    return out;
  }

  DyadicRational operator()(const DyadicRational& x) const { return eval(pts_, x, false); }
  DyadicRational inverse(const DyadicRational& y) const { return eval(pts_, y, true); }

  /// (f * g)(x) = f(g(x)).
  friend PiecewiseLinearMap operator*(const PiecewiseLinearMap& f, const PiecewiseLinearMap& g) {
    std::set<DyadicRational> xs;
    for (const auto& p : g.pts_) xs.insert(p.x);
    for (const auto& p : f.pts_) xs.insert(g.inverse(p.x));
    std::vector<Breakpoint> pts;
    for (const auto& x : xs) pts.push_back({x, f(g(x))});
    return PiecewiseLinearMap(std::move(pts));
  }

  friend bool operator==(const PiecewiseLinearMap&, const PiecewiseLinearMap&) = default;

private:
  static DyadicRational eval(const std::vector<Breakpoint>& pts, const DyadicRational& v, bool inverse) {
    auto in = [&](const Breakpoint& p) { return inverse ? p.y : p.x; };
    auto out = [&](const Breakpoint& p) { return inverse ? p.x : p.y; };
    if (v < DyadicRational::zero() || DyadicRational::one() < v) throw error("argument outside [0,1]");
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (v <= in(pts[i])) {
        const auto& a = pts[i - 1];
        const auto& b = pts[i];
        int k = *detail::log2_ratio(out(b) - out(a), in(b) - in(a));
        return out(a) + detail::times_pow2(v - in(a), k);
      }
    }
    return DyadicRational::one();
  }

  void simplify() {
    std::vector<Breakpoint> kept{pts_.front()};
    for (std::size_t i = 1; i + 1 < pts_.size(); ++i) {
      const auto& a = kept.back();
      const auto& b = pts_[i];
      const auto& c = pts_[i + 1];
      if (*detail::log2_ratio(b.y - a.y, b.x - a.x) != *detail::log2_ratio(c.y - b.y, c.x - b.x)) kept.push_back(b);
    }
    kept.push_back(pts_.back());
    pts_ = std::move(kept);
  }

  std::vector<Breakpoint> pts_;
};

/// The map linear on each gap of a with f(a_i) = b_i.
inline PiecewiseLinearMap thompson_map(const TreeSequence& a, const TreeSequence& b) {
  if (a.size() != b.size()) throw error("thompson_map: sequences differ in size");
  if (!is_tree_sequence(a) || !is_tree_sequence(b)) throw error("thompson_map: inputs must be tree sequences");
  std::vector<Breakpoint> pts{{DyadicRational::zero(), DyadicRational::zero()}};
  for (std::size_t i = 0; i < a.size(); ++i) pts.push_back({a[i], b[i]});
  pts.push_back({DyadicRational::one(), DyadicRational::one()});
  return PiecewiseLinearMap(std::move(pts));
}

/// Association types of one to five letters with the widths of their
/// segments in units of 1/128, as drawn in the standard picture of the bijection.
struct AssociationRow {
  std::string_view association;
  std::vector<int> widths;
};

inline const std::vector<AssociationRow>& association_table() {
  static const std::vector<AssociationRow> rows{
    {"a", {128}},
    {"ab", {64, 64}},
    {"(ab)c", {32, 32, 64}},
    {"a(bc)", {64, 32, 32}},
    {"((ab)c)d", {16, 16, 32, 64}},
    {"(a(bc))d", {32, 16, 16, 64}},
    {"(ab)(cd)", {32, 32, 32, 32}},
    {"a((bc)d)", {64, 16, 16, 32}},
    {"a(b(cd))", {64, 32, 16, 16}},
    {"(((ab)c)d)e", {8, 8, 16, 32, 64}},
    {"((a(bc))d)e", {16, 8, 8, 32, 64}},
    {"((ab)(cd))e", {16, 16, 16, 16, 64}},
    {"(a((bc)d))e", {32, 8, 8, 16, 64}},
    {"(a(b(cd)))e", {32, 16, 8, 8, 64}},
    {"((ab)c)(de)", {16, 16, 32, 32, 32}},
    {"(a(bc))(de)", {32, 16, 16, 32, 32}},
    {"(ab)((cd)e)", {32, 32, 16, 16, 32}},
    {"(ab)(c(de))", {32, 32, 32, 16, 16}},
    {"a(((bc)d)e)", {64, 8, 8, 16, 32}},
    {"a((b(cd))e)", {64, 16, 8, 8, 32}},
    {"a((bc)(de))", {64, 16, 16, 16, 16}},
    {"a(b((cd)e))", {64, 32, 8, 8, 16}},
    {"a(b(c(de)))", {64, 32, 16, 8, 8}},
  };
  return rows;
}

/// Cut points of a row: the running sums of its widths, excluding 0 and 1.
inline TreeSequence row_sequence(const AssociationRow& row) {
  TreeSequence out;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < row.widths.size(); ++i) {
    acc += row.widths[i];
    out.push_back(DyadicRational(acc, 7));
  }
  return out;
}

}  // namespace dis
