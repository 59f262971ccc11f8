#pragma once

// Localized rewriting of binary tree monomials by the two associative laws
// and the interchange law, in both directions.

#include <optional>
#include <string>
#include <vector>

#include "dis/tree.hpp"

namespace dis {

enum class Family : std::uint8_t { AssocH, AssocV, Interchange };
enum class Direction : std::uint8_t { forward, backward };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::AssocH: return "assoc_h";
    case Family::AssocV: return "assoc_v";
    case Family::Interchange: return "interchange";
  }
  return "?";
}

inline const char* direction_name(Direction d) { return d == Direction::forward ? "forward" : "backward"; }

inline Family parse_family(std::string_view s) {
  if (s == "assoc_h") return Family::AssocH;
  if (s == "assoc_v") return Family::AssocV;
  if (s == "interchange") return Family::Interchange;
  throw error("unknown rule family '" + std::string(s) + "'");
}

inline Direction parse_direction(std::string_view s) {
  if (s == "forward") return Direction::forward;
  if (s == "backward") return Direction::backward;
  throw error("unknown direction '" + std::string(s) + "'");
}

struct RewriteRule {
  Family family = Family::AssocH;
  Direction direction = Direction::forward;

  RewriteRule inverse() const {
    return {family, direction == Direction::forward ? Direction::backward : Direction::forward};
  }
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct RewriteStep {
  RewriteRule rule;
  TreePosition position;

  RewriteStep inverse() const { return {rule.inverse(), position}; }
  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// Which rule families are enabled.
struct RuleSet {
  bool assoc_h = true;
  bool assoc_v = true;
  bool interchange = true;

  static RuleSet all() { return {}; }
  static RuleSet interchange_only() { return {false, false, true}; }
  static RuleSet assoc_only() { return {true, true, false}; }

  bool enabled(Family f) const {
    switch (f) {
      case Family::AssocH: return assoc_h;
      case Family::AssocV: return assoc_v;
      case Family::Interchange: return interchange;
    }
    return false;
  }

  /// Parses a comma list drawn from assoc, assoc_h, assoc_v, interchange, all.
  static RuleSet parse(std::string_view text) {
    RuleSet r{false, false, false};
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto item = text.substr(start, end - start);
      if (item == "assoc") r.assoc_h = r.assoc_v = true;
      else if (item == "assoc_h") r.assoc_h = true;
      else if (item == "assoc_v") r.assoc_v = true;
      else if (item == "interchange") r.interchange = true;
      else if (item == "all") r = all();
      else throw error("unknown rule set entry '" + std::string(item) + "'");
      start = end + 1;
    }
    return r;
  }

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

namespace detail {

inline Op op_at(const std::string& b, std::size_t at) { return static_cast<Op>(b[at]); }

// Does `rule` match the node at byte offset `at`? `rend` is the start of the right child.
inline bool matches_at(const std::string& b, std::size_t at, std::size_t rend_start, const RewriteRule& rule) {
  if (is_leaf_byte(b[at])) return false;
  const Op op = op_at(b, at);
  const std::size_t l = at + 1, r = rend_start;
  const bool l_int = !is_leaf_byte(b[l]), r_int = !is_leaf_byte(b[r]);
  switch (rule.family) {
    case Family::AssocH:
    case Family::AssocV: {
      const Op want = rule.family == Family::AssocH ? Op::H : Op::V;
      if (op != want) return false;
      return rule.direction == Direction::forward ? (l_int && op_at(b, l) == want) : (r_int && op_at(b, r) == want);
    }
    case Family::Interchange: {
      const Op root = rule.direction == Direction::forward ? Op::V : Op::H;
      return op == root && l_int && r_int && op_at(b, l) == opposite(root) && op_at(b, r) == opposite(root);
    }
  }
  return false;
}

// Rewrites the node at `at` in place into `out` (which holds a copy of b). Caller checked the match.
inline void rewrite_at(const std::string& b, std::size_t at, const RewriteRule& rule, std::string& out) {
  const std::size_t end = subtree_end(b, at);
  std::string mid;
  mid.reserve(end - at);
  if (rule.family == Family::Interchange) {
    // R [S p q] [S r s]  ->  S [R p r] [R q s], same bytes for both directions
    const std::size_t lc = at + 1;
    const std::size_t p = lc + 1, q = subtree_end(b, p), rc = subtree_end(b, q);
    const std::size_t r = rc + 1, s = subtree_end(b, r), e = subtree_end(b, s);
    mid.push_back(b[lc]);
    mid.push_back(b[at]);
    mid.append(b, p, q - p);
    mid.append(b, r, s - r);
    mid.push_back(b[at]);
    mid.append(b, q, rc - q);
    mid.append(b, s, e - s);
  } else if (rule.direction == Direction::forward) {
    // X [X p q] r  ->  X p [X q r]
    const std::size_t p = at + 2, q = subtree_end(b, p);
    mid.push_back(b[at]);
    mid.append(b, p, q - p);
    mid.push_back(b[at]);
    mid.append(b, q, end - q);
  } else {
    // X p [X q r]  ->  X [X p q] r
    const std::size_t p = at + 1, rc = subtree_end(b, p), q = rc + 1;
    mid.push_back(b[at]);
    mid.push_back(b[at]);
    mid.append(b, p, rc - p);
    mid.append(b, q, end - q);
  }
  out.assign(b, 0, at);
  out += mid;
  out.append(b, end, std::string::npos);
}

inline constexpr RewriteRule all_rules[] = {
    {Family::AssocH, Direction::forward},      {Family::AssocH, Direction::backward},
    {Family::AssocV, Direction::forward},      {Family::AssocV, Direction::backward},
    {Family::Interchange, Direction::forward}, {Family::Interchange, Direction::backward},
};

}  // namespace detail

/// Every enabled redex of `t`, in preorder of positions and then rule order.
inline std::vector<RewriteStep> find_redexes(const Tree& t, const RuleSet& rules = RuleSet::all()) {
  std::vector<RewriteStep> out;
  const auto& b = t.bytes();
  // walk preorder, tracking the path
  struct Frame {
    std::size_t at;
    std::string path;
  };
  std::vector<Frame> stack{{0, ""}};
  while (!stack.empty()) {
    auto [at, path] = std::move(stack.back());
    stack.pop_back();
    if (detail::is_leaf_byte(b[at])) continue;
    const std::size_t r = detail::subtree_end(b, at + 1);
    for (const auto& rule : detail::all_rules) {
      if (!rules.enabled(rule.family)) continue;
      if (detail::matches_at(b, at, r, rule)) out.push_back({rule, TreePosition::parse(path)});
    }
    stack.push_back({r, path + '1'});
    stack.push_back({at + 1, path + '0'});
  }
  return out;
}

inline bool matches(const Tree& t, const RewriteStep& s) {
  auto at = t.offset_of(s.position);
  if (at == std::string::npos || detail::is_leaf_byte(t.bytes()[at])) return false;
  return detail::matches_at(t.bytes(), at, detail::subtree_end(t.bytes(), at + 1), s.rule);
}

/// Left-hand pattern of a rule in the monomial grammar, for diagnostics.
inline std::string rule_pattern(const RewriteRule& r) {
  switch (r.family) {
    case Family::AssocH: return r.direction == Direction::forward ? "((p h q) h r)" : "(p h (q h r))";
    case Family::AssocV: return r.direction == Direction::forward ? "((p v q) v r)" : "(p v (q v r))";
    case Family::Interchange: return r.direction == Direction::forward ? "((p h q) v (r h s))" : "((p v q) h (r v s))";
  }
  return "?";
}

/// Applies `s`, or returns nullopt when the pattern does not match.
inline std::optional<Tree> try_apply(const Tree& t, const RewriteStep& s) {
  auto at = t.offset_of(s.position);
  if (at == std::string::npos || detail::is_leaf_byte(t.bytes()[at])) return std::nullopt;
  if (!detail::matches_at(t.bytes(), at, detail::subtree_end(t.bytes(), at + 1), s.rule)) return std::nullopt;
  std::string out;
  detail::rewrite_at(t.bytes(), at, s.rule, out);
  return Tree::from_bytes(std::move(out));
}

inline Tree apply_redex(const Tree& t, const RewriteStep& s) {
  auto r = try_apply(t, s);
  if (!r)
    throw error(std::string("pattern mismatch: ") + family_name(s.rule.family) + " " + direction_name(s.rule.direction) +
                " expects " + rule_pattern(s.rule) + " at position '" + s.position.str() + "'");
  return std::move(*r);
}

/// All one-step neighbours of a tree given as bytes, without building positions.
/// Used by the closure search where only the resulting keys matter.
template <class Fn>
void for_each_neighbour(const std::string& b, const RuleSet& rules, Fn&& fn) {
  std::string out;
  for (std::size_t at = 0; at < b.size();) {
    if (detail::is_leaf_byte(b[at])) {
      at += 2;
      continue;
    }
    const std::size_t r = detail::subtree_end(b, at + 1);
    for (const auto& rule : detail::all_rules) {
      if (!rules.enabled(rule.family)) continue;
      if (detail::matches_at(b, at, r, rule)) {
        detail::rewrite_at(b, at, rule, out);
        fn(out, rule, at);
      }
    }
    ++at;
  }
}

/// Position of the node starting at byte offset `at`.
inline TreePosition position_of_offset(const std::string& b, std::size_t at) {
  std::string path;
  std::size_t cur = 0;
  while (cur != at) {
    const std::size_t r = detail::subtree_end(b, cur + 1);
    if (at < r) {
      path.push_back('0');
      cur = cur + 1;
    } else {
      path.push_back('1');
      cur = r;
    }
  }
  return TreePosition::parse(path);
}

}  // namespace dis
