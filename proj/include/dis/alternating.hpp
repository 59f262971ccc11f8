#pragma once

// Alternating (not necessarily binary) plane trees: the normal form of a tree
// monomial modulo the two associative laws.

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "dis/tree.hpp"

namespace dis {

struct AltTree {
  Op op = Op::H;
  unsigned label = 0;  // leaves only
  std::vector<AltTree> children;

  static AltTree leaf(unsigned label) {
    AltTree a;
    a.label = label;
    return a;
  }

  /// Builds an `op` node from `children`, splicing in the children of any
  /// child that carries the same operation so the result stays alternating.
  static AltTree node(Op op, std::vector<AltTree> children) {
    AltTree a;
    a.op = op;
    for (auto& c : children) {
      if (!c.is_leaf() && c.op == op) {
        for (auto& g : c.children) a.children.push_back(std::move(g));
      } else {
        a.children.push_back(std::move(c));
      }
    }
    if (a.children.size() == 1) return std::move(a.children.front());
    return a;
  }

  bool is_leaf() const noexcept { return children.empty(); }

  std::size_t arity() const noexcept {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.arity();
    return n;
  }

  void collect_leaves(std::vector<unsigned>& out) const {
    if (is_leaf()) {
      out.push_back(label);
      return;
    }
    for (const auto& c : children) c.collect_leaves(out);
  }

  std::vector<unsigned> leaves() const {
    std::vector<unsigned> out;
    collect_leaves(out);
    return out;
  }

  friend bool operator==(const AltTree& a, const AltTree& b) {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.label == b.label;
    return a.op == b.op && a.children == b.children;
  }
};

namespace detail {

inline void append_key(const AltTree& a, std::string& out) {
  if (a.is_leaf()) {
    out.push_back(char(leaf_tag));
    out.push_back(static_cast<char>(a.label));
    return;
  }
  out.push_back(static_cast<char>(a.op));
  out.push_back(static_cast<char>(a.children.size()));
  for (const auto& c : a.children) append_key(c, out);
}

}  // namespace detail

/// Injective preorder encoding (tag, child count, leaf label).
inline std::string canonical_key(const AltTree& a) {
  std::string out;
  detail::append_key(a, out);
  return out;
}

inline bool is_alternating(const AltTree& a) {
  if (a.is_leaf()) return a.label >= 1;
  if (a.children.size() < 2) return false;
  for (const auto& c : a.children) {
    if (!c.is_leaf() && c.op == a.op) return false;
    if (!is_alternating(c)) return false;
  }
  return true;
}

/// Flattens every child carrying its parent's operation, bottom-up.
inline AltTree to_alternating(const Tree& t) {
  if (t.is_leaf()) return AltTree::leaf(t.label());
  std::vector<AltTree> kids;
  kids.push_back(to_alternating(t.left()));
  kids.push_back(to_alternating(t.right()));
  return AltTree::node(t.op(), std::move(kids));
}

/// Same structure with leaves renumbered 1..n left to right.
inline AltTree shape_of(const AltTree& a) {
  unsigned next = 1;
  std::function<AltTree(const AltTree&)> rec = [&](const AltTree& s) -> AltTree {
    if (s.is_leaf()) return AltTree::leaf(next++);
    AltTree r;
    r.op = s.op;
    for (const auto& c : s.children) r.children.push_back(rec(c));
    return r;
  };
  return rec(a);
}

inline AltTree with_leaf_sequence(const AltTree& a, const std::vector<unsigned>& labels) {
  std::size_t k = 0;
  std::function<AltTree(const AltTree&)> rec = [&](const AltTree& s) -> AltTree {
    if (s.is_leaf()) {
      if (k >= labels.size()) throw error("with_leaf_sequence: too few labels");
      return AltTree::leaf(labels[k++]);
    }
    AltTree r;
    r.op = s.op;
    for (const auto& c : s.children) r.children.push_back(rec(c));
    return r;
  };
  auto out = rec(a);
  if (k != labels.size()) throw error("with_leaf_sequence: too many labels");
  return out;
}

/// Right-comb bracketing of `items` under `op`.
inline Tree right_comb(Op op, const std::vector<Tree>& items) {
  if (items.empty()) throw error("right_comb: no items");
  Tree acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) acc = Tree::node(op, items[i], acc);
  return acc;
}

/// The representative that brackets every node as a right comb.
inline Tree right_comb_representative(const AltTree& a) {
  if (a.is_leaf()) return Tree::leaf(a.label);
  std::vector<Tree> items;
  items.reserve(a.children.size());
  for (const auto& c : a.children) items.push_back(right_comb_representative(c));
  return right_comb(a.op, items);
}

/// All binary trees t with to_alternating(t) == a.
inline std::vector<Tree> binary_representatives(const AltTree& a) {
  if (a.is_leaf()) return {Tree::leaf(a.label)};
  const auto k = a.children.size();
  std::vector<std::vector<Tree>> child_reps;
  child_reps.reserve(k);
  for (const auto& c : a.children) child_reps.push_back(binary_representatives(c));

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Tree>> memo;
  std::function<const std::vector<Tree>&(std::size_t, std::size_t)> range = [&](std::size_t i, std::size_t j) -> const std::vector<Tree>& {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Tree> out;
    if (i == j) {
      out = child_reps[i];
    } else {
      for (std::size_t m = i; m < j; ++m) {
        const auto& ls = range(i, m);
        const auto& rs = range(m + 1, j);
        for (const auto& l : ls)
          for (const auto& r : rs) out.push_back(Tree::node(a.op, l, r));
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  return range(0, k - 1);
}

/// Number of binary representatives, without building them.
inline std::uint64_t representative_count(const AltTree& a) {
  if (a.is_leaf()) return 1;
  std::uint64_t n = catalan(static_cast<unsigned>(a.children.size() - 1));
  for (const auto& c : a.children) n *= representative_count(c);
  return n;
}

inline constexpr unsigned default_alternating_limit = 10;

/// All alternating trees with n leaves numbered left to right; h-rooted trees first.
inline std::vector<AltTree> enumerate_alternating(unsigned n, unsigned limit = default_alternating_limit) {
  if (n < 1) throw error("enumerate_alternating: arity must be >= 1");
  if (n > limit) throw limit_error("enumerate_alternating: arity " + std::to_string(n) + " exceeds limit " + std::to_string(limit));

  // rooted[op][s]: alternating trees of size s >= 2 with root op (labels filled later)
  std::map<std::pair<Op, unsigned>, std::vector<AltTree>> rooted;
  std::function<const std::vector<AltTree>&(Op, unsigned)> gen = [&](Op op, unsigned s) -> const std::vector<AltTree>& {
    auto key = std::make_pair(op, s);
    if (auto it = rooted.find(key); it != rooted.end()) return it->second;
    std::vector<AltTree> out;
    // first child size f, then the remaining s - f leaves form >= 1 further children
    std::function<void(unsigned, std::vector<AltTree>&)> extend = [&](unsigned left, std::vector<AltTree>& prefix) {
      if (left == 0) {
        if (prefix.size() >= 2) {
          AltTree a;
          a.op = op;
          a.children = prefix;
          out.push_back(std::move(a));
        }
        return;
      }
      for (unsigned f = 1; f <= left; ++f) {
        if (f == s) continue;  // a single child would not be a valid node
        if (f == 1) {
          prefix.push_back(AltTree::leaf(1));
          extend(left - 1, prefix);
          prefix.pop_back();
        } else {
          for (const auto& c : gen(opposite(op), f)) {
            prefix.push_back(c);
            extend(left - f, prefix);
            prefix.pop_back();
          }
        }
      }
    };
    std::vector<AltTree> prefix;
    extend(s, prefix);
    return rooted.emplace(key, std::move(out)).first->second;
  };

  std::vector<AltTree> result;
  if (n == 1) {
    result.push_back(AltTree::leaf(1));
    return result;
  }
  for (Op op : {Op::H, Op::V})
    for (const auto& a : gen(op, n)) result.push_back(shape_of(a));
  return result;
}

// ---------------------------------------------------------------------------
// Text form: `(x1 x2 x3)_h`, children separated by spaces

inline void print_alt(std::ostream& os, const AltTree& a, const Names* names = nullptr) {
  if (a.is_leaf()) {
    if (names && a.label >= 1 && a.label <= names->size())
      os << (*names)[a.label - 1];
    else
      os << 'x' << a.label;
    return;
  }
  os << '(';
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (i) os << ' ';
    print_alt(os, a.children[i], names);
  }
  os << ")_" << op_char(a.op);
}

inline std::string to_string(const AltTree& a, const Names* names = nullptr) {
  std::ostringstream os;
  print_alt(os, a, names);
  return os.str();
}

inline std::string to_string(const AltTree& a, const Names& names) { return to_string(a, &names); }

inline std::ostream& operator<<(std::ostream& os, const AltTree& a) {
  print_alt(os, a);
  return os;
}

/// Parses the alternating text form. Leaf names resolve as in parse_monomial.
/// The result is normalised (same-operation children are spliced).
inline AltTree parse_alternating(std::string_view text, const Names* fixed_names = nullptr, Names* names_out = nullptr,
                                 ParseMode mode = ParseMode::standard) {
  detail::Lexer lex(text);
  detail::LeafNamer namer(fixed_names);
  std::size_t leaf_count = 0;

  // parse into a raw tree with leaf slots numbered by occurrence
  std::function<AltTree()> expr = [&]() -> AltTree {
    auto tok = lex.next();
    if (tok.kind == detail::Token::ident) {
      namer.add(tok.text, tok.offset);
      return AltTree::leaf(static_cast<unsigned>(++leaf_count));
    }
    if (tok.kind == detail::Token::end) throw parse_error("unexpected end of input", tok.offset);
    if (tok.kind != detail::Token::lparen) throw parse_error("expected identifier or '('", tok.offset);
    std::vector<AltTree> kids;
    while (lex.peek().kind != detail::Token::rparen) {
      if (lex.peek().kind == detail::Token::end) throw parse_error("unexpected end of input", lex.offset());
      kids.push_back(expr());
    }
    lex.next();
    auto suffix = lex.next();
    // the lexer reads "_h" as one identifier
    if (suffix.kind != detail::Token::ident || (suffix.text != "_h" && suffix.text != "_v"))
      throw parse_error("expected '_h' or '_v' after ')'", suffix.offset);
    if (kids.size() < 2) throw parse_error("an internal node needs at least two children", suffix.offset);
    return AltTree::node(suffix.text == "_h" ? Op::H : Op::V, std::move(kids));
  };

  AltTree raw = expr();
  auto trailing = lex.next();
  if (trailing.kind != detail::Token::end) throw parse_error("trailing input", trailing.offset);
  auto [labels, names] = namer.resolve(mode);
  // occurrence k carries label labels[k-1]; raw leaves are numbered by occurrence in order
  std::vector<unsigned> seq(raw.leaves().size());
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = labels[raw.leaves()[i] - 1];
  if (names_out) *names_out = std::move(names);
  return with_leaf_sequence(raw, seq);
}

}  // namespace dis

template <>
struct std::hash<dis::AltTree> {
  std::size_t operator()(const dis::AltTree& a) const { return std::hash<std::string>{}(dis::canonical_key(a)); }
};
