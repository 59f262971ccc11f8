#pragma once

// Tree monomials of the free operad on two binary operations.
//
// A tree is stored as its preorder byte encoding: an internal node is a single
// byte (1 = h, 2 = v) followed by its left and right subtrees, a leaf is the
// byte 0 followed by its label. Labels are limited to 1..127 so the label is a
// one-byte varint and the storage doubles as the canonical key.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dis {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class limit_error : public error {
public:
  using error::error;
};

enum class Op : std::uint8_t { H = 1, V = 2 };

constexpr Op opposite(Op op) noexcept { return op == Op::H ? Op::V : Op::H; }
constexpr char op_char(Op op) noexcept { return op == Op::H ? 'h' : 'v'; }

inline constexpr unsigned max_arity = 127;

namespace detail {

inline constexpr std::uint8_t leaf_tag = 0;

inline bool is_leaf_byte(char c) noexcept { return static_cast<std::uint8_t>(c) == leaf_tag; }

// One past the last byte of the subtree starting at `pos`.
inline std::size_t subtree_end(std::string_view bytes, std::size_t pos) noexcept {
  std::size_t pending = 1;
  while (pending > 0) {
    if (is_leaf_byte(bytes[pos])) {
      pos += 2;
      --pending;
    } else {
      pos += 1;
      ++pending;
    }
  }
  return pos;
}

}  // namespace detail

/// Path from the root: '0' descends left, '1' descends right.
class TreePosition {
public:
  TreePosition() = default;

  static TreePosition parse(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i] != '0' && text[i] != '1') throw parse_error("position must be a 0/1 string", i);
    TreePosition p;
    p.path_ = std::string(text);
    return p;
  }

  TreePosition left() const { return extended('0'); }
  TreePosition right() const { return extended('1'); }
  TreePosition child(bool right_child) const { return extended(right_child ? '1' : '0'); }

  const std::string& str() const noexcept { return path_; }
  std::size_t depth() const noexcept { return path_.size(); }
  bool is_root() const noexcept { return path_.empty(); }

  friend bool operator==(const TreePosition&, const TreePosition&) = default;
  friend auto operator<=>(const TreePosition&, const TreePosition&) = default;

private:
  TreePosition extended(char c) const {
    TreePosition p = *this;
    p.path_.push_back(c);
    return p;
  }
  std::string path_;
};

class Tree {
public:
  Tree() : bytes_{char(detail::leaf_tag), char(1)} {}

  static Tree leaf(unsigned label) {
    if (label == 0 || label > max_arity) throw error("leaf label out of range: " + std::to_string(label));
    Tree t;
    t.bytes_[1] = static_cast<char>(label);
    return t;
  }

  static Tree node(Op op, const Tree& left, const Tree& right) {
    Tree t;
    t.bytes_.clear();
    t.bytes_.reserve(1 + left.bytes_.size() + right.bytes_.size());
    t.bytes_.push_back(static_cast<char>(op));
    t.bytes_ += left.bytes_;
    t.bytes_ += right.bytes_;
    return t;
  }

  /// Wraps an encoding produced by `bytes()`; the caller guarantees validity.
  static Tree from_bytes(std::string bytes) {
    Tree t;
    t.bytes_ = std::move(bytes);
    return t;
  }

  bool is_leaf() const noexcept { return detail::is_leaf_byte(bytes_[0]); }
  Op op() const noexcept { return static_cast<Op>(bytes_[0]); }
  unsigned label() const noexcept { return static_cast<std::uint8_t>(bytes_[1]); }

  Tree left() const { return Tree::from_bytes(bytes_.substr(1, left_end() - 1)); }
  Tree right() const {
    auto e = left_end();
    return Tree::from_bytes(bytes_.substr(e));
  }

  std::size_t arity() const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < bytes_.size();) {
      if (detail::is_leaf_byte(bytes_[i])) {
        ++n;
        i += 2;
      } else {
        ++i;
      }
    }
    return n;
  }

  /// Leaf labels read left to right.
  std::vector<unsigned> leaves() const {
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < bytes_.size();) {
      if (detail::is_leaf_byte(bytes_[i])) {
        out.push_back(static_cast<std::uint8_t>(bytes_[i + 1]));
        i += 2;
      } else {
        ++i;
      }
    }
    return out;
  }

  std::size_t internal_count() const noexcept { return arity() - 1; }

  const std::string& bytes() const noexcept { return bytes_; }

  /// Byte offset of the node addressed by `pos`, or npos if the path leaves the tree.
  std::size_t offset_of(const TreePosition& pos) const noexcept {
    std::size_t at = 0;
    for (char c : pos.str()) {
      if (detail::is_leaf_byte(bytes_[at])) return std::string::npos;
      at = c == '0' ? at + 1 : detail::subtree_end(bytes_, at + 1);
    }
    return at;
  }

  bool has_position(const TreePosition& pos) const noexcept { return offset_of(pos) != std::string::npos; }

  Tree subtree(const TreePosition& pos) const {
    auto at = offset_of(pos);
    if (at == std::string::npos) throw error("position " + pos.str() + " is not in the tree");
    return Tree::from_bytes(bytes_.substr(at, detail::subtree_end(bytes_, at) - at));
  }

  Tree replaced(const TreePosition& pos, const Tree& replacement) const {
    auto at = offset_of(pos);
    if (at == std::string::npos) throw error("position " + pos.str() + " is not in the tree");
    auto end = detail::subtree_end(bytes_, at);
    std::string out;
    out.reserve(bytes_.size() - (end - at) + replacement.bytes_.size());
    out.append(bytes_, 0, at);
    out += replacement.bytes_;
    out.append(bytes_, end, std::string::npos);
    return Tree::from_bytes(std::move(out));
  }

  friend bool operator==(const Tree& a, const Tree& b) noexcept { return a.bytes_ == b.bytes_; }
  friend auto operator<=>(const Tree& a, const Tree& b) noexcept { return a.bytes_ <=> b.bytes_; }

private:
  std::size_t left_end() const noexcept { return detail::subtree_end(bytes_, 1); }

  std::string bytes_;
};

/// Injective, prefix-free preorder encoding: tag byte (0 leaf, 1 h, 2 v), leaf label as varint.
inline const std::string& canonical_key(const Tree& t) noexcept { return t.bytes(); }

inline bool is_standard(const Tree& t) {
  auto ls = t.leaves();
  std::sort(ls.begin(), ls.end());
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] != i + 1) return false;
  return true;
}

/// Replaces each leaf label `l` by `mapping[l - 1]`.
inline Tree relabel(const Tree& t, const std::vector<unsigned>& mapping) {
  std::string b = t.bytes();
  for (std::size_t i = 0; i < b.size();) {
    if (detail::is_leaf_byte(b[i])) {
      unsigned l = static_cast<std::uint8_t>(b[i + 1]);
      if (l == 0 || l > mapping.size()) throw error("relabel: label " + std::to_string(l) + " not mapped");
      b[i + 1] = static_cast<char>(mapping[l - 1]);
      i += 2;
    } else {
      ++i;
    }
  }
  return Tree::from_bytes(std::move(b));
}

/// Replaces leaf labels by `labels` in left-to-right order.
inline Tree with_leaf_sequence(const Tree& t, const std::vector<unsigned>& labels) {
  std::string b = t.bytes();
  std::size_t k = 0;
  for (std::size_t i = 0; i < b.size();) {
    if (detail::is_leaf_byte(b[i])) {
      if (k >= labels.size()) throw error("with_leaf_sequence: too few labels");
      b[i + 1] = static_cast<char>(labels[k++]);
      i += 2;
    } else {
      ++i;
    }
  }
  if (k != labels.size()) throw error("with_leaf_sequence: too many labels");
  return Tree::from_bytes(std::move(b));
}

/// Same operations and bracketing, leaves numbered 1..n left to right.
inline Tree shape_of(const Tree& t) {
  std::vector<unsigned> id(t.arity());
  std::iota(id.begin(), id.end(), 1u);
  return with_leaf_sequence(t, id);
}

// ---------------------------------------------------------------------------
// Text form

using Names = std::vector<std::string>;

inline void print_tree(std::ostream& os, const Tree& t, const Names* names = nullptr) {
  const std::string& b = t.bytes();
  // explicit stack: (offset, state) where state counts children already printed
  struct Frame {
    std::size_t at;
    int state;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    auto& f = stack.back();
    if (detail::is_leaf_byte(b[f.at])) {
      unsigned l = static_cast<std::uint8_t>(b[f.at + 1]);
      if (names && l >= 1 && l <= names->size())
        os << (*names)[l - 1];
      else
        os << 'x' << l;
      stack.pop_back();
      continue;
    }
    if (f.state == 0) {
      os << '(';
      f.state = 1;
      stack.push_back({f.at + 1, 0});
    } else if (f.state == 1) {
      os << ' ' << op_char(static_cast<Op>(b[f.at])) << ' ';
      f.state = 2;
      auto r = detail::subtree_end(b, f.at + 1);
      stack.push_back({r, 0});
    } else {
      os << ')';
      stack.pop_back();
    }
  }
}

inline std::string to_string(const Tree& t, const Names* names = nullptr) {
  std::ostringstream os;
  print_tree(os, t, names);
  return os.str();
}

inline std::string to_string(const Tree& t, const Names& names) { return to_string(t, &names); }

inline std::ostream& operator<<(std::ostream& os, const Tree& t) {
  print_tree(os, t);
  return os;
}

enum class ParseMode { standard, lenient };

struct ParsedMonomial {
  Tree tree;
  Names names;  // names[k-1] is the identifier of label k
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// x<k> with k >= 1 and no leading zero
inline bool is_indexed_name(std::string_view s, unsigned& k) {
  if (s.size() < 2 || s[0] != 'x' || s[1] == '0') return false;
  unsigned v = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + unsigned(s[i] - '0');
    if (v > max_arity) return false;
  }
  k = v;
  return true;
}

struct Token {
  enum Kind { lparen, rparen, ident, end } kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) return {Token::end, {}, pos_};
    char c = src_[pos_];
    if (c == '(') return {Token::lparen, src_.substr(pos_++, 1), pos_ - 1};
    if (c == ')') return {Token::rparen, src_.substr(pos_++, 1), pos_ - 1};
    if (ident_start(c)) {
      auto start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      return {Token::ident, src_.substr(start, pos_ - start), start};
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  Token peek() {
    auto saved = pos_;
    auto t = next();
    pos_ = saved;
    return t;
  }

  std::size_t offset() const { return pos_; }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

// Collects leaf identifiers in order and resolves them to labels once parsing is done.
class LeafNamer {
public:
  explicit LeafNamer(const Names* fixed) : fixed_(fixed) {}

  std::size_t add(std::string_view name, std::size_t offset) {
    idents_.emplace_back(name);
    offsets_.push_back(offset);
    return idents_.size() - 1;
  }

  // Returns label per occurrence and the resulting name table.
  std::pair<std::vector<unsigned>, Names> resolve(ParseMode mode) const {
    std::vector<unsigned> labels(idents_.size());
    Names names;
    if (fixed_) {
      names = *fixed_;
      std::map<std::string, unsigned> index;
      for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], unsigned(i + 1));
      for (std::size_t i = 0; i < idents_.size(); ++i) {
        auto it = index.find(idents_[i]);
        if (it == index.end()) throw parse_error("unknown identifier '" + idents_[i] + "'", offsets_[i]);
        labels[i] = it->second;
      }
    } else {
      bool all_indexed = !idents_.empty();
      for (auto& s : idents_) {
        unsigned k;
        if (!is_indexed_name(s, k)) all_indexed = false;
      }
      if (all_indexed) {
        unsigned top = 0;
        for (std::size_t i = 0; i < idents_.size(); ++i) {
          is_indexed_name(idents_[i], labels[i]);
          top = std::max(top, labels[i]);
        }
        names.resize(top);
        for (unsigned k = 1; k <= top; ++k) names[k - 1] = "x" + std::to_string(k);
      } else {
        std::map<std::string, unsigned> index;
        for (std::size_t i = 0; i < idents_.size(); ++i) {
          auto [it, inserted] = index.emplace(idents_[i], unsigned(index.size() + 1));
          if (inserted) names.push_back(idents_[i]);
          labels[i] = it->second;
          if (it->second > max_arity) throw parse_error("too many distinct leaves", offsets_[i]);
        }
      }
    }
    if (mode == ParseMode::standard) {
      std::vector<bool> seen(names.size() + 1, false);
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == 0 || labels[i] > names.size())
          throw parse_error("leaf label out of range", offsets_[i]);
        if (seen[labels[i]]) throw parse_error("duplicate leaf identifier '" + idents_[i] + "'", offsets_[i]);
        seen[labels[i]] = true;
      }
      if (!fixed_)
        for (std::size_t k = 1; k < seen.size(); ++k)
          if (!seen[k]) throw parse_error("leaf labels do not form a permutation (missing x" + std::to_string(k) + ")", 0);
    }
    return {labels, names};
  }

private:
  const Names* fixed_;
  std::vector<std::string> idents_;
  std::vector<std::size_t> offsets_;
};

}  // namespace detail

/// Parses `expr := ident | "(" expr ("h"|"v") expr ")"`.
/// Identifiers become labels by first occurrence unless all of them are x<k>;
/// with `fixed_names`, identifiers are looked up in that table instead.
inline ParsedMonomial parse_monomial(std::string_view text, ParseMode mode = ParseMode::standard,
                                     const Names* fixed_names = nullptr) {
  detail::Lexer lex(text);
  detail::LeafNamer namer(fixed_names);
  // Builds bytes with placeholder leaf slots filled after name resolution.
  std::string bytes;
  std::vector<std::size_t> leaf_slots;

  std::function<void()> expr = [&]() {
    auto tok = lex.next();
    if (tok.kind == detail::Token::ident) {
      bytes.push_back(char(detail::leaf_tag));
      leaf_slots.push_back(bytes.size());
      bytes.push_back(0);
      namer.add(tok.text, tok.offset);
      return;
    }
    if (tok.kind == detail::Token::end) throw parse_error("unexpected end of input", tok.offset);
    if (tok.kind != detail::Token::lparen) throw parse_error("expected identifier or '('", tok.offset);
    auto op_at = bytes.size();
    bytes.push_back(0);
    expr();
    auto op_tok = lex.next();
    if (op_tok.kind == detail::Token::end) throw parse_error("unexpected end of input", op_tok.offset);
    if (op_tok.kind != detail::Token::ident || (op_tok.text != "h" && op_tok.text != "v"))
      throw parse_error("expected operation 'h' or 'v'", op_tok.offset);
    bytes[op_at] = static_cast<char>(op_tok.text == "h" ? Op::H : Op::V);
    expr();
    auto close = lex.next();
    if (close.kind == detail::Token::end) throw parse_error("unexpected end of input", close.offset);
    if (close.kind != detail::Token::rparen) throw parse_error("expected ')'", close.offset);
  };

  expr();
  auto trailing = lex.next();
  if (trailing.kind != detail::Token::end) throw parse_error("trailing input", trailing.offset);

  auto [labels, names] = namer.resolve(mode);
  for (std::size_t i = 0; i < leaf_slots.size(); ++i) bytes[leaf_slots[i]] = static_cast<char>(labels[i]);
  return {Tree::from_bytes(std::move(bytes)), std::move(names)};
}

inline Tree parse_tree(std::string_view text, ParseMode mode = ParseMode::standard) {
  return parse_monomial(text, mode).tree;
}

// ---------------------------------------------------------------------------
// Operad structure

/// Symmetric partial composition t o_i u: the leaf labelled i is replaced by u.
/// Labels of t above i shift by arity(u) - 1, labels of u shift by i - 1.
inline Tree partial_compose(const Tree& t, unsigned i, const Tree& u) {
  const auto m = t.arity();
  const auto n = u.arity();
  if (i < 1 || i > m) throw error("partial_compose: index " + std::to_string(i) + " out of range 1.." + std::to_string(m));
  if (m + n - 1 > max_arity) throw limit_error("partial_compose: result arity too large");
  std::string shifted_u = u.bytes();
  for (std::size_t k = 0; k < shifted_u.size();) {
    if (detail::is_leaf_byte(shifted_u[k])) {
      shifted_u[k + 1] = static_cast<char>(static_cast<std::uint8_t>(shifted_u[k + 1]) + i - 1);
      k += 2;
    } else {
      ++k;
    }
  }
  std::string out;
  const std::string& b = t.bytes();
  bool found = false;
  for (std::size_t k = 0; k < b.size();) {
    if (detail::is_leaf_byte(b[k])) {
      unsigned l = static_cast<std::uint8_t>(b[k + 1]);
      if (l == i && !found) {
        out += shifted_u;
        found = true;
      } else {
        out.push_back(b[k]);
        out.push_back(static_cast<char>(l > i ? l + n - 1 : l));
      }
      k += 2;
    } else {
      out.push_back(b[k++]);
    }
  }
  return Tree::from_bytes(std::move(out));
}

/// mu(T) in functional notation, variables renumbered left to right.
inline std::string to_word(const Tree& t) {
  std::string out;
  unsigned next = 1;
  std::function<void(const Tree&)> rec = [&](const Tree& s) {
    if (s.is_leaf()) {
      out += "x" + std::to_string(next++);
      return;
    }
    out += s.op() == Op::H ? "H(" : "V(";
    rec(s.left());
    out += ',';
    rec(s.right());
    out += ')';
  };
  rec(t);
  return out;
}

// ---------------------------------------------------------------------------
// Dihedral symmetries of the square

/// g = transpose^t . flip_v^v . flip_h^h (applied right to left).
struct Dihedral {
  bool flip_h = false;     // reverse operands of every h node (x -> 1 - x)
  bool flip_v = false;     // reverse operands of every v node (y -> 1 - y)
  bool transpose = false;  // swap h and v labels (x <-> y)

  friend bool operator==(const Dihedral&, const Dihedral&) = default;

  static Dihedral identity() { return {}; }

  /// (a * b)(t) = a(b(t)).
  friend Dihedral operator*(const Dihedral& a, const Dihedral& b) {
    // T FH = FV T, so moving b.transpose leftwards past a's flips swaps them.
    Dihedral r;
    bool ah = b.transpose ? a.flip_v : a.flip_h;
    bool av = b.transpose ? a.flip_h : a.flip_v;
    r.flip_h = ah != b.flip_h;
    r.flip_v = av != b.flip_v;
    r.transpose = a.transpose != b.transpose;
    return r;
  }

  std::string name() const {
    std::string s;
    if (transpose) s += "T";
    if (flip_v) s += "Fv";
    if (flip_h) s += "Fh";
    return s.empty() ? "id" : s;
  }
};

inline std::array<Dihedral, 8> dihedral_group() {
  std::array<Dihedral, 8> g;
  for (unsigned k = 0; k < 8; ++k) g[k] = Dihedral{bool(k & 1), bool(k & 2), bool(k & 4)};
  return g;
}

inline Tree apply_symmetry(const Tree& t, const Dihedral& g) {
  if (t.is_leaf()) return t;
  Tree l = apply_symmetry(t.left(), g);
  Tree r = apply_symmetry(t.right(), g);
  Op op = t.op();
  bool swap = (op == Op::H && g.flip_h) || (op == Op::V && g.flip_v);
  if (swap) std::swap(l, r);
  if (g.transpose) op = opposite(op);
  return Tree::node(op, l, r);
}

// ---------------------------------------------------------------------------
// Enumeration

inline std::uint64_t catalan(unsigned n) {
  std::uint64_t c = 1;
  for (unsigned k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

/// 2^(n-1) * Catalan(n-1)
inline std::uint64_t shape_count(unsigned n) { return n == 0 ? 0 : (std::uint64_t{1} << (n - 1)) * catalan(n - 1); }

inline constexpr unsigned default_shape_limit = 10;

/// All operation-labelled binary shapes with n leaves numbered left to right.
/// Order: by size of the left subtree, then h before v, then left shape, then right shape.
inline std::vector<Tree> enumerate_shapes(unsigned n, unsigned limit = default_shape_limit) {
  if (n < 1) throw error("enumerate_shapes: arity must be >= 1");
  if (n > limit) throw limit_error("enumerate_shapes: arity " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  // unlabelled shapes use label 1 everywhere, relabelled at the end
  std::vector<std::vector<Tree>> by_size(n + 1);
  by_size[1] = {Tree::leaf(1)};
  for (unsigned s = 2; s <= n; ++s) {
    for (unsigned k = 1; k < s; ++k)
      for (Op op : {Op::H, Op::V})
        for (const auto& l : by_size[k])
          for (const auto& r : by_size[s - k]) by_size[s].push_back(Tree::node(op, l, r));
  }
  std::vector<Tree> out;
  out.reserve(by_size[n].size());
  for (const auto& t : by_size[n]) out.push_back(shape_of(t));
  return out;
}

}  // namespace dis

template <>
struct std::hash<dis::Tree> {
  std::size_t operator()(const dis::Tree& t) const noexcept { return std::hash<std::string>{}(t.bytes()); }
};
