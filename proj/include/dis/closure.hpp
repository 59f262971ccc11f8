#pragma once

// Breadth-first exploration of rewrite classes.
//
// Binary closures walk tree monomials directly. Commutation search and
// equivalence checking walk associativity classes instead (alternating trees
// joined by interchange moves, see classes.hpp) and lift the resulting path
// back to explicit binary rewrite steps.

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "dis/alternating.hpp"
#include "dis/certificate.hpp"
#include "dis/classes.hpp"
#include "dis/rewrite.hpp"

namespace dis {

inline constexpr std::uint64_t default_budget = 10'000'000;

struct SearchOptions {
  std::uint64_t budget = default_budget;  // node expansions
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t expanded = 0;
  std::size_t frontier_peak = 0;
  std::size_t visited = 0;
  unsigned depth = 0;
};

namespace detail {

inline constexpr std::uint32_t no_parent = 0xffffffffu;

// Visited states in discovery order with BFS parent links.
struct Explored {
  std::vector<std::string> keys;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> depth;
  std::unordered_map<std::string, std::uint32_t> index;
  bool exhausted = false;
  SearchStats stats;

  std::uint32_t add(std::string key, std::uint32_t par, std::uint32_t d) {
    auto [it, inserted] = index.emplace(key, std::uint32_t(keys.size()));
    if (!inserted) return no_parent;
    keys.push_back(std::move(key));
    parent.push_back(par);
    depth.push_back(d);
    return it->second;
  }

  std::vector<std::uint32_t> path_to(std::uint32_t i) const {
    std::vector<std::uint32_t> p;
    for (; i != no_parent; i = parent[i]) p.push_back(i);
    std::reverse(p.begin(), p.end());
    return p;
  }
};

// Expands `level` (indices into ex.keys) into per-node neighbour lists, in parallel
// when requested. Output order does not depend on the thread count.
template <class Expand>
std::vector<std::vector<std::string>> expand_level(const Explored& ex, const std::vector<std::uint32_t>& level, std::size_t count,
                                                   unsigned threads, Expand& expand) {
  std::vector<std::vector<std::string>> out(count);
  auto work = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) expand(ex.keys[level[i]], out[i]);
  };
  if (threads <= 1 || count < 64) {
    work(0, count);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t from = t * chunk, to = std::min(count, from + chunk);
      if (from < to) pool.emplace_back(work, from, to);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

// Level-synchronous BFS. `expand(key, out)` appends neighbour keys; it must be
// safe to call concurrently when threads > 1.
template <class Expand>
Explored explore(std::string start, const SearchOptions& opt, Expand expand) {
  Explored ex;
  ex.add(std::move(start), no_parent, 0);
  std::vector<std::uint32_t> level{0};
  unsigned d = 0;
  while (!level.empty()) {
    ex.stats.frontier_peak = std::max(ex.stats.frontier_peak, level.size());
    const std::uint64_t room = opt.budget - ex.stats.expanded;
    const std::size_t count = std::size_t(std::min<std::uint64_t>(room, level.size()));
    auto next_lists = expand_level(ex, level, count, opt.threads, expand);
    ex.stats.expanded += count;
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < count; ++i)
      for (auto& k : next_lists[i]) {
        auto id = ex.add(std::move(k), level[i], d + 1);
        if (id != no_parent) next.push_back(id);
      }
    if (count < level.size()) {
      ex.stats.depth = d;
      ex.stats.visited = ex.keys.size();
      return ex;  // budget hit with unexpanded nodes left
    }
    level = std::move(next);
    if (!level.empty()) ++d;
  }
  ex.exhausted = true;
  ex.stats.depth = d;
  ex.stats.visited = ex.keys.size();
  return ex;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Binary closures

struct ClosureResult {
  std::vector<Tree> members;  // BFS discovery order, starting tree first
  bool exhausted = false;
  SearchStats stats;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // filled when requested

  bool contains(const Tree& t) const {
    return std::find(members.begin(), members.end(), t) != members.end();
  }
};

inline ClosureResult closure(const Tree& t, const RuleSet& rules = RuleSet::all(), const SearchOptions& opt = {},
                             bool with_edges = false) {
  auto ex = detail::explore(t.bytes(), opt, [&](const std::string& k, std::vector<std::string>& out) {
    for_each_neighbour(k, rules, [&](const std::string& n, const RewriteRule&, std::size_t) { out.push_back(n); });
  });
  ClosureResult r;
  r.exhausted = ex.exhausted;
  r.stats = ex.stats;
  r.members.reserve(ex.keys.size());
  for (auto& k : ex.keys) r.members.push_back(Tree::from_bytes(k));
  if (with_edges) {
    for (std::uint32_t i = 0; i < ex.keys.size(); ++i)
      for_each_neighbour(ex.keys[i], rules, [&](const std::string& n, const RewriteRule&, std::size_t) {
        auto it = ex.index.find(n);
        if (it != ex.index.end() && i < it->second) r.edges.emplace_back(i, it->second);
      });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Class-level closures

struct ClassClosure {
  std::vector<AltTree> members;  // BFS order
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> depth;
  bool exhausted = false;
  SearchStats stats;

  std::vector<std::uint32_t> path_to(std::uint32_t i) const {
    std::vector<std::uint32_t> p;
    for (; i != detail::no_parent; i = parent[i]) p.push_back(i);
    std::reverse(p.begin(), p.end());
    return p;
  }
};

namespace detail {

inline void class_neighbours(const std::string& key, std::vector<std::string>& out) {
  AltTree a = alt_from_key(key);
  for (const auto& m : class_moves(a)) out.push_back(canonical_key(apply_class_move(a, m)));
}

}  // namespace detail

/// Interchange-connected component of an associativity class.
inline ClassClosure class_closure(const AltTree& a, const SearchOptions& opt = {}) {
  auto ex = detail::explore(canonical_key(a), opt, [](const std::string& k, std::vector<std::string>& out) { detail::class_neighbours(k, out); });
  ClassClosure c;
  c.exhausted = ex.exhausted;
  c.stats = ex.stats;
  c.parent = std::move(ex.parent);
  c.depth = std::move(ex.depth);
  c.members.reserve(ex.keys.size());
  for (auto& k : ex.keys) c.members.push_back(alt_from_key(k));
  return c;
}

inline ClassClosure class_closure(const Tree& t, const SearchOptions& opt = {}) { return class_closure(to_alternating(t), opt); }

// ---------------------------------------------------------------------------
// Lifting class paths to binary rewrite steps

/// Forward associativity steps from t to the right-comb representative of its class.
inline std::vector<RewriteStep> steps_to_right_comb(const Tree& t) {
  std::vector<RewriteStep> steps;
  std::string cur = t.bytes(), next;
  for (;;) {
    bool moved = false;
    for (std::size_t at = 0; at < cur.size() && !moved;) {
      if (detail::is_leaf_byte(cur[at])) {
        at += 2;
        continue;
      }
      const std::size_t r = detail::subtree_end(cur, at + 1);
      const Op op = static_cast<Op>(cur[at]);
      const RewriteRule rule{op == Op::H ? Family::AssocH : Family::AssocV, Direction::forward};
      if (detail::matches_at(cur, at, r, rule)) {
        steps.push_back({rule, position_of_offset(cur, at)});
        detail::rewrite_at(cur, at, rule, next);
        cur.swap(next);
        moved = true;
      }
      ++at;
    }
    if (!moved) break;
  }
  return steps;
}

/// Associativity steps rewriting `from` into `to` (same alternating tree required).
inline std::vector<RewriteStep> reassociate(const Tree& from, const Tree& to) {
  if (!(to_alternating(from) == to_alternating(to))) throw error("reassociate: trees lie in different associativity classes");
  auto down = steps_to_right_comb(from);
  auto up = steps_to_right_comb(to);
  std::reverse(up.begin(), up.end());
  for (auto& s : up) s = s.inverse();
  down.insert(down.end(), up.begin(), up.end());
  return cancel_inverse_pairs(down);
}

/// Binary steps from `start` to `target` following the class sequence `path`
/// (path.front() is the class of start, path.back() the class of target,
/// consecutive classes one interchange move apart).
inline std::vector<RewriteStep> lift_class_path(const Tree& start, const std::vector<AltTree>& path, const Tree& target) {
  std::vector<RewriteStep> steps;
  Tree cur = start;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    std::optional<ClassMove> found;
    for (const auto& m : class_moves(path[k]))
      if (apply_class_move(path[k], m) == path[k + 1]) {
        found = m;
        break;
      }
    if (!found) throw error("lift_class_path: consecutive classes are not one interchange apart");
    auto [rep, pos] = expose_class_move(path[k], *found);
    for (auto& s : reassociate(cur, rep)) steps.push_back(s);
    const Op root = rep.subtree(pos).op();
    RewriteStep ic{{Family::Interchange, root == Op::V ? Direction::forward : Direction::backward}, pos};
    cur = apply_redex(rep, ic);
    steps.push_back(ic);
  }
  for (auto& s : reassociate(cur, target)) steps.push_back(s);
  return cancel_inverse_pairs(steps);
}

// ---------------------------------------------------------------------------
// Equivalence

enum class EquivalenceStatus { proved_equal, proved_distinct, unknown };

inline const char* status_name(EquivalenceStatus s) {
  switch (s) {
    case EquivalenceStatus::proved_equal: return "proved_equal";
    case EquivalenceStatus::proved_distinct: return "proved_distinct";
    case EquivalenceStatus::unknown: return "unknown";
  }
  return "?";
}

struct EquivalenceResult {
  EquivalenceStatus status = EquivalenceStatus::unknown;
  std::optional<RewriteCertificate> certificate;
  SearchStats stats;
};

/// Bidirectional search between the classes of t1 and t2, expanding the
/// smaller frontier first. A negative answer is only a proof when one side's
/// component was exhausted.
inline EquivalenceResult check_equivalence(const Tree& t1, const Tree& t2, const SearchOptions& opt = {}) {
  if (t1.arity() != t2.arity()) throw error("check_equivalence: arities differ");
  {
    auto l1 = t1.leaves(), l2 = t2.leaves();
    std::sort(l1.begin(), l1.end());
    std::sort(l2.begin(), l2.end());
    if (l1 != l2) throw error("check_equivalence: leaf multisets differ");
  }
  EquivalenceResult res;
  detail::Explored side[2];
  side[0].add(canonical_key(to_alternating(t1)), detail::no_parent, 0);
  side[1].add(canonical_key(to_alternating(t2)), detail::no_parent, 0);
  std::vector<std::uint32_t> frontier[2] = {{0}, {0}};

  auto finish = [&](std::uint32_t i0, std::uint32_t i1) {
    std::vector<AltTree> path;
    for (auto i : side[0].path_to(i0)) path.push_back(alt_from_key(side[0].keys[i]));
    auto back = side[1].path_to(i1);
    for (std::size_t j = back.size() - 1; j-- > 0;) path.push_back(alt_from_key(side[1].keys[back[j]]));
    RewriteCertificate c;
    c.initial = t1;
    c.claimed_final = t2;
    c.steps = lift_class_path(t1, path, t2);
    res.status = EquivalenceStatus::proved_equal;
    res.certificate = std::move(c);
  };
  unsigned depth[2] = {0, 0};
  auto fill_stats = [&] {
    res.stats.expanded = side[0].stats.expanded + side[1].stats.expanded;
    res.stats.visited = side[0].keys.size() + side[1].keys.size();
    res.stats.frontier_peak = std::max(side[0].stats.frontier_peak, side[1].stats.frontier_peak);
    res.stats.depth = depth[0] + depth[1];
  };

  if (side[0].keys[0] == side[1].keys[0]) {
    finish(0, 0);
    fill_stats();
    return res;
  }
  auto expander = [](const std::string& k, std::vector<std::string>& out) { detail::class_neighbours(k, out); };
  for (;;) {
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    auto& ex = side[s];
    auto& other = side[1 - s];
    ex.stats.frontier_peak = std::max(ex.stats.frontier_peak, frontier[s].size());
    const std::uint64_t used = side[0].stats.expanded + side[1].stats.expanded;
    const std::uint64_t room = opt.budget > used ? opt.budget - used : 0;
    const std::size_t count = std::size_t(std::min<std::uint64_t>(room, frontier[s].size()));
    auto lists = detail::expand_level(ex, frontier[s], count, opt.threads, expander);
    ex.stats.expanded += count;
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < count; ++i)
      for (auto& k : lists[i]) {
        if (auto it = other.index.find(k); it != other.index.end()) {
          auto id = ex.index.count(k) ? ex.index.at(k) : ex.add(k, frontier[s][i], depth[s] + 1);
          if (s == 0) finish(id, it->second);
          else finish(it->second, id);
          fill_stats();
          return res;
        }
        auto id = ex.add(std::move(k), frontier[s][i], depth[s] + 1);
        if (id != detail::no_parent) next.push_back(id);
      }
    if (count < frontier[s].size()) break;  // budget exhausted
    ++depth[s];
    frontier[s] = std::move(next);
    if (frontier[s].empty()) {
      // this side's component is complete and never met the other side
      res.status = EquivalenceStatus::proved_distinct;
      fill_stats();
      return res;
    }
  }
  res.status = EquivalenceStatus::unknown;
  fill_stats();
  return res;
}

// ---------------------------------------------------------------------------
// Commutation relations

struct CommutationWitness {
  Tree monomial;
  std::vector<unsigned> permutation;  // label k of the monomial becomes permutation[k-1]
  RewriteCertificate certificate;

  bool is_transposition() const {
    std::size_t moved = 0;
    for (std::size_t k = 0; k < permutation.size(); ++k) moved += permutation[k] != k + 1;
    return moved == 2;
  }
};

struct CommutationReport {
  std::vector<CommutationWitness> witnesses;
  bool exhausted = false;  // false: the search stopped at the budget and may be incomplete
  std::size_t classes = 0;
  SearchStats stats;
};

/// Cycle notation of a permutation, e.g. "(d g)"; "id" for the identity.
inline std::string cycle_string(const std::vector<unsigned>& perm, const Names* names = nullptr) {
  auto name = [&](unsigned k) {
    return names && k >= 1 && k <= names->size() ? (*names)[k - 1] : "x" + std::to_string(k);
  };
  std::vector<bool> seen(perm.size() + 1, false);
  std::string out;
  for (unsigned k = 1; k <= perm.size(); ++k) {
    if (seen[k] || perm[k - 1] == k) continue;
    out += '(';
    for (unsigned j = k; !seen[j]; j = perm[j - 1]) {
      seen[j] = true;
      if (out.back() != '(') out += ' ';
      out += name(j);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

/// Members of the rewrite class of t that are t with its leaves permuted.
/// Each distinct permutation is reported once, with a certificate that uses
/// the fewest interchange steps.
inline CommutationReport find_commutations(const Tree& t, const SearchOptions& opt = {}) {
  CommutationReport rep;
  const AltTree start = to_alternating(t);
  const std::string shape_key = canonical_key(shape_of(start));
  const auto base_leaves = t.leaves();
  const unsigned n = unsigned(base_leaves.size());

  auto cc = class_closure(start, opt);
  rep.exhausted = cc.exhausted;
  rep.stats = cc.stats;
  rep.classes = cc.members.size();
  for (std::uint32_t i = 1; i < cc.members.size(); ++i) {
    const auto& m = cc.members[i];
    if (canonical_key(shape_of(m)) != shape_key) continue;
    const auto leaves = m.leaves();
    if (leaves == base_leaves) continue;
    std::vector<unsigned> perm(n + 1, 0);
    for (unsigned k = 0; k < n; ++k) perm[base_leaves[k]] = leaves[k];
    perm.erase(perm.begin());
    // members are distinct classes of one shape, so permutations never repeat
    CommutationWitness w;
    w.monomial = t;
    w.permutation = perm;
    w.certificate.initial = t;
    w.certificate.claimed_final = with_leaf_sequence(t, leaves);
    std::vector<AltTree> path;
    for (auto j : cc.path_to(i)) path.push_back(cc.members[j]);
    w.certificate.steps = lift_class_path(t, path, w.certificate.claimed_final);
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

}  // namespace dis
