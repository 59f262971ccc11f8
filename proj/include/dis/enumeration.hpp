#pragma once

// Counting: the interchange graph on associativity classes, its isolated
// vertices, dihedral orbits of shapes, and the check that interchange classes
// are exactly the preimages of the geometric realization.

#include <algorithm>
#include <map>
#include <unordered_map>

#include "dis/alternating.hpp"
#include "dis/classes.hpp"
#include "dis/closure.hpp"
#include "dis/partition.hpp"
#include "dis/rewrite.hpp"

namespace dis {

inline constexpr unsigned default_graph_limit = 8;

struct InterchangeGraph {
  std::vector<AltTree> vertices;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, sorted, no duplicates

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(vertices.size(), 0);
    for (auto [i, j] : edges) {
      ++d[i];
      ++d[j];
    }
    return d;
  }

  std::size_t isolated() const {
    auto d = degrees();
    return std::size_t(std::count(d.begin(), d.end(), std::size_t{0}));
  }
};

/// Vertices: alternating trees with n leaves. Edges: one interchange applied
/// to some binary representative of one endpoint gives a representative of the other.
inline InterchangeGraph interchange_graph(unsigned n, unsigned limit = default_graph_limit) {
  if (n > limit) throw limit_error("interchange_graph: arity " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  InterchangeGraph g;
  g.vertices = enumerate_alternating(n, std::max(limit, n));
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < g.vertices.size(); ++i) index.emplace(canonical_key(g.vertices[i]), i);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  const RuleSet ic = RuleSet::interchange_only();
  for (std::uint32_t i = 0; i < g.vertices.size(); ++i) {
    for (const auto& rep : binary_representatives(g.vertices[i])) {
      for_each_neighbour(rep.bytes(), ic, [&](const std::string& nb, const RewriteRule&, std::size_t) {
        auto j = index.at(canonical_key(shape_of(to_alternating(Tree::from_bytes(nb)))));
        if (i != j) edges.emplace_back(std::min(i, j), std::max(i, j));
      });
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  return g;
}

inline std::size_t isolated_count(unsigned n, unsigned limit = default_graph_limit) { return interchange_graph(n, limit).isolated(); }

/// Same count, computed without the graph: an alternating tree is isolated
/// iff no node has two adjacent internal children.
inline std::size_t isolated_count_direct(unsigned n, unsigned limit = default_alternating_limit) {
  auto all = enumerate_alternating(n, limit);
  return std::size_t(std::count_if(all.begin(), all.end(), [](const AltTree& a) { return !has_class_move(a); }));
}

struct Orbit {
  Tree representative;  // least member by canonical key
  std::vector<Tree> members;
};

/// Orbits of the operation-labeled shapes of arity n under the dihedral group,
/// sorted by representative.
inline std::vector<Orbit> dihedral_orbits(unsigned n = 4, unsigned limit = default_shape_limit) {
  std::map<std::string, Orbit> by_rep;
  std::set<std::string> done;
  for (const auto& t : enumerate_shapes(n, limit)) {
    if (done.count(t.bytes())) continue;
    std::set<Tree> orbit;
    for (const auto& g : dihedral_group()) orbit.insert(shape_of(apply_symmetry(t, g)));
    Orbit o;
    o.members.assign(orbit.begin(), orbit.end());
    o.representative = o.members.front();
    for (const auto& m : o.members) done.insert(m.bytes());
    by_rep.emplace(o.representative.bytes(), std::move(o));
  }
  std::vector<Orbit> out;
  for (auto& [k, o] : by_rep) out.push_back(std::move(o));
  return out;
}

struct FiberCheck {
  bool ok = true;
  std::size_t shapes = 0;
  std::size_t partitions = 0;     // distinct unlabeled realizations
  std::size_t nonsingleton = 0;   // partitions with more than one preimage shape
  std::size_t largest = 0;
  std::vector<Tree> counterexamples;
};

inline constexpr unsigned fiber_check_limit = 6;

/// For every shape t of arity n: the interchange-only closure of t equals fiber(realize(t)).
inline FiberCheck verify_fiber_equivalence(unsigned n, unsigned limit = fiber_check_limit) {
  if (n > limit) throw limit_error("verify_fiber_equivalence: arity " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  FiberCheck fc;
  std::map<std::string, std::size_t> per_partition;
  for (const auto& t : enumerate_shapes(n)) {
    ++fc.shapes;
    auto cl = closure(t, RuleSet::interchange_only());
    auto members = cl.members;
    std::sort(members.begin(), members.end());
    auto p = realize(t);
    if (!cl.exhausted || members != fiber(p)) {
      fc.ok = false;
      fc.counterexamples.push_back(t);
    }
    ++per_partition[to_text(unlabeled(p))];
  }
  fc.partitions = per_partition.size();
  for (const auto& [k, c] : per_partition) {
    if (c > 1) ++fc.nonsingleton;
    fc.largest = std::max(fc.largest, c);
  }
  return fc;
}

/// Shapes of arity n sharing an unlabeled realization with another shape, grouped by partition.
inline std::vector<std::vector<Tree>> noninjective_fibers(unsigned n) {
  std::map<std::string, std::vector<Tree>> by_partition;
  for (const auto& t : enumerate_shapes(n)) by_partition[to_text(unlabeled(realize(t)))].push_back(t);
  std::vector<std::vector<Tree>> out;
  for (auto& [k, v] : by_partition)
    if (v.size() > 1) out.push_back(std::move(v));
  return out;
}

}  // namespace dis
