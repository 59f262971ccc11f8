#pragma once

// Search for commutativity relations: generate dyadic block partitions,
// discard those that cannot carry a relation, and run the commutation search
// on one preimage monomial of each survivor.

#include <atomic>
#include <random>
#include <thread>
#include <unordered_set>

#include "dis/closure.hpp"
#include "dis/partition.hpp"

namespace dis {

struct Pruning {
  bool both_main_cuts = true;    // a relation needs both main cuts
  bool two_interior = true;      // and at least two interior blocks
  bool slice_bounds = false;     // some main-cut direction has between min_slices and max_slices slices
  unsigned min_slices = 2;
  unsigned max_slices = 4;
  bool symmetry_dedup = true;    // keep one partition per dihedral orbit
};

struct SearchConfig {
  unsigned arity = 7;
  std::uint64_t budget = default_budget;  // per candidate
  unsigned threads = 1;
  Pruning pruning;
  std::size_t sample = 0;        // 0: enumerate every partition; otherwise draw this many at random
  std::uint64_t seed = 1;
  std::vector<std::pair<BlockPartition, Names>> seeds;  // when non-empty, only these candidates are examined
};

inline constexpr unsigned search_arity_limit = 10;

struct SearchCounters {
  std::size_t generated = 0;  // distinct partitions before pruning
  std::size_t skipped_main_cuts = 0;
  std::size_t skipped_interior = 0;
  std::size_t skipped_slices = 0;
  std::size_t examined = 0;
  std::size_t exhausted = 0;
  std::size_t incomplete = 0;  // budget hit before the class closure was complete
  std::size_t witnesses = 0;
};

struct CandidateResult {
  BlockPartition partition;
  Tree monomial;
  Names names;
  std::size_t classes = 0;
  bool exhausted = false;
  std::vector<CommutationWitness> witnesses;
};

struct SearchReport {
  SearchCounters counters;
  std::vector<CandidateResult> results;  // examined candidates, in canonical order
};

/// Key of a partition up to relabeling, and up to symmetry when asked.
inline std::string partition_key(const BlockPartition& p, bool up_to_symmetry) {
  std::string best = to_text(unlabeled(p));
  if (!up_to_symmetry) return best;
  for (const auto& g : dihedral_group()) best = std::min(best, to_text(unlabeled(apply_symmetry(p, g))));
  return best;
}

inline std::size_t interior_count(const BlockPartition& p) {
  auto c = classify_blocks(p);
  return std::size_t(std::count(c.begin(), c.end(), BlockClass::interior));
}

/// Letter names a, b, c, ... for up to 26 leaves, x1, x2, ... beyond.
inline Names letter_names(std::size_t n) {
  Names names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(n <= 26 ? std::string(1, char('a' + k)) : "x" + std::to_string(k + 1));
  return names;
}

/// Every dyadic partition with n blocks, unlabeled, one per key.
inline std::vector<BlockPartition> enumerate_partitions(unsigned n, bool up_to_symmetry = false) {
  if (n == 0 || n > search_arity_limit) throw limit_error("enumerate_partitions: arity " + std::to_string(n) + " out of range");
  std::vector<BlockPartition> level{unit_partition()};
  for (unsigned k = 1; k < n; ++k) {
    std::vector<BlockPartition> next;
    std::unordered_set<std::string> seen;
    for (const auto& p : level) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        for (Axis ax : {Axis::x, Axis::y}) {
          BlockPartition q = p;
          const Rect r = q.blocks[b].rect;
          q.blocks.erase(q.blocks.begin() + std::ptrdiff_t(b));
          q.blocks.push_back({ax == Axis::x ? r.west() : r.south(), 0});
          q.blocks.push_back({ax == Axis::x ? r.east() : r.north(), 0});
          q.sort();
          // dedup on plain geometry while growing; symmetry only at the end
          if (seen.insert(to_text(q)).second) next.push_back(std::move(q));
        }
      }
    }
    level = std::move(next);
  }
  if (!up_to_symmetry) return level;
  std::vector<BlockPartition> out;
  std::unordered_set<std::string> seen;
  for (auto& p : level)
    if (seen.insert(partition_key(p, true)).second) out.push_back(std::move(p));
  return out;
}

/// A uniformly random sequence of n - 1 bisections.
inline BlockPartition random_partition(unsigned n, std::mt19937_64& rng) {
  std::vector<std::pair<unsigned, Axis>> choices;
  for (unsigned k = 1; k < n; ++k) {
    std::uniform_int_distribution<unsigned> pick(1, k);
    std::bernoulli_distribution axis(0.5);
    choices.push_back({pick(rng), axis(rng) ? Axis::x : Axis::y});
  }
  return build_dyadic(choices);
}

enum class PruneReason { kept, main_cuts, interior, slices };

inline PruneReason prune(const BlockPartition& p, const Pruning& pr) {
  const auto mc = main_cuts(p);
  if (pr.both_main_cuts && !mc.both()) return PruneReason::main_cuts;
  if (pr.two_interior && interior_count(p) < 2) return PruneReason::interior;
  if (pr.slice_bounds) {
    bool ok = false;
    for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
      if (!mc.has(o)) continue;
      auto n = primary_cuts_and_slices(p, Rect::unit(), o).slices.size();
      ok = ok || (n >= pr.min_slices && n <= pr.max_slices);
    }
    if (!ok) return PruneReason::slices;
  }
  return PruneReason::kept;
}

inline SearchReport run_search(const SearchConfig& cfg) {
  if (cfg.budget == 0) throw error("search budget must be positive");
  SearchReport rep;
  std::vector<std::pair<BlockPartition, Names>> raw;
  if (!cfg.seeds.empty()) {
    raw = cfg.seeds;
  } else {
    if (cfg.arity == 0 || cfg.arity > search_arity_limit)
      throw limit_error("search: arity " + std::to_string(cfg.arity) + " exceeds limit " + std::to_string(search_arity_limit));
    std::vector<BlockPartition> parts;
    if (cfg.sample == 0) {
      parts = enumerate_partitions(cfg.arity, cfg.pruning.symmetry_dedup);
    } else {
      std::mt19937_64 rng(cfg.seed);
      std::unordered_set<std::string> seen;
      for (std::size_t i = 0; i < cfg.sample; ++i) {
        auto p = random_partition(cfg.arity, rng);
        if (seen.insert(partition_key(p, cfg.pruning.symmetry_dedup)).second) parts.push_back(std::move(p));
      }
    }
    for (auto& p : parts) raw.emplace_back(label_by_order(p), letter_names(p.size()));
  }
  rep.counters.generated = raw.size();

  std::vector<std::pair<BlockPartition, Names>> kept;
  for (auto& c : raw) {
    switch (prune(c.first, cfg.pruning)) {
      case PruneReason::main_cuts: ++rep.counters.skipped_main_cuts; break;
      case PruneReason::interior: ++rep.counters.skipped_interior; break;
      case PruneReason::slices: ++rep.counters.skipped_slices; break;
      case PruneReason::kept: kept.push_back(std::move(c)); break;
    }
  }

  // canonical order, independent of how candidates were produced
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return to_text(a.first) < to_text(b.first); });
  rep.results.resize(kept.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < kept.size();) {
      auto& r = rep.results[i];
      r.partition = kept[i].first;
      r.names = kept[i].second;
      r.monomial = fiber(r.partition).front();
      auto fc = find_commutations(r.monomial, SearchOptions{cfg.budget, 1});
      r.classes = fc.classes;
      r.exhausted = fc.exhausted;
      r.witnesses = std::move(fc.witnesses);
      for (auto& w : r.witnesses) w.certificate.names = r.names;
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, unsigned(kept.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : rep.results) {
    ++rep.counters.examined;
    if (r.exhausted) ++rep.counters.exhausted;
    else ++rep.counters.incomplete;
    rep.counters.witnesses += r.witnesses.size();
  }
  return rep;
}

}  // namespace dis
