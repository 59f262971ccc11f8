#pragma once

// Named verification targets: known commutativity relations with shipped
// certificates, and configurations whose rewrite classes contain none.

#include <filesystem>
#include <sstream>

#include "dis/certificate.hpp"
#include "dis/closure.hpp"
#include "dis/partition.hpp"

namespace dis {

enum class TargetKind { equivalence, commutation, negative, order_preserving };

struct CatalogTarget {
  std::string name;
  std::string summary;
  TargetKind kind = TargetKind::equivalence;
  std::vector<std::string> monomials;  // one entry, except for families of negative cases
  std::string rhs;                     // positive targets: the permuted monomial
  std::string transposition;           // positive targets, e.g. "(d g)"
  std::string certificate;             // file name under <data>/certificates, may be empty
  std::vector<std::string> chain;      // optional class-level route for the certificate
  std::vector<std::string> watched;    // order_preserving: leaves whose x-order must be fixed
  std::size_t first_closure_size = 0;  // negative families: expected binary closure size of the first member, 0 = unchecked
};

/// Class-level route for configuration A: the starting class followed by the
/// twenty interchange moves, in the alternating text form.
inline const std::vector<std::string>& config_a_chain() {
  static const std::vector<std::string> chain{
      "(((a b)_h (c (d e)_v)_h)_v (((f g)_v h)_h (i j)_h)_v)_h",
      "(((a b)_h (c (d e)_v)_h)_v (f g i)_v (h j)_v)_h",
      "(((a b)_h (c (d e)_v)_h)_v ((f h)_h ((g i)_v j)_h)_v)_h",
      "((a c)_v (b d e)_v ((f h)_h ((g i)_v j)_h)_v)_h",
      "(((a (b d)_v)_h (c e)_h)_v ((f h)_h ((g i)_v j)_h)_v)_h",
      "((a (b d)_v f h)_h (c e (g i)_v j)_h)_v",
      "(((a (b d)_v)_h (c e (g i)_v)_h)_v ((f h)_h j)_v)_h",
      "((a (c e)_h)_v (b d g i)_v ((f h)_h j)_v)_h",
      "(((a (b d g)_v)_h (c e i)_h)_v ((f h)_h j)_v)_h",
      "((a (b d g)_v f h)_h (c e i j)_h)_v",
      "(((a (b d g)_v)_h (c e)_h)_v ((f h)_h (i j)_h)_v)_h",
      "((a c)_v (b d g e)_v ((f h)_h (i j)_h)_v)_h",
      "(((a (b d)_v)_h (c (g e)_v)_h)_v ((f h)_h (i j)_h)_v)_h",
      "((a (b d)_v f h)_h (c (g e)_v i j)_h)_v",
      "((a (c (g e)_v)_h)_v (((b d)_v f h)_h (i j)_h)_v)_h",
      "((a (c (g e)_v)_h)_v (b d i)_v ((f h)_h j)_v)_h",
      "((a (c (g e)_v)_h)_v ((b f h)_h ((d i)_v j)_h)_v)_h",
      "((a b f h)_h (c (g e)_v (d i)_v j)_h)_v",
      "(((a b)_h (c (g e)_v)_h)_v ((f h)_h ((d i)_v j)_h)_v)_h",
      "(((a b)_h (c (g e)_v)_h)_v (f d i)_v (h j)_v)_h",
      "(((a b)_h (c (g e)_v)_h)_v (((f d)_v h)_h (i j)_h)_v)_h",
  };
  return chain;
}

inline const std::vector<CatalogTarget>& catalog() {
  static const std::vector<CatalogTarget> targets{
      {"kock16",
       "4x4 grid with f and g transposed",
       TargetKind::equivalence,
       {"((((a h b) h (c h d)) v ((e h f) h (g h h))) v (((i h j) h (k h l)) v ((m h n) h (p h q))))"},
       "((((a h b) h (c h d)) v ((e h g) h (f h h))) v (((i h j) h (k h l)) v ((m h n) h (p h q))))",
       "(f g)",
       "kock16.json",
       {},
       {},
       0},
      {"bm9",
       "nine-argument relation with e and g transposed",
       TargetKind::equivalence,
       {"(((a h b) h c) v (((d h (e v f)) h (g v h)) h i))"},
       "(((a h b) h c) v (((d h (g v f)) h (e v h)) h i))",
       "(e g)",
       "bm9.json",
       {},
       {},
       0},
      {"configA",
       "four vertical slices, configuration A",
       TargetKind::commutation,
       {"(((a h b) v (c h (d v e))) h (((f v g) h h) v (i h j)))"},
       "(((a h b) v (c h (g v e))) h (((f v d) h h) v (i h j)))",
       "(d g)",
       "configA.json",
       config_a_chain(),
       {},
       0},
      {"configB",
       "four vertical slices, configuration B",
       TargetKind::commutation,
       {"(((a h (b v c)) v (f h (g v h))) h ((d h e) v (i h j)))"},
       "(((a h (b v g)) v (f h (c v h))) h ((d h e) v (i h j)))",
       "(c g)",
       "configB.json",
       {},
       {},
       0},
      {"case2",
       "three horizontal slices with 2, 5, 3 blocks",
       TargetKind::commutation,
       {"((a h (b v c)) v (((d h e) v i) h (((f h g) h h) v j)))"},
       "((a h (b v c)) v (((d h e) v i) h (((g h f) h h) v j)))",
       "(f g)",
       "case2.json",
       {},
       {},
       0},
      {"configC-negative",
       "four vertical slices, configuration C: no relation expected",
       TargetKind::negative,
       {"(((a h b) v (c h ((d h e) v f))) h ((g h k) v (i h j)))"},
       "",
       "",
       "",
       {},
       {},
       0},
      {"seven-block-negative",
       "the three seven-block configurations with two interior blocks",
       TargetKind::negative,
       {"((a h b) v (((c h (d v e)) v f) h g))", "((a h b) v ((((c h d) h e) v f) h g))",
        "((a h b) v (((c h (d h e)) v f) h g))"},
       "",
       "",
       "",
       {},
       {},
       4},
      {"case1-negative",
       "three horizontal slices with 2, 6, 2 blocks: d, e, f, g keep their order",
       TargetKind::order_preserving,
       {"((a h b) v (((c h (d h e)) h ((f h g) h h)) v (i h j)))"},
       "",
       "",
       "",
       {},
       {"d", "e", "f", "g"},
       0},
  };
  return targets;
}

inline const CatalogTarget& find_target(std::string_view name) {
  for (const auto& t : catalog())
    if (t.name == name) return t;
  throw error("unknown target '" + std::string(name) + "'");
}

enum class Verdict { pass, fail, inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct VerifyReport {
  Verdict verdict = Verdict::pass;
  std::vector<std::string> lines;
  std::vector<CommutationWitness> witnesses;  // what the independent search found
  Names names;

  void note(std::string s) { lines.push_back(std::move(s)); }
  void fail(std::string s) {
    verdict = Verdict::fail;
    note("FAIL: " + std::move(s));
  }
  void inconclusive(std::string s) {
    if (verdict == Verdict::pass) verdict = Verdict::inconclusive;
    note("INCONCLUSIVE: " + std::move(s));
  }
};

/// Permutation carrying the leaf sequence of `from` to that of `to` (same shape required).
inline std::vector<unsigned> leaf_permutation(const Tree& from, const Tree& to) {
  if (shape_of(from) != shape_of(to)) throw error("leaf_permutation: monomials differ in shape");
  auto a = from.leaves(), b = to.leaves();
  std::vector<unsigned> perm(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) perm[a[k] - 1] = b[k];
  return perm;
}

inline std::string default_data_dir() {
#ifdef DIS_DATA_DIR
  return DIS_DATA_DIR;
#else
  return "data";
#endif
}

namespace detail {

inline std::string stats_line(const SearchStats& s) {
  std::ostringstream os;
  os << "expanded " << s.expanded << ", visited " << s.visited << ", depth " << s.depth;
  return os.str();
}

inline void check_certificate(const CatalogTarget& tg, const Tree& lhs, const Tree& rhs, const Names& names, const std::string& data_dir,
                              VerifyReport& rep) {
  if (tg.certificate.empty()) return;
  const auto path = (std::filesystem::path(data_dir) / "certificates" / tg.certificate).string();
  RewriteCertificate cert;
  try {
    cert = load_certificate(path);
  } catch (const std::exception& e) {
    rep.fail(e.what());
    return;
  }
  auto rr = replay_certificate(cert);
  if (!rr.ok) {
    rep.fail("certificate " + tg.certificate + ": " + rr.message);
    return;
  }
  // certificates carry their own name table; compare through the target's names
  const auto cert_init = parse_monomial(to_string(cert.initial, cert.names), ParseMode::standard, &names).tree;
  const auto cert_final = parse_monomial(to_string(cert.claimed_final, cert.names), ParseMode::standard, &names).tree;
  if (cert_init != lhs || cert_final != rhs) {
    rep.fail("certificate " + tg.certificate + " does not connect the target monomials");
    return;
  }
  rep.note("certificate " + tg.certificate + ": replayed " + std::to_string(rr.steps_applied) + " steps (" +
           std::to_string(interchange_count(cert)) + " interchanges)");
  if (tg.chain.empty()) return;
  // the interchange steps must follow the listed class route
  std::vector<AltTree> route;
  for (const auto& s : tg.chain) route.push_back(parse_alternating(s, &names));
  std::vector<AltTree> seen{to_alternating(cert_init)};
  Tree cur = cert.initial;
  for (const auto& s : cert.steps) {
    cur = apply_redex(cur, s);
    if (s.rule.family == Family::Interchange)
      seen.push_back(to_alternating(parse_monomial(to_string(cur, cert.names), ParseMode::standard, &names).tree));
  }
  if (seen != route) {
    rep.fail("certificate " + tg.certificate + " does not follow the listed " + std::to_string(route.size() - 1) + "-move route");
    return;
  }
  rep.note("certificate interchanges follow the listed route of " + std::to_string(route.size() - 1) + " moves");
}

}  // namespace detail

/// Runs every check attached to a target. Certificates are read from <data_dir>/certificates.
inline VerifyReport verify_target(const CatalogTarget& tg, const SearchOptions& opt = {}, const std::string& data_dir = default_data_dir()) {
  VerifyReport rep;
  auto parsed = parse_monomial(tg.monomials.front());
  rep.names = parsed.names;
  const Names& names = rep.names;

  if (tg.kind == TargetKind::equivalence || tg.kind == TargetKind::commutation) {
    const Tree lhs = parsed.tree;
    const Tree rhs = parse_monomial(tg.rhs, ParseMode::standard, &names).tree;
    const auto cyc = cycle_string(leaf_permutation(lhs, rhs), &names);
    rep.note("relation permutes " + cyc);
    if (cyc != tg.transposition) rep.fail("target relation is " + cyc + ", expected " + tg.transposition);
    detail::check_certificate(tg, lhs, rhs, names, data_dir, rep);

    auto eq = check_equivalence(lhs, rhs, opt);
    rep.note(std::string("bidirectional search: ") + status_name(eq.status) + " (" + detail::stats_line(eq.stats) + ")");
    if (eq.status == EquivalenceStatus::proved_equal) {
      auto rr = replay_certificate(*eq.certificate);
      if (!rr.ok) rep.fail("search certificate does not replay: " + rr.message);
      else rep.note("search certificate replayed: " + std::to_string(eq.certificate->steps.size()) + " steps");
    } else if (eq.status == EquivalenceStatus::proved_distinct) {
      rep.fail("search proved the two monomials distinct");
    } else {
      rep.inconclusive("search budget exhausted");
    }

    if (tg.kind == TargetKind::commutation) {
      auto fc = find_commutations(lhs, opt);
      rep.witnesses = fc.witnesses;
      std::string found;
      bool has = false;
      for (const auto& w : fc.witnesses) {
        auto c = cycle_string(w.permutation, &names);
        found += (found.empty() ? "" : " ") + c;
        has = has || c == tg.transposition;
      }
      rep.note("commutation search over " + std::to_string(fc.classes) + " classes" + (fc.exhausted ? " (exhausted)" : " (budget hit)") +
               ": " + (found.empty() ? "none" : found));
      if (!has) {
        if (fc.exhausted) rep.fail("commutation search did not find " + tg.transposition);
        else rep.inconclusive("commutation search stopped before finding " + tg.transposition);
      }
    }
    return rep;
  }

  for (std::size_t i = 0; i < tg.monomials.size(); ++i) {
    auto p = parse_monomial(tg.monomials[i]);
    const std::string tag = tg.monomials.size() > 1 ? "configuration " + std::to_string(i + 1) + ": " : "";
    if (i == 0 && tg.first_closure_size) {
      auto cl = closure(p.tree, RuleSet::all(), opt);
      rep.note(tag + "binary closure size " + std::to_string(cl.members.size()) + (cl.exhausted ? " (exhausted)" : " (budget hit)"));
      if (!cl.exhausted) rep.inconclusive(tag + "binary closure not exhausted");
      else if (cl.members.size() != tg.first_closure_size)
        rep.fail(tag + "binary closure has " + std::to_string(cl.members.size()) + " members, expected " +
                 std::to_string(tg.first_closure_size));
    }
    auto fc = find_commutations(p.tree, opt);
    rep.note(tag + std::to_string(fc.classes) + " classes" + (fc.exhausted ? " (exhausted)" : " (budget hit)") + ", " +
             std::to_string(fc.witnesses.size()) + " commutation witnesses");
    for (auto& w : fc.witnesses) {
      w.certificate.names = p.names;
      rep.note(tag + "witness " + cycle_string(w.permutation, &p.names) + " with " + std::to_string(interchange_count(w.certificate)) +
               " interchanges, " + std::to_string(w.certificate.steps.size()) + " steps");
      rep.witnesses.push_back(w);
    }
    if (!fc.witnesses.empty()) rep.fail(tag + "commutation relation found where none was expected");
    else if (!fc.exhausted) rep.inconclusive(tag + "class closure not exhausted");

    if (tg.kind == TargetKind::order_preserving && fc.exhausted) {
      std::vector<unsigned> watched;
      for (const auto& w : tg.watched) watched.push_back(unsigned(std::find(p.names.begin(), p.names.end(), w) - p.names.begin()) + 1);
      auto cc = class_closure(p.tree, opt);
      std::size_t changed = 0;
      for (const auto& m : cc.members) {
        auto part = realize(right_comb_representative(m));
        std::vector<std::pair<std::pair<Dyadic, Dyadic>, unsigned>> pos;
        for (auto l : watched) {
          const auto& r = part.find_label(l)->rect;
          pos.push_back({{r.x1, r.y1}, l});
        }
        std::sort(pos.begin(), pos.end());
        for (std::size_t k = 0; k < watched.size(); ++k)
          if (pos[k].second != watched[k]) {
            ++changed;
            break;
          }
      }
      rep.note(tag + "order of watched blocks changes in " + std::to_string(changed) + " of " + std::to_string(cc.members.size()) + " classes");
      if (changed) rep.fail(tag + "watched blocks change order");
    }
  }
  return rep;
}

inline VerifyReport verify_target(std::string_view name, const SearchOptions& opt = {}, const std::string& data_dir = default_data_dir()) {
  return verify_target(find_target(name), opt, data_dir);
}

}  // namespace dis
