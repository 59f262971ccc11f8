// dis: command-line front end for the double interchange toolkit.
//
// Exit codes: 0 pass, 1 fail, 2 inconclusive (budget hit), 64 usage or input error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "dis/dis.hpp"

namespace fs = std::filesystem;
using namespace dis;

namespace {

constexpr int exit_pass = 0, exit_fail = 1, exit_inconclusive = 2, exit_usage = 64;

struct usage_error : error {
  using error::error;
};

struct Common {
  std::uint64_t budget = default_budget;
  unsigned threads = 1;
  SearchOptions options() const { return {budget, threads}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "node expansion budget")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 256u));
}

void write_file(const std::string& path, const std::string& text) {
  if (auto dir = fs::path(path).parent_path(); !dir.empty()) fs::create_directories(dir);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write " + path);
  out << text;
}

std::string cycle_tag(const std::string& cycle) {
  std::string s;
  for (char c : cycle)
    if (std::isalnum(static_cast<unsigned char>(c))) s += c;
    else if (c == ' ' || c == ')') s += (s.empty() || s.back() == '-') ? "" : "-";
  while (!s.empty() && s.back() == '-') s.pop_back();
  return s;
}

// ---------------------------------------------------------------------------
// count

struct Expected {
  std::vector<std::size_t> shapes{1, 2, 8, 40, 224, 1344};
  std::vector<std::size_t> classes{1, 2, 6, 22, 90, 394, 1806};
  std::vector<std::size_t> isolated{1, 2, 6, 20, 70, 254, 948};
  std::size_t orbits4 = 9;
};

int cmd_count(unsigned n, const std::string& format, const std::string& graph_out) {
  const Expected ex;
  struct Row {
    std::string name;
    std::size_t value;
    std::optional<std::size_t> expected;
  };
  std::vector<Row> rows;
  auto want = [](const std::vector<std::size_t>& v, unsigned k) -> std::optional<std::size_t> {
    if (k >= 1 && k <= v.size()) return v[k - 1];
    return std::nullopt;
  };
  rows.push_back({"shapes", enumerate_shapes(n).size(), want(ex.shapes, n)});
  auto g = interchange_graph(n);
  rows.push_back({"assoc-classes", g.vertices.size(), want(ex.classes, n)});
  rows.push_back({"isolated", g.isolated(), want(ex.isolated, n)});
  rows.push_back({"edges", g.edges.size(), std::nullopt});
  if (n <= 6) rows.push_back({"dihedral-orbits", dihedral_orbits(n).size(), n == 4 ? std::optional<std::size_t>(ex.orbits4) : std::nullopt});

  bool ok = true;
  for (const auto& r : rows) ok = ok && (!r.expected || *r.expected == r.value);
  if (format == "json") {
    nlohmann::json j = {{"arity", n}, {"ok", ok}};
    for (const auto& r : rows) {
      j["rows"].push_back({{"name", r.name}, {"value", r.value}});
      if (r.expected) j["rows"].back()["expected"] = *r.expected;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "arity " << n << '\n';
    for (const auto& r : rows) {
      std::cout << "  " << std::left << std::setw(16) << r.name << std::right << std::setw(8) << r.value;
      if (r.expected) std::cout << "   expected " << *r.expected << (*r.expected == r.value ? "  ok" : "  MISMATCH");
      std::cout << '\n';
    }
  }
  if (!graph_out.empty()) {
    std::ostringstream os;
    os << "# interchange graph, arity " << n << ": " << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) os << "v " << i << ' ' << to_string(g.vertices[i]) << '\n';
    for (auto [a, b] : g.edges) os << "e " << a << ' ' << b << '\n';
    write_file(graph_out, os.str());
  }
  return ok ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------------------
// verify

// An unknown target name is a usage error, not a failed verification.
const CatalogTarget& lookup_target(const std::string& name) {
  for (const auto& t : catalog())
    if (t.name == name) return t;
  std::string known;
  for (const auto& t : catalog()) known += (known.empty() ? "" : ", ") + t.name;
  throw usage_error("unknown target '" + name + "' (known: " + known + ")");
}

int cmd_verify(const std::vector<std::string>& names, const Common& c, const std::string& data_dir, const std::string& out_dir) {
  std::vector<std::string> todo = names;
  if (todo.size() == 1 && todo[0] == "all") {
    todo.clear();
    for (const auto& t : catalog()) todo.push_back(t.name);
  }
  int worst = exit_pass;
  for (const auto& name : todo) {
    const auto& tg = lookup_target(name);
    auto rep = verify_target(tg, c.options(), data_dir);
    std::cout << verdict_name(rep.verdict) << "  " << tg.name << "  (" << tg.summary << ")\n";
    for (const auto& l : rep.lines) std::cout << "    " << l << '\n';
    if (!out_dir.empty()) {
      for (const auto& w : rep.witnesses) {
        auto cert = w.certificate;
        if (cert.names.empty()) cert.names = rep.names;
        auto path = (fs::path(out_dir) / (tg.name + "-" + cycle_tag(cycle_string(w.permutation, &rep.names)) + ".json")).string();
        fs::create_directories(out_dir);
        save_certificate(cert, path);
        std::cout << "    wrote " << path << '\n';
      }
    }
    if (rep.verdict == Verdict::fail) worst = exit_fail;
    else if (rep.verdict == Verdict::inconclusive && worst == exit_pass) worst = exit_inconclusive;
  }
  return worst;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  unsigned arity = 7;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> from;
  std::vector<std::string> partitions;
  bool no_main_cuts = false, no_interior = false, no_symmetry = false;
  std::string slices;
  std::string out;
};

int cmd_search(const SearchArgs& a, const Common& c) {
  SearchConfig cfg;
  cfg.arity = a.arity;
  cfg.budget = c.budget;
  cfg.threads = c.threads;
  cfg.sample = a.sample;
  cfg.seed = a.seed;
  cfg.pruning.both_main_cuts = !a.no_main_cuts;
  cfg.pruning.two_interior = !a.no_interior;
  cfg.pruning.symmetry_dedup = !a.no_symmetry;
  if (!a.slices.empty()) {
    auto colon = a.slices.find(':');
    if (colon == std::string::npos) throw usage_error("--slices expects MIN:MAX");
    cfg.pruning.slice_bounds = true;
    cfg.pruning.min_slices = unsigned(std::stoul(a.slices.substr(0, colon)));
    cfg.pruning.max_slices = unsigned(std::stoul(a.slices.substr(colon + 1)));
  }
  for (const auto& m : a.from) {
    auto p = parse_monomial(m);
    cfg.seeds.push_back({realize(p.tree), p.names});
  }
  for (const auto& f : a.partitions) {
    std::ifstream in(f);
    if (!in) throw error("cannot open " + f);
    auto p = partition_from_text(in);
    if (!p.labeled()) p = label_by_order(p);
    cfg.seeds.push_back({p, letter_names(p.size())});
  }

  auto rep = run_search(cfg);
  const auto& k = rep.counters;
  std::ostringstream summary;
  summary << "arity " << (cfg.seeds.empty() ? std::to_string(cfg.arity) : std::string("(seeded)")) << ", "
          << (cfg.sample ? "sample " + std::to_string(cfg.sample) + " seed " + std::to_string(cfg.seed) : std::string("exhaustive")) << '\n'
          << "  partitions generated      " << k.generated << '\n'
          << "  skipped, no main cuts     " << k.skipped_main_cuts << '\n'
          << "  skipped, < 2 interior     " << k.skipped_interior << '\n'
          << "  skipped, slice bounds     " << k.skipped_slices << '\n'
          << "  examined                  " << k.examined << '\n'
          << "  closures exhausted        " << k.exhausted << '\n'
          << "  closures incomplete       " << k.incomplete << '\n'
          << "  commutation witnesses     " << k.witnesses << '\n';
  std::size_t serial = 0;
  for (const auto& r : rep.results) {
    if (!r.exhausted) summary << "  INCOMPLETE " << to_string(r.monomial, r.names) << '\n';
    for (const auto& w : r.witnesses) {
      ++serial;
      summary << "  witness " << serial << ": " << cycle_string(w.permutation, &r.names) << (w.is_transposition() ? " (transposition)" : "")
              << " in " << to_string(r.monomial, r.names) << ", " << interchange_count(w.certificate) << " interchanges\n";
      if (!a.out.empty()) {
        fs::create_directories(a.out);
        save_certificate(w.certificate, (fs::path(a.out) / ("witness-" + std::to_string(serial) + ".json")).string());
      }
    }
  }
  std::cout << summary.str();
  if (!a.out.empty()) write_file((fs::path(a.out) / "summary.txt").string(), summary.str());
  return k.incomplete ? exit_inconclusive : exit_pass;
}

// ---------------------------------------------------------------------------
// render

int cmd_render(const std::string& monomial, const std::string& partition_file, const std::string& format, const std::string& out) {
  BlockPartition p;
  Names names;
  if (!partition_file.empty()) {
    std::ifstream in(partition_file);
    if (!in) throw error("cannot open " + partition_file);
    p = partition_from_text(in);
  } else {
    auto parsed = parse_monomial(monomial);
    p = realize(parsed.tree);
    names = parsed.names;
  }
  const Names* np = names.empty() ? nullptr : &names;
  std::string text;
  if (format == "svg") text = render_svg(p, np);
  else if (format == "ascii") text = render_ascii(p, np);
  else text = to_text(p);
  if (out.empty()) std::cout << text;
  else write_file(out, text);
  return exit_pass;
}

// ---------------------------------------------------------------------------
// closure

int cmd_closure(const std::string& monomial, const std::string& rules, bool classes, bool list, const Common& c) {
  auto p = parse_monomial(monomial);
  if (classes) {
    auto cc = class_closure(p.tree, c.options());
    std::cout << "associativity classes: " << cc.members.size() << (cc.exhausted ? " (exhausted)" : " (budget hit)") << ", depth "
              << cc.stats.depth << '\n';
    if (list)
      for (const auto& m : cc.members) std::cout << "  " << to_string(m, p.names) << '\n';
    auto fc = find_commutations(p.tree, c.options());
    for (const auto& w : fc.witnesses) std::cout << "commutation " << cycle_string(w.permutation, &p.names) << '\n';
    return cc.exhausted ? exit_pass : exit_inconclusive;
  }
  auto cl = closure(p.tree, RuleSet::parse(rules), c.options());
  std::cout << "monomials: " << cl.members.size() << (cl.exhausted ? " (exhausted)" : " (budget hit)") << ", depth " << cl.stats.depth
            << '\n';
  if (list)
    for (const auto& m : cl.members) std::cout << "  " << to_string(m, p.names) << '\n';
  return cl.exhausted ? exit_pass : exit_inconclusive;
}

// ---------------------------------------------------------------------------
// certify

int cmd_certify(const std::string& target, const std::string& lhs, const std::string& rhs, const std::string& check, const std::string& out,
                const Common& c) {
  if (!check.empty()) {
    auto cert = load_certificate(check);
    auto r = replay_certificate(cert);
    std::cout << (r.ok ? "PASS" : "FAIL") << "  " << check << ": " << r.message << " (" << r.steps_applied << " of " << cert.steps.size()
              << " steps, " << interchange_count(cert) << " interchanges)\n";
    return r.ok ? exit_pass : exit_fail;
  }
  std::string l = lhs, rr = rhs;
  const CatalogTarget* tg = nullptr;
  if (!target.empty()) {
    tg = &lookup_target(target);
    if (tg->rhs.empty()) throw error("target '" + target + "' has no relation to certify");
    l = tg->monomials.front();
    rr = tg->rhs;
  }
  if (l.empty() || rr.empty()) throw usage_error("certify needs --target, or both --lhs and --rhs");
  auto pl = parse_monomial(l);
  auto pr = parse_monomial(rr, ParseMode::standard, &pl.names);
  RewriteCertificate cert;
  if (tg && !tg->chain.empty()) {
    std::vector<AltTree> route;
    for (const auto& s : tg->chain) route.push_back(parse_alternating(s, &pl.names));
    cert.initial = pl.tree;
    cert.claimed_final = pr.tree;
    cert.steps = lift_class_path(pl.tree, route, pr.tree);
  } else {
    auto eq = check_equivalence(pl.tree, pr.tree, c.options());
    if (eq.status != EquivalenceStatus::proved_equal) {
      std::cout << status_name(eq.status) << '\n';
      return eq.status == EquivalenceStatus::unknown ? exit_inconclusive : exit_fail;
    }
    cert = *eq.certificate;
  }
  cert.names = pl.names;
  auto r = replay_certificate(cert);
  if (!r.ok) {
    std::cout << "FAIL  produced certificate does not replay: " << r.message << '\n';
    return exit_fail;
  }
  std::cout << "PASS  " << cert.steps.size() << " steps, " << interchange_count(cert) << " interchanges\n";
  if (out.empty()) std::cout << certificate_to_json(cert).dump(2) << '\n';
  else {
    if (auto dir = fs::path(out).parent_path(); !dir.empty()) fs::create_directories(dir);
    save_certificate(cert, out);
  }
  return exit_pass;
}

// ---------------------------------------------------------------------------
// interval

int cmd_interval(const std::string& assoc, const std::string& seq, const std::vector<std::string>& map, bool table) {
  if (!assoc.empty()) std::cout << sequence_string(association_to_sequence(parse_association(assoc))) << '\n';
  if (!seq.empty()) {
    auto s = parse_sequence(seq);
    if (!is_tree_sequence(s)) {
      std::cout << "not a tree sequence\n";
      return exit_fail;
    }
    std::cout << association_string(sequence_to_association(s)) << '\n';
  }
  if (!map.empty()) {
    auto f = thompson_map(parse_sequence(map[0]), parse_sequence(map[1]));
    std::cout << "breakpoints:";
    for (const auto& b : f.breakpoints()) std::cout << " (" << b.x << ", " << b.y << ")";
    std::cout << "\nslopes:";
    for (const auto& s : f.slopes()) std::cout << ' ' << s;
    std::cout << '\n';
  }
  if (table) {
    bool ok = true;
    for (const auto& row : association_table()) {
      auto seqv = row_sequence(row);
      bool match = association_to_sequence(parse_association(row.association)) == seqv &&
                   association_string(sequence_to_association(seqv)) == row.association;
      ok = ok && match;
      std::cout << std::left << std::setw(14) << row.association << std::setw(36) << sequence_string(seqv) << (match ? "ok" : "MISMATCH")
                << '\n';
    }
    return ok ? exit_pass : exit_fail;
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dis: rewriting and geometry for double interchange semigroups"};
  app.require_subcommand(1);
  Common common;

  unsigned count_arity = 4;
  std::string count_format = "table", graph_out;
  auto* count = app.add_subcommand("count", "tree, class and isolated-vertex counts for one arity");
  count->add_option("--arity", count_arity, "number of leaves")->required();
  count->add_option("--format", count_format, "table or json")->check(CLI::IsMember({"table", "json"}));
  count->add_option("--graph", graph_out, "write the interchange graph as an edge list");

  std::vector<std::string> verify_names;
  std::string data_dir = default_data_dir(), verify_out;
  auto* verify = app.add_subcommand("verify", "check a named relation or negative result (or 'all')");
  verify->add_option("target", verify_names, "target name")->required();
  verify->add_option("--data", data_dir, "directory holding certificates/");
  verify->add_option("--out", verify_out, "write certificates for any witnesses found here");
  add_common(verify, common);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "look for commutativity relations among dyadic partitions");
  search->add_option("--arity", sa.arity, "number of blocks");
  search->add_option("--sample", sa.sample, "draw this many random partitions instead of enumerating");
  search->add_option("--seed", sa.seed, "random seed for --sample");
  search->add_option("--from", sa.from, "examine the partition of this monomial only (repeatable)");
  search->add_option("--partition", sa.partitions, "examine this partition file only (repeatable)");
  search->add_flag("--no-main-cuts", sa.no_main_cuts, "keep partitions lacking a main cut");
  search->add_flag("--no-interior", sa.no_interior, "keep partitions with fewer than two interior blocks");
  search->add_flag("--no-symmetry", sa.no_symmetry, "do not identify partitions related by a symmetry of the square");
  search->add_option("--slices", sa.slices, "require MIN:MAX slices along some main cut");
  search->add_option("--out", sa.out, "directory for witness certificates and summary.txt");
  add_common(search, common);

  std::string render_in, render_partition, render_format = "ascii", render_out;
  auto* render = app.add_subcommand("render", "draw the partition of a monomial or a partition file");
  render->add_option("monomial", render_in, "monomial, e.g. '((a h b) v (c h d))'");
  render->add_option("--partition", render_partition, "partition text file instead of a monomial");
  render->add_option("--format", render_format, "svg, ascii or text")->check(CLI::IsMember({"svg", "ascii", "text"}));
  render->add_option("--out", render_out, "output file (default: stdout)");

  std::string closure_in, closure_rules = "all";
  bool closure_classes = false, closure_list = false;
  auto* clo = app.add_subcommand("closure", "rewrite class of a monomial");
  clo->add_option("monomial", closure_in, "monomial")->required();
  clo->add_option("--rules", closure_rules, "comma list of assoc, assoc_h, assoc_v, interchange, all");
  clo->add_flag("--classes", closure_classes, "explore associativity classes instead of binary monomials");
  clo->add_flag("--list", closure_list, "print every member");
  add_common(clo, common);

  std::string cert_target, cert_lhs, cert_rhs, cert_check, cert_out;
  auto* certify = app.add_subcommand("certify", "produce or check a rewrite certificate");
  certify->add_option("--target", cert_target, "catalog target to certify");
  certify->add_option("--lhs", cert_lhs, "left monomial");
  certify->add_option("--rhs", cert_rhs, "right monomial (leaf names as in --lhs)");
  certify->add_option("--check", cert_check, "replay an existing certificate file");
  certify->add_option("--out", cert_out, "certificate output file (default: stdout)");
  add_common(certify, common);

  std::string iv_assoc, iv_seq;
  std::vector<std::string> iv_map;
  bool iv_table = false;
  auto* interval = app.add_subcommand("interval", "tree sequences and piecewise-linear maps of the unit interval");
  interval->add_option("--association", iv_assoc, "association type such as '(ab)c'");
  interval->add_option("--sequence", iv_seq, "comma-separated dyadic points such as '1/4,1/2'");
  interval->add_option("--map", iv_map, "two tree sequences A B")->expected(2);
  interval->add_flag("--table", iv_table, "check the built-in table of association types");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*count) return cmd_count(count_arity, count_format, graph_out);
    if (*verify) return cmd_verify(verify_names, common, data_dir, verify_out);
    if (*search) return cmd_search(sa, common);
    if (*render) {
      if (render_in.empty() == render_partition.empty()) throw usage_error("render needs a monomial or --partition");
      return cmd_render(render_in, render_partition, render_format, render_out);
    }
    if (*clo) return cmd_closure(closure_in, closure_rules, closure_classes, closure_list, common);
    if (*certify) return cmd_certify(cert_target, cert_lhs, cert_rhs, cert_check, cert_out, common);
    if (*interval) return cmd_interval(iv_assoc, iv_seq, iv_map, iv_table);
  } catch (const usage_error& e) {
    std::cerr << "dis: " << e.what() << '\n';
    return exit_usage;
  } catch (const parse_error& e) {
    std::cerr << "dis: " << e.what() << '\n';
    return exit_usage;
  } catch (const limit_error& e) {
    std::cerr << "dis: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "dis: " << e.what() << '\n';
    return exit_fail;
  }
  return exit_usage;
}
