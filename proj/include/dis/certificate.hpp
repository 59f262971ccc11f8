#pragma once

// Replayable rewrite certificates and their JSON form:
//   {"initial": "...", "steps": [{"rule": "...", "direction": "...", "position": "0110"}], "final": "..."}

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "dis/rewrite.hpp"
#include "json.hpp"

namespace dis {

struct RewriteCertificate {
  Tree initial;
  std::vector<RewriteStep> steps;
  Tree claimed_final;
  Names names;  // leaf names used when printing; empty means x1..xn
};

struct ReplayResult {
  bool ok = false;
  std::size_t steps_applied = 0;
  std::optional<std::size_t> failed_step;  // 0-based index of the first mismatching step
  std::string message;
  Tree reached;
};

inline ReplayResult replay_certificate(const RewriteCertificate& c) {
  ReplayResult r;
  Tree cur = c.initial;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const auto& s = c.steps[k];
    auto next = try_apply(cur, s);
    if (!next) {
      r.failed_step = k;
      r.message = "step " + std::to_string(k + 1) + ": " + family_name(s.rule.family) + " " + direction_name(s.rule.direction) +
                  " does not match at position '" + s.position.str() + "' (expected " + rule_pattern(s.rule) + ")";
      r.reached = cur;
      r.steps_applied = k;
      return r;
    }
    cur = std::move(*next);
  }
  r.steps_applied = c.steps.size();
  r.reached = cur;
  if (cur != c.claimed_final) {
    r.message = "replay ends at " + to_string(cur, c.names.empty() ? nullptr : &c.names) + ", not at the claimed final monomial";
    return r;
  }
  r.ok = true;
  r.message = "ok";
  return r;
}

/// Removes adjacent step pairs that undo each other.
inline std::vector<RewriteStep> cancel_inverse_pairs(const std::vector<RewriteStep>& steps) {
  std::vector<RewriteStep> out;
  for (const auto& s : steps) {
    if (!out.empty() && out.back() == s.inverse()) out.pop_back();
    else out.push_back(s);
  }
  return out;
}

inline std::size_t interchange_count(const RewriteCertificate& c) {
  std::size_t n = 0;
  for (const auto& s : c.steps) n += s.rule.family == Family::Interchange;
  return n;
}

inline nlohmann::json certificate_to_json(const RewriteCertificate& c) {
  const Names* names = c.names.empty() ? nullptr : &c.names;
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"rule", family_name(s.rule.family)}, {"direction", direction_name(s.rule.direction)}, {"position", s.position.str()}});
  return {{"initial", to_string(c.initial, names)}, {"steps", steps}, {"final", to_string(c.claimed_final, names)}};
}

/// The final monomial is read with the initial monomial's name table.
inline RewriteCertificate certificate_from_json(const nlohmann::json& j) {
  RewriteCertificate c;
  auto init = parse_monomial(j.at("initial").get<std::string>());
  c.initial = init.tree;
  c.names = init.names;
  c.claimed_final = parse_monomial(j.at("final").get<std::string>(), ParseMode::standard, &c.names).tree;
  for (const auto& s : j.at("steps")) {
    RewriteStep step;
    step.rule.family = parse_family(s.at("rule").get<std::string>());
    step.rule.direction = parse_direction(s.at("direction").get<std::string>());
    step.position = TreePosition::parse(s.at("position").get<std::string>());
    c.steps.push_back(std::move(step));
  }
  return c;
}

inline RewriteCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open certificate file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw error("malformed certificate " + path + ": " + e.what());
  }
  return certificate_from_json(j);
}

inline void save_certificate(const RewriteCertificate& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write certificate file " + path);
  out << certificate_to_json(c).dump(2) << '\n';
}

}  // namespace dis
