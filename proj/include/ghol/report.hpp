#pragma once

#include <string>

#include "ghol/scenario.hpp"

namespace ghol {

inline constexpr const char* kToolVersion = "0.1.0";

struct Report {
  Json structured;
  bool all_pass = true;

  std::string text() const;
  std::string dump() const { return structured.dump(2) + "\n"; }
};

// Runs every requested verb; verb results appear in request order. With
// `parallel`, verbs evaluate concurrently and merge deterministically.
Report run_scenario(const Scenario& scenario, bool parallel = false);

// Single-verb dispatcher (exposed for the bindings and tests).
Json run_verb(const Scenario& scenario, const VerbRequest& request);

std::string explain_verb(const std::string& verb);
std::vector<std::string> known_verbs();

// golden scenarios shipped with the tool, as (name, json text)
const std::vector<std::pair<std::string, std::string>>& bundled_scenarios();

}  // namespace ghol
