#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ghol/bundle.hpp"
#include "ghol/crossed_module.hpp"
#include "ghol/gerbe.hpp"
#include "ghol/thin_path.hpp"
#include "ghol/two_loop.hpp"

namespace ghol {

using Json = nlohmann::ordered_json;

// A scenario file: one structured JSON document naming a space, optional
// bundle/gerbe data, path/loop/2-loop/homotopy families, an atlas spec,
// and the verbs to run. Exact phases are written as "p/q" turn strings.
struct VerbRequest {
  std::string verb;
  Json args;
};

struct Scenario {
  std::string name;
  double tolerance = 1e-9;
  std::shared_ptr<const CoveredSpace> space;
  std::optional<LineBundleData> bundle;
  std::optional<GerbeData> gerbe;
  std::map<std::string, ThinPath> paths;
  std::map<std::string, TwoLoop> two_loops;
  std::map<std::string, Homotopy> homotopies;
  int atlas_fiber = 1;           // gauge model fiber order for the atlas
  std::string geodesics = "bfs-lex";
  int flatness_budget = 6;
  std::vector<VerbRequest> verbs;

  const ThinPath& path(const std::string& name) const;
  const TwoLoop& two_loop(const std::string& name) const;
  const Homotopy& homotopy(const std::string& name) const;
};

// Parses and validates a scenario document; throws SchemaError with the
// offending location.
Scenario parse_scenario(const Json& doc);
Scenario parse_scenario_text(const std::string& text);

// phase / rational parsing helpers shared with the report side
Rat parse_turns(const Json& value);
Json phase_to_json(const Phase& p);
Json rat_to_json(const Rat& r);

// groupoid and crossed-module (de)serialization in the scenario format:
// objects as strings, arrows as {id, src, tgt, phase?}, composition
// tabulated or declared "pair"/"gauge"
FiniteGroupoid groupoid_from_json(const Json& doc);
Json groupoid_to_json(const FiniteGroupoid& g);

// single-object crossed module: {m_mul, p_mul, mu, action}
CrossedModule crossed_module_from_json(const Json& doc);
Json crossed_module_to_json(const CrossedModule& cm);

}  // namespace ghol
