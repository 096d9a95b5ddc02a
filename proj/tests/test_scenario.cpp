#include "doctest.h"

#include "ghol/report.hpp"

using namespace ghol;

TEST_CASE("bundled scenarios parse and pass") {
  for (const auto& [name, text] : bundled_scenarios()) {
    CAPTURE(name);
    Scenario s = parse_scenario_text(text);
    CHECK(s.name == name);
    if (name == "torus-flat-bundle" || name == "t2-flat-gerbe") continue;  // covered below
    Report report = run_scenario(s);
    CHECK(report.all_pass);
  }
}

TEST_CASE("flat torus scenario: the declared fluxes come back") {
  std::string text;
  for (const auto& [name, t] : bundled_scenarios())
    if (name == "torus-flat-bundle") text = t;
  Scenario s = parse_scenario_text(text);
  Report report = run_scenario(s);
  CHECK(report.all_pass);
  const Json& results = report.structured.at("results");
  CHECK(results[1].at("value").at("turns").get<std::string>() == "1/3");
  CHECK(results[2].at("value").at("turns").get<std::string>() == "2/5");
}

TEST_CASE("gerbe scenario: sweep reports the brute-force count") {
  std::string text;
  for (const auto& [name, t] : bundled_scenarios())
    if (name == "t2-flat-gerbe") text = t;
  Scenario s = parse_scenario_text(text);
  Report report = run_scenario(s);
  CHECK(report.all_pass);
  const Json& sweep = report.structured.at("results")[1];
  CHECK(sweep.at("assignments").get<long long>() == 65536);
  CHECK(sweep.at("assignments_agreeing").get<long long>() == 65536);
  CHECK(sweep.at("value").at("turns").get<std::string>() == "1/3");
}

TEST_CASE("custom combinatorial complex ingests and validates") {
  // a triangle graph with two charts and a custom flat bundle
  std::string text = R"json({
    "name": "custom-triangle",
    "space": {
      "complex": {
        "vertices": ["a", "b", "c"],
        "edges": [["a", "b"], ["b", "c"], ["c", "a"]]
      },
      "charts": [
        {"name": "P", "vertices": ["a", "b", "c"], "edges": [0, 1]},
        {"name": "Q", "vertices": ["c", "a"], "edges": [2]}
      ]
    },
    "bundle": {
      "transitions": {"P,Q": {"a": "0", "c": "1/4"}},
      "connections": {"P": {"0": "1/8"}, "Q": {}}
    },
    "paths": {
      "loop": {"kind": "combinatorial", "start": "a", "steps": [
        {"edge": 0, "chart": "P"}, {"edge": 1, "chart": "P"},
        {"edge": 2, "chart": "Q"}]}
    },
    "verbs": [
      {"verb": "validate-bundle"},
      {"verb": "holonomy", "path": "loop"}
    ]
  })json";
  Scenario s = parse_scenario_text(text);
  Report report = run_scenario(s);
  CHECK(report.all_pass);
  // 1/8 along ab + junction Q<-P at c (-1/4... the transition at c) + 0
  const Json& hol = report.structured.at("results")[1];
  CHECK(hol.at("value").contains("turns"));
}

TEST_CASE("schema errors carry locations; unknown verbs are rejected") {
  CHECK_THROWS_AS(parse_scenario_text("{"), SchemaError);
  CHECK_THROWS_AS(parse_scenario_text("{\"name\": \"x\"}"), SchemaError);
  CHECK_THROWS_AS(
      parse_scenario_text(R"({"name":"x","space":{"builtin":"nope"},"verbs":[]})"),
      SchemaError);
  std::string bad_verb = R"json({
    "name": "x",
    "space": {"builtin": "interval-two-arcs"},
    "verbs": [{"verb": "bogus"}]
  })json";
  Scenario s = parse_scenario_text(bad_verb);
  CHECK_THROWS_AS(run_scenario(s), UnknownVerb);
  CHECK_THROWS_AS(explain_verb("bogus"), UnknownVerb);
  for (const std::string& v : known_verbs()) CHECK(!explain_verb(v).empty());
}

TEST_CASE("groupoid serialization round-trips") {
  auto g = FiniteGroupoid::gauge_groupoid(2, 3);
  Json doc = groupoid_to_json(g);
  FiniteGroupoid back = groupoid_from_json(doc);
  CHECK(g == back);
  // declared "pair" composition
  Json pair_doc;
  pair_doc["objects"] = std::vector<std::string>{"x", "y"};
  pair_doc["composition"] = "pair";
  FiniteGroupoid pg = groupoid_from_json(pair_doc);
  CHECK(pg == FiniteGroupoid::pair_groupoid({"x", "y"}));
}

TEST_CASE("double-check sweeps a serialized crossed module") {
  std::string text = R"json({
    "name": "cm-roundtrip",
    "space": {"builtin": "interval-two-arcs"},
    "verbs": [{"verb": "double-check", "crossed_module": {
      "m_mul": [[0, 1], [1, 0]],
      "p_mul": [[0, 1], [1, 0]],
      "mu": [0, 1],
      "action": [[0, 1], [0, 1]]
    }}]
  })json";
  Report report = run_scenario(parse_scenario_text(text));
  CHECK(report.all_pass);
  const Json& r = report.structured.at("results")[0];
  CHECK(r.at("round_trip_isomorphic").get<bool>());
  CHECK(r.at("squares").get<int>() == 16);
  // an invalid module is a schema error
  std::string bad = R"json({
    "name": "cm-bad",
    "space": {"builtin": "interval-two-arcs"},
    "verbs": [{"verb": "double-check", "crossed_module": {
      "m_mul": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
      "p_mul": [[0, 1], [1, 0]],
      "mu": [0, 1, 1, 0],
      "action": [[0, 1, 2, 3], [0, 2, 1, 3]]
    }}]
  })json";
  Scenario s = parse_scenario_text(bad);
  CHECK_THROWS_AS(run_scenario(s), SchemaError);
}

TEST_CASE("loop-transport verb reads a homotopy from the scenario") {
  std::string text = R"json({
    "name": "band-transport",
    "space": {"builtin": "torus-full-overlap", "nx": 2, "ny": 2, "charts": 4},
    "gerbe": {"builtin": "flat-torus", "flux": "1/3"},
    "paths": {
      "g0": {"kind": "combinatorial", "start": "v0_0", "steps": [
        {"edge": 0, "chart": "U0"}, {"edge": 4, "chart": "U0"}]},
      "g1": {"kind": "combinatorial", "start": "v0_1", "steps": [
        {"edge": 2, "chart": "U0"}, {"edge": 6, "chart": "U0"}]}
    },
    "homotopies": {
      "band": {"faces": [0, 2], "from": "g0", "to": "g1"}
    },
    "verbs": [{"verb": "loop-transport", "homotopy": "band"}]
  })json";
  Report report = run_scenario(parse_scenario_text(text));
  CHECK(report.all_pass);
  CHECK(report.structured.at("results")[0].at("value").at("turns")
            .get<std::string>() == "1/6");
}

TEST_CASE("reports are byte-identical across runs and parallel mode") {
  std::string text;
  for (const auto& [name, t] : bundled_scenarios())
    if (name == "circle-two-arcs-holonomy") text = t;
  Scenario s = parse_scenario_text(text);
  std::string a = run_scenario(s, false).dump();
  std::string b = run_scenario(s, false).dump();
  std::string c = run_scenario(s, true).dump();
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("corrupted scenario data fails with located issues") {
  std::string text = R"json({
    "name": "broken-monopole",
    "space": {"builtin": "octahedron-2-charts"},
    "bundle": {
      "transitions": {"N,S": {"e0": "0", "e1": "1/4", "e2": "1/2", "e3": "3/4"}},
      "connections": {
        "N": {"4": "1/8", "5": "1/8", "6": "1/8", "7": "1/8"},
        "S": {"4": "-1/8", "5": "-1/8", "6": "-1/8", "7": "0"}
      }
    },
    "verbs": [{"verb": "validate-bundle"}]
  })json";
  Scenario s = parse_scenario_text(text);
  Report report = run_scenario(s);
  CHECK_FALSE(report.all_pass);
  const Json& issues = report.structured.at("results")[0].at("issues");
  CHECK(issues.size() > 0);
}
