#include "ghol/report.hpp"

namespace ghol {

namespace {

const char* kTrivialEverything = R"json({
  "name": "trivial-everything",
  "space": {"builtin": "torus-full-overlap", "nx": 2, "ny": 2, "charts": 4},
  "bundle": {"builtin": "trivial"},
  "gerbe": {"builtin": "trivial"},
  "paths": {
    "xloop": {"kind": "combinatorial", "start": "v0_0",
              "steps": [{"edge": 0, "chart": "U0"}, {"edge": 4, "chart": "U0"}]},
    "yloop": {"kind": "combinatorial", "start": "v0_0",
              "steps": [{"edge": 1, "chart": "U0"}, {"edge": 3, "chart": "U0"}]}
  },
  "two_loops": {
    "fundamental": {"sheets": [{"faces": "all"}]}
  },
  "verbs": [
    {"verb": "validate-bundle"},
    {"verb": "validate-gerbe"},
    {"verb": "holonomy", "path": "xloop"},
    {"verb": "holonomy", "path": "yloop"},
    {"verb": "surface-holonomy", "two_loop": "fundamental"},
    {"verb": "double-check"}
  ]
})json";

const char* kMonopoleN1 = R"json({
  "name": "monopole-n1",
  "space": {"builtin": "sphere-2-charts"},
  "bundle": {"builtin": "monopole-sphere", "n": 1},
  "paths": {
    "equator": {"kind": "smooth", "segments": [
      {"chart": "N", "curve": {"type": "latitude", "theta": 1.5707963267948966,
                                "phi0": 0.0, "phi1": 6.283185307179586}}]},
    "lat60": {"kind": "smooth", "segments": [
      {"chart": "N", "curve": {"type": "latitude", "theta": 1.0471975511965976,
                                "phi0": 0.0, "phi1": 6.283185307179586}}]},
    "lat120": {"kind": "smooth", "segments": [
      {"chart": "N", "curve": {"type": "latitude", "theta": 2.0943951023931953,
                                "phi0": 0.0, "phi1": 6.283185307179586}}]}
  },
  "verbs": [
    {"verb": "validate-bundle"},
    {"verb": "holonomy", "path": "equator"},
    {"verb": "transport", "path": "lat60"},
    {"verb": "double-check"}
  ]
})json";

const char* kCircleTwoArcsHolonomy = R"json({
  "name": "circle-two-arcs-holonomy",
  "space": {"builtin": "circle-two-arcs", "n": 12},
  "verbs": [
    {"verb": "globalise", "base": "v0"}
  ]
})json";

const char* kIntervalTwoArcs = R"json({
  "name": "interval-two-arcs",
  "space": {"builtin": "interval-two-arcs", "n": 9},
  "verbs": [
    {"verb": "build-local-subgroupoid"},
    {"verb": "globalise", "base": "v0"}
  ]
})json";

const char* kT2FlatGerbe = R"json({
  "name": "t2-flat-gerbe",
  "space": {"builtin": "torus-full-overlap", "nx": 2, "ny": 2, "charts": 4},
  "gerbe": {"builtin": "flat-torus", "flux": "1/3"},
  "two_loops": {
    "fundamental": {"sheets": [{"faces": "all"}]},
    "double": {"sheets": [{"faces": "all", "copies": 2}]},
    "inverse": {"sheets": [{"faces": "all", "orient": -1}]}
  },
  "verbs": [
    {"verb": "validate-gerbe"},
    {"verb": "surface-holonomy", "two_loop": "fundamental", "sweep_assignments": true},
    {"verb": "two-holonomy", "two_loops": ["fundamental", "double", "inverse"]}
  ]
})json";

const char* kTorusFlatBundle = R"json({
  "name": "torus-flat-bundle",
  "space": {"builtin": "torus-4-charts", "nx": 4, "ny": 4},
  "bundle": {"builtin": "flat-torus", "flux_x": "1/3", "flux_y": "2/5"},
  "paths": {
    "xloop": {"kind": "combinatorial", "start": "v0_0", "steps": [
      {"edge": 0, "chart": "U00"}, {"edge": 8, "chart": "U00"},
      {"edge": 16, "chart": "U10"}, {"edge": 24, "chart": "U10"}]},
    "yloop": {"kind": "combinatorial", "start": "v0_0", "steps": [
      {"edge": 1, "chart": "U00"}, {"edge": 3, "chart": "U00"},
      {"edge": 5, "chart": "U01"}, {"edge": 7, "chart": "U01"}]}
  },
  "verbs": [
    {"verb": "validate-bundle"},
    {"verb": "holonomy", "path": "xloop"},
    {"verb": "holonomy", "path": "yloop"},
    {"verb": "double-check"}
  ]
})json";

const char* kGerbeAtlas = R"json({
  "name": "gerbe-atlas",
  "space": {"builtin": "torus-4-ladders", "ny": 4},
  "bundle": {
    "transitions": {
      "L0,L1": {"v1_0": "1/7", "v1_1": "1/7", "v1_2": "1/7", "v1_3": "1/7"}
    }
  },
  "atlas": {"fiber": 7, "geodesics": "bfs-lex"},
  "verbs": [
    {"verb": "theorem-1", "base": "v0_0"}
  ]
})json";

}  // namespace

const std::vector<std::pair<std::string, std::string>>& bundled_scenarios() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"trivial-everything", kTrivialEverything},
      {"monopole-n1", kMonopoleN1},
      {"circle-two-arcs-holonomy", kCircleTwoArcsHolonomy},
      {"interval-two-arcs", kIntervalTwoArcs},
      {"t2-flat-gerbe", kT2FlatGerbe},
      {"torus-flat-bundle", kTorusFlatBundle},
      {"gerbe-atlas", kGerbeAtlas},
  };
  return table;
}

}  // namespace ghol
