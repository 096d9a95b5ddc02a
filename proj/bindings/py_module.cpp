#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ghol/report.hpp"
#include "ghol/surface_holonomy.hpp"
#include "ghol/transport.hpp"

namespace py = pybind11;
using namespace ghol;

namespace {

std::string bundled_text(const std::string& name) {
  for (const auto& [n, text] : bundled_scenarios())
    if (n == name) return text;
  throw SchemaError("no bundled scenario named '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "holonomy and parallel transport for U(1) bundles and abelian "
            "gerbes on covered spaces";
  m.attr("__version__") = kToolVersion;

  // base first: translators run newest-first, so derived types must come
  // after their base to win the match
  py::register_exception<Error>(m, "GholError", PyExc_RuntimeError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<UnknownVerb>(m, "UnknownVerbError", PyExc_KeyError);

  m.def(
      "run_scenario_text",
      [](const std::string& text, bool parallel) {
        Scenario s = parse_scenario_text(text);
        Report report = run_scenario(s, parallel);
        return py::make_tuple(report.dump(), report.all_pass);
      },
      py::arg("text"), py::arg("parallel") = false,
      "Run a scenario JSON document; returns (structured_report, all_pass).");

  m.def(
      "run_bundled",
      [](const std::string& name, bool parallel) {
        Scenario s = parse_scenario_text(bundled_text(name));
        Report report = run_scenario(s, parallel);
        return py::make_tuple(report.dump(), report.all_pass);
      },
      py::arg("name"), py::arg("parallel") = false,
      "Run one of the bundled golden scenarios by name.");

  m.def(
      "render_text",
      [](const std::string& text, bool parallel) {
        Scenario s = parse_scenario_text(text);
        return run_scenario(s, parallel).text();
      },
      py::arg("text"), py::arg("parallel") = false,
      "Run a scenario and return the human-readable report.");

  m.def("bundled_scenario_names", [] {
    std::vector<std::string> names;
    for (const auto& [name, text] : bundled_scenarios()) {
      (void)text;
      names.push_back(name);
    }
    return names;
  });
  m.def("bundled_scenario_text", &bundled_text, py::arg("name"));
  m.def("explain", &explain_verb, py::arg("verb"),
        "Describe what a verb computes.");
  m.def("known_verbs", &known_verbs);

  // direct numeric entry points for quick interactive use
  m.def(
      "monopole_holonomy_turns",
      [](int n, double colatitude) {
        LineBundleData bundle = LineBundleData::monopole_sphere(n);
        ThinPath loop = ThinPath::smooth(
            bundle.space,
            {{0, Curve::latitude(colatitude, 0, kTwoPi), Reparam{}}});
        return holonomy(bundle, loop).turns_value();
      },
      py::arg("n"), py::arg("colatitude"),
      "Holonomy (in turns) of a latitude loop on the charge-n monopole.");

  m.def(
      "flat_torus_surface_holonomy_turns",
      [](const std::string& flux) {
        auto space =
            std::make_shared<const CoveredSpace>(make_torus_full_overlap(2, 2));
        GerbeData gerbe = GerbeData::flat_torus(space, Rat::parse(flux));
        std::vector<int> faces = {0, 1, 2, 3};
        TwoLoop cycle = TwoLoop::closed(space, {Sheet{faces, 1}});
        return surface_holonomy(gerbe, cycle).exact_turns().str();
      },
      py::arg("flux"),
      "Surface holonomy (exact turns) of the fundamental 2-cycle of a flat "
      "T^2 gerbe with the given flux.");
}
