#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "ghol/report.hpp"

namespace {

std::string load_scenario_text(const std::string& spec) {
  for (const auto& [name, text] : ghol::bundled_scenarios())
    if (name == spec) return text;
  std::ifstream in(spec);
  if (!in) throw ghol::SchemaError("cannot open scenario '" + spec + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holonomy and parallel transport for U(1) bundles and "
               "abelian gerbes on covered spaces"};
  app.require_subcommand(1);

  std::string scenario_spec, out_path, format = "text";
  double tolerance = -1.0;
  bool parallel = false;

  CLI::App* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("--scenario", scenario_spec,
                  "scenario path or bundled scenario name")
      ->required();
  run->add_option("--out", out_path, "write the structured report here");
  run->add_option("--tolerance", tolerance, "override the scenario tolerance");
  run->add_flag("--parallel", parallel, "evaluate verbs concurrently");
  run->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string verb;
  CLI::App* explain = app.add_subcommand("explain", "describe a verb");
  explain->add_option("verb", verb, "verb name")->required();

  app.add_subcommand("list-scenarios", "list the bundled golden scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (explain->parsed()) {
      std::cout << ghol::explain_verb(verb) << "\n";
      return 0;
    }
    if (app.get_subcommand("list-scenarios")->parsed()) {
      for (const auto& [name, text] : ghol::bundled_scenarios()) {
        ghol::Json doc = ghol::Json::parse(text);
        std::cout << name << "  (space: "
                  << doc.at("space").dump() << ")\n";
      }
      return 0;
    }
    // run
    ghol::Scenario scenario =
        ghol::parse_scenario_text(load_scenario_text(scenario_spec));
    if (tolerance > 0) scenario.tolerance = tolerance;
    ghol::Report report = ghol::run_scenario(scenario, parallel);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      out << report.dump();
    }
    if (format == "structured")
      std::cout << report.dump();
    else
      std::cout << report.text();
    return report.all_pass ? 0 : 1;
  } catch (const ghol::SchemaError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const ghol::UnknownVerb& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const ghol::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
