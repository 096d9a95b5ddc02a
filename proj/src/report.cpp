#include "ghol/report.hpp"

#include <future>
#include <sstream>

namespace ghol {

Report run_scenario(const Scenario& scenario, bool parallel) {
  Report report;
  report.structured["tool"] = "ghol";
  report.structured["version"] = kToolVersion;
  report.structured["scenario"] = scenario.name;
  Json results = Json::array();

  std::vector<Json> outputs(scenario.verbs.size());
  if (parallel) {
    std::vector<std::future<Json>> futures;
    for (const VerbRequest& req : scenario.verbs)
      futures.push_back(std::async(std::launch::async, [&scenario, &req] {
        return run_verb(scenario, req);
      }));
    for (std::size_t i = 0; i < futures.size(); ++i)
      outputs[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < scenario.verbs.size(); ++i)
      outputs[i] = run_verb(scenario, scenario.verbs[i]);
  }

  for (Json& out : outputs) {
    if (out.contains("pass") && !out.at("pass").get<bool>())
      report.all_pass = false;
    results.push_back(std::move(out));
  }
  report.structured["results"] = std::move(results);
  report.structured["status"] = report.all_pass ? "pass" : "fail";
  return report;
}

namespace {

void render(std::ostringstream& os, const Json& value, int indent) {
  std::string pad(indent, ' ');
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (item.is_object() || item.is_array()) {
        os << pad << key << ":\n";
        render(os, item, indent + 2);
      } else {
        os << pad << key << ": " << item.dump() << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const Json& item : value) {
      if (item.is_object() || item.is_array()) {
        os << pad << "-\n";
        render(os, item, indent + 2);
      } else {
        os << pad << "- " << item.dump() << "\n";
      }
    }
  } else {
    os << pad << value.dump() << "\n";
  }
}

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  os << "ghol " << structured.at("version").get<std::string>() << " -- scenario "
     << structured.at("scenario").get<std::string>() << "\n";
  for (const Json& result : structured.at("results")) {
    std::string verb = result.at("verb").get<std::string>();
    bool pass = !result.contains("pass") || result.at("pass").get<bool>();
    os << "\n[" << (pass ? "PASS" : "FAIL") << "] " << verb << "\n";
    render(os, result, 2);
  }
  os << "\nstatus: " << structured.at("status").get<std::string>() << "\n";
  return os.str();
}

}  // namespace ghol
