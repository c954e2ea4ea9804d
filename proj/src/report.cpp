#include "gbv/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace gbv {

using ordered_json = nlohmann::ordered_json;

std::string Report::to_json(bool with_timing) const {
  ordered_json doc;
  doc["schema"] = schema;
  doc["seed"] = seed;
  doc["trials"] = trials;
  doc["pass"] = pass;
  doc["suites"] = ordered_json::array();
  for (const auto& suite : suites) {
    ordered_json sj;
    sj["name"] = suite.name;
    sj["pass"] = suite.pass;
    sj["checks"] = ordered_json::array();
    for (const auto& c : suite.checks) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["identity"] = c.identity;
      cj["trials"] = c.trials;
      cj["failures"] = c.failures;
      cj["residual"] = c.residual;
      if (!c.note.empty()) cj["note"] = c.note;
      if (with_timing) cj["elapsed_ms"] = c.elapsed_ms;
      cj["pass"] = c.pass;
      sj["checks"].push_back(std::move(cj));
    }
    doc["suites"].push_back(std::move(sj));
  }
  return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& suite : suites) {
    os << "suite " << suite.name << ": " << (suite.pass ? "pass" : "FAIL") << "\n";
    for (const auto& c : suite.checks) {
      os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
      if (c.trials > 0) os << " (" << c.trials << " trials)";
      if (!c.note.empty()) os << " [" << c.note << "]";
      if (!c.pass) os << "  residual: " << c.residual;
      os << "\n";
    }
  }
  os << (pass ? "all suites passed" : "FAILURES present") << "\n";
  return os.str();
}

}  // namespace gbv
