#pragma once

// Machine-readable verification reports. A suite passes iff every residual
// normal form is the zero element; residuals are algebra elements, never
// floats.

#include <string>
#include <vector>

namespace gbv {

struct CheckResult {
  std::string name;
  std::string identity;   // the statement being checked, as a formula
  long trials = 0;
  long failures = 0;
  std::string residual = "0";  // first nonzero residual, normal form
  std::string note;            // e.g. probe certification degree
  double elapsed_ms = 0.0;
  bool pass = true;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass = true;
};

struct Report {
  int schema = 1;
  std::uint64_t seed = 0;
  long trials = 0;
  std::vector<SuiteResult> suites;
  bool pass = true;

  // Deterministic given (scenario, seed) when with_timing is false.
  std::string to_json(bool with_timing) const;
  std::string to_text() const;
};

}  // namespace gbv
