#pragma once

// The randomized verification harness: named suites of expected-zero identity
// checks over a scenario, and a small expression evaluator. Deterministic
// given (scenario, seed); per-check randomness is derived independently per
// trial so evaluation order never matters.

#include <string>
#include <vector>

#include "gbv/report.hpp"
#include "gbv/scenario.hpp"

namespace gbv {

std::vector<std::string> known_suites();

// Suites that make sense for the fields present in the scenario.
std::vector<std::string> applicable_suites(const Scenario& sc);

// Runs the given suites (all applicable ones when empty). Unknown suite
// names throw std::invalid_argument.
Report run_suites(const Scenario& sc, const std::vector<std::string>& suites);

// Evaluates "delta(<f>)", "bracket(<f>,<g>)", "hamiltonian(<f>)", "d(<f>)"
// or a plain superfunction against the scenario's model; returns the result
// in canonical text form.
std::string eval_expr(const Scenario& sc, const std::string& expr);

}  // namespace gbv
