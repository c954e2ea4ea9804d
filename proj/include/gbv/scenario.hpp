#pragma once

// Scenario parsing and validation. A scenario is a JSON document selecting a
// bracket model and its polynomial data:
//   {
//     "model": "schouten" | "koszul_schouten",   // optional
//     "m": 2, "n": 2,                 // n defaults to m (models force n = m)
//     "w": "x1^2",                    // even weight (volume / deformation)
//     "P": [["0","1"],["-1","0"]],    // bivector components, antisymmetric
//     "christoffels": [[["0",...]]],  // [k][i][j] -> Gamma^k_{ij}, (i,j)-symmetric
//     "divergence": {"kind": "coordinate" | "deformed", "w": "..."},
//     "probe_degree": 3, "trials": 100, "seed": 0,
//     "suites": ["bracket_axioms", ...]
//   }

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbv/bivector.hpp"
#include "gbv/connections.hpp"

namespace gbv {

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(std::vector<std::string> errs);
  std::vector<std::string> errors;
};

struct DivergenceSpec {
  std::string kind = "coordinate";  // "coordinate" | "deformed"
  std::optional<SuperFn> w;
};

struct Scenario {
  std::optional<std::string> model;
  int m = 0;
  int n = 0;
  std::optional<SuperFn> w;  // even
  std::optional<Bivector> p;
  bool p_is_poisson = false;
  std::optional<Connection> christoffels;
  std::optional<DivergenceSpec> divergence;
  unsigned probe_degree = 3;
  long trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;
};

// Throws ScenarioError carrying one message per problem (with JSON paths),
// or ParseError for malformed JSON.
Scenario parse_scenario(const std::string& json_text);

}  // namespace gbv
