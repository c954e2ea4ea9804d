#include "gbv/scenario.hpp"

#include <nlohmann/json.hpp>

#include "gbv/schouten.hpp"
#include "gbv/textio.hpp"

namespace gbv {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& errs) {
  std::string out = "scenario validation failed:";
  for (const auto& e : errs) out += "\n  - " + e;
  return out;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> errs)
    : std::runtime_error(join(errs)), errors(std::move(errs)) {}

Scenario parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }

  std::vector<std::string> errs;
  Scenario sc;
  if (!doc.is_object()) {
    throw ScenarioError({"top level: expected an object"});
  }

  static const char* known[] = {"model",      "m",     "n",    "w",
                                "P",          "christoffels", "divergence",
                                "probe_degree", "trials", "seed", "suites"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || (it.key() == k);
    if (!ok) errs.push_back("/" + it.key() + ": unknown key");
  }

  if (doc.contains("model")) {
    if (!doc["model"].is_string()) {
      errs.push_back("/model: expected a string");
    } else {
      sc.model = doc["model"].get<std::string>();
      if (*sc.model != "schouten" && *sc.model != "koszul_schouten")
        errs.push_back("/model: unknown model '" + *sc.model + "'");
    }
  }
  if (doc.contains("m")) {
    if (!doc["m"].is_number_integer() || doc["m"].get<long>() < 0 || doc["m"].get<long>() > 8)
      errs.push_back("/m: expected an integer in [0, 8]");
    else
      sc.m = doc["m"].get<int>();
  } else if (sc.model) {
    errs.push_back("/m: required when a model is selected");
  }
  sc.n = sc.model ? sc.m : 0;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 0 ||
        doc["n"].get<long>() > kMaxOddDim)
      errs.push_back("/n: expected an integer in [0, 32]");
    else
      sc.n = doc["n"].get<int>();
    if (sc.model && sc.n != sc.m) errs.push_back("/n: models require n = m");
  }
  if (!errs.empty() && (doc.contains("m") && !doc["m"].is_number_integer()))
    throw ScenarioError(errs);  // dimensions unusable, stop before parsing texts

  auto parse_fn = [&](const json& node, const std::string& path) -> std::optional<SuperFn> {
    if (!node.is_string()) {
      errs.push_back(path + ": expected a superfunction text");
      return std::nullopt;
    }
    try {
      return parse_superfn(node.get<std::string>(), sc.m, sc.n);
    } catch (const ParseError& e) {
      errs.push_back(path + ": " + e.what());
      return std::nullopt;
    }
  };

  if (doc.contains("w")) {
    auto w = parse_fn(doc["w"], "/w");
    if (w) {
      if (!w->has_parity(Parity::Even))
        errs.push_back("/w: weight must be even");
      else
        sc.w = *w;
    }
  }

  if (doc.contains("P")) {
    const json& pj = doc["P"];
    if (!pj.is_array() || int(pj.size()) != sc.m) {
      errs.push_back("/P: expected an m x m matrix of polynomial texts");
    } else {
      std::vector<std::vector<Poly>> mat;
      bool ok = true;
      for (int i = 0; i < sc.m && ok; ++i) {
        if (!pj[std::size_t(i)].is_array() || int(pj[std::size_t(i)].size()) != sc.m) {
          errs.push_back("/P/" + std::to_string(i) + ": expected a row of length m");
          ok = false;
          break;
        }
        std::vector<Poly> row;
        for (int j = 0; j < sc.m; ++j) {
          const json& cell = pj[std::size_t(i)][std::size_t(j)];
          std::string path = "/P/" + std::to_string(i) + "/" + std::to_string(j);
          if (!cell.is_string()) {
            errs.push_back(path + ": expected a polynomial text");
            ok = false;
            break;
          }
          try {
            row.push_back(parse_poly(cell.get<std::string>(), sc.m));
          } catch (const ParseError& e) {
            errs.push_back(path + ": " + e.what());
            ok = false;
            break;
          }
        }
        if (ok) mat.push_back(std::move(row));
      }
      if (ok) {
        Bivector p(sc.m);
        for (int i = 0; i < sc.m; ++i) {
          if (!mat[std::size_t(i)][std::size_t(i)].is_zero())
            errs.push_back("/P: diagonal entries must be zero");
          for (int j = i + 1; j < sc.m; ++j) {
            if (!(mat[std::size_t(i)][std::size_t(j)] + mat[std::size_t(j)][std::size_t(i)])
                     .is_zero())
              errs.push_back("/P: antisymmetry violated at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
            p.set(i, j, mat[std::size_t(i)][std::size_t(j)]);
          }
        }
        sc.p = p;
        sc.p_is_poisson = is_poisson(p);
      }
    }
  }

  if (doc.contains("christoffels")) {
    const json& cj = doc["christoffels"];
    Connection c(sc.m);
    bool ok = cj.is_array() && int(cj.size()) == sc.m;
    if (!ok) errs.push_back("/christoffels: expected an m x m x m array of polynomial texts");
    for (int k = 0; ok && k < sc.m; ++k) {
      const json& layer = cj[std::size_t(k)];
      if (!layer.is_array() || int(layer.size()) != sc.m) {
        errs.push_back("/christoffels/" + std::to_string(k) + ": expected m rows");
        ok = false;
        break;
      }
      for (int i = 0; ok && i < sc.m; ++i) {
        const json& row = layer[std::size_t(i)];
        if (!row.is_array() || int(row.size()) != sc.m) {
          errs.push_back("/christoffels/" + std::to_string(k) + "/" + std::to_string(i) +
                         ": expected m entries");
          ok = false;
          break;
        }
        for (int j = 0; j < sc.m; ++j) {
          std::string path = "/christoffels/" + std::to_string(k) + "/" + std::to_string(i) + "/" +
                             std::to_string(j);
          if (!row[std::size_t(j)].is_string()) {
            errs.push_back(path + ": expected a polynomial text");
            ok = false;
            break;
          }
          try {
            Poly g = parse_poly(row[std::size_t(j)].get<std::string>(), sc.m);
            if (j < i) {
              if (!(g - c.gamma(k, i, j)).is_zero())
                errs.push_back("/christoffels: symmetry violated at Gamma^" + std::to_string(k + 1) +
                               "_{" + std::to_string(i + 1) + std::to_string(j + 1) + "}");
            } else {
              c.set_gamma(k, i, j, g);
            }
          } catch (const ParseError& e) {
            errs.push_back(path + ": " + e.what());
          }
        }
      }
    }
    if (ok) sc.christoffels = c;
  }

  if (doc.contains("divergence")) {
    const json& dj = doc["divergence"];
    if (!dj.is_object() || !dj.contains("kind") || !dj["kind"].is_string()) {
      errs.push_back("/divergence: expected {\"kind\": ..., \"w\": ...}");
    } else {
      DivergenceSpec spec;
      spec.kind = dj["kind"].get<std::string>();
      if (spec.kind != "coordinate" && spec.kind != "deformed")
        errs.push_back("/divergence/kind: expected \"coordinate\" or \"deformed\"");
      if (spec.kind == "deformed") {
        if (!dj.contains("w")) {
          errs.push_back("/divergence/w: required for a deformed divergence");
        } else {
          auto w = parse_fn(dj["w"], "/divergence/w");
          if (w) {
            if (!w->has_parity(Parity::Even))
              errs.push_back("/divergence/w: weight must be even");
            else
              spec.w = *w;
          }
        }
      }
      sc.divergence = spec;
    }
  }

  if (doc.contains("probe_degree")) {
    if (!doc["probe_degree"].is_number_integer() || doc["probe_degree"].get<long>() < 0 ||
        doc["probe_degree"].get<long>() > 6)
      errs.push_back("/probe_degree: expected an integer in [0, 6]");
    else
      sc.probe_degree = doc["probe_degree"].get<unsigned>();
  }
  if (doc.contains("trials")) {
    if (!doc["trials"].is_number_integer() || doc["trials"].get<long>() < 1)
      errs.push_back("/trials: expected a positive integer");
    else
      sc.trials = doc["trials"].get<long>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      errs.push_back("/seed: expected an integer");
    else
      sc.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("suites")) {
    if (!doc["suites"].is_array()) {
      errs.push_back("/suites: expected an array of suite names");
    } else {
      for (const auto& s : doc["suites"]) {
        if (!s.is_string())
          errs.push_back("/suites: expected an array of suite names");
        else
          sc.suites.push_back(s.get<std::string>());
      }
    }
  }

  if (!errs.empty()) throw ScenarioError(errs);
  return sc;
}

}  // namespace gbv
