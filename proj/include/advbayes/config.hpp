// Copyright 2026 The advbayes Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Run configuration. A config is a JSON object holding one distribution
// source and an optional "run" block:
//
//   {"class0": [...], "class1": [...]}           explicit densities
//   {"example": "degenerate", "scale": 0.1}      built-in distribution
//   {"atoms": {"class0": {"positions": [...], "masses": [...]},
//              "class1": {...}}}                 atoms, certify only
//
//   "run": {"epsilon": 0.2} or {"eps_min": .., "eps_max": .., "steps": ..},
//          plus grid_n, grid_h, max_k, keep_all, full_matching, tolerance,
//          out, csv.

#ifndef ADVBAYES_CONFIG_HPP_
#define ADVBAYES_CONFIG_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "advbayes/catalog.hpp"
#include "advbayes/certify.hpp"
#include "advbayes/density.hpp"
#include "advbayes/errors.hpp"

namespace advbayes {

struct SweepSpec {
  double eps_min = 0.0;
  double eps_max = 0.0;
  int steps = 1;

  std::vector<double> Values() const {
    std::vector<double> out;
    if (steps == 1) return {eps_min};
    for (int i = 0; i < steps; ++i)
      out.push_back(eps_min + (eps_max - eps_min) * i / (steps - 1));
    return out;
  }
};

struct RunConfig {
  std::optional<DistributionPair> distribution;
  std::string example;
  std::optional<double> example_scale;
  std::optional<AtomList> atoms0;
  std::optional<AtomList> atoms1;
  std::optional<double> epsilon;
  std::optional<SweepSpec> sweep;
  int grid_n = 2048;
  double grid_h = 1e-3;
  int max_k = 2;
  double tolerance = 5e-3;
  bool keep_all = false;
  bool full_matching = false;
  std::string out_path;
  std::string csv_path;

  bool atom_mode() const { return atoms0.has_value(); }

  // The distribution to use at radius eps; the scale-dependent built-in
  // takes its scale from eps unless one was configured.
  DistributionPair DistributionAt(double eps) const {
    if (!example.empty())
      return catalog::ByName(example, example_scale.value_or(eps));
    if (!distribution) throw ValidationError("no distribution configured");
    return *distribution;
  }

  void Validate() const {
    if (epsilon && (!(*epsilon >= 0.0) || !std::isfinite(*epsilon)))
      throw ValidationError("epsilon must be a finite number >= 0");
    if (sweep) {
      if (sweep->steps < 1) throw ValidationError("steps must be >= 1");
      if (!(sweep->eps_min >= 0.0) || !(sweep->eps_max >= sweep->eps_min) ||
          !std::isfinite(sweep->eps_max))
        throw ValidationError("sweep needs 0 <= eps_min <= eps_max");
    }
    if (grid_n < 64) throw ValidationError("grid_n must be >= 64");
    if (!(grid_h > 0.0)) throw ValidationError("grid_h must be > 0");
    if (max_k < 1 || max_k > 3)
      throw ValidationError("max_k must lie in [1, 3]");
    if (!(tolerance > 0.0)) throw ValidationError("tolerance must be > 0");
  }
};

namespace detail {

using Json = nlohmann::json;

inline const Json& Field(const Json& obj, const std::string& key,
                         const std::string& path) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError("missing field '" + path + key + "'", 0, path + key);
  return obj.at(key);
}

inline double Number(const Json& v, const std::string& field) {
  if (!v.is_number())
    throw ParseError("field '" + field + "' must be a number", 0, field);
  return v.get<double>();
}

inline int Integer(const Json& v, const std::string& field) {
  if (!v.is_number_integer())
    throw ParseError("field '" + field + "' must be an integer", 0, field);
  return v.get<int>();
}

inline std::vector<double> Numbers(const Json& v, const std::string& field) {
  if (!v.is_array())
    throw ParseError("field '" + field + "' must be an array", 0, field);
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(Number(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

inline ClassDensity ParseClass(const Json& arr, const std::string& field) {
  if (!arr.is_array() || arr.empty())
    throw ParseError("field '" + field + "' must be a non-empty array", 0,
                     field);
  std::vector<DensityComponent> comps;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = field + "[" + std::to_string(i) + "].";
    const Json& c = arr[i];
    const Json& type = Field(c, "type", path);
    if (type == "gaussian") {
      comps.push_back(Gaussian{Number(Field(c, "weight", path), path + "weight"),
                               Number(Field(c, "mu", path), path + "mu"),
                               Number(Field(c, "sigma", path), path + "sigma")});
    } else if (type == "piecewise_poly") {
      const Json& rows = Field(c, "coeffs", path);
      if (!rows.is_array())
        throw ParseError("field '" + path + "coeffs' must be an array", 0,
                         path + "coeffs");
      std::vector<std::vector<double>> coeffs;
      for (std::size_t r = 0; r < rows.size(); ++r)
        coeffs.push_back(
            Numbers(rows[r], path + "coeffs[" + std::to_string(r) + "]"));
      comps.push_back(PiecewisePoly(
          Numbers(Field(c, "breakpoints", path), path + "breakpoints"),
          std::move(coeffs)));
    } else {
      throw ParseError("unknown component type at '" + path + "type'", 0,
                       path + "type");
    }
  }
  return ClassDensity(std::move(comps));
}

inline AtomList ParseAtoms(const Json& obj, const std::string& field,
                           Label label) {
  AtomList a;
  a.label = label;
  a.positions = Numbers(Field(obj, "positions", field + "."),
                        field + ".positions");
  a.masses = Numbers(Field(obj, "masses", field + "."), field + ".masses");
  ValidateAtoms(a);
  return a;
}

}  // namespace detail

inline RunConfig ParseConfig(const std::string& text) {
  using detail::Json;
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min(e.byte, text.size());
    const int line =
        1 + static_cast<int>(std::count(text.begin(),
                                        text.begin() + static_cast<long>(upto),
                                        '\n'));
    throw ParseError("malformed config at line " + std::to_string(line) +
                         ": " + e.what(),
                     line);
  }
  if (!root.is_object()) throw ParseError("config must be a JSON object", 1);

  RunConfig cfg;
  const int sources = static_cast<int>(root.contains("example")) +
                      static_cast<int>(root.contains("atoms")) +
                      static_cast<int>(root.contains("class0") ||
                                       root.contains("class1"));
  if (sources != 1)
    throw ParseError(
        "config needs exactly one of 'example', 'atoms', or 'class0'/'class1'");

  if (root.contains("example")) {
    if (!root["example"].is_string())
      throw ParseError("field 'example' must be a string", 0, "example");
    cfg.example = root["example"].get<std::string>();
    if (std::find(catalog::Names().begin(), catalog::Names().end(),
                  cfg.example) == catalog::Names().end())
      throw UnknownExample("unknown example '" + cfg.example + "'");
    if (root.contains("scale"))
      cfg.example_scale = detail::Number(root["scale"], "scale");
  } else if (root.contains("atoms")) {
    const Json& atoms = root["atoms"];
    cfg.atoms0 = detail::ParseAtoms(detail::Field(atoms, "class0", "atoms."),
                                    "atoms.class0", Label::k0);
    cfg.atoms1 = detail::ParseAtoms(detail::Field(atoms, "class1", "atoms."),
                                    "atoms.class1", Label::k1);
  } else {
    cfg.distribution = DistributionPair(
        detail::ParseClass(detail::Field(root, "class0", ""), "class0"),
        detail::ParseClass(detail::Field(root, "class1", ""), "class1"));
  }

  if (root.contains("run")) {
    const Json& run = root["run"];
    if (!run.is_object())
      throw ParseError("field 'run' must be an object", 0, "run");
    if (run.contains("epsilon"))
      cfg.epsilon = detail::Number(run["epsilon"], "run.epsilon");
    if (run.contains("eps_min") || run.contains("eps_max") ||
        run.contains("steps")) {
      SweepSpec s;
      s.eps_min = detail::Number(detail::Field(run, "eps_min", "run."),
                                 "run.eps_min");
      s.eps_max = detail::Number(detail::Field(run, "eps_max", "run."),
                                 "run.eps_max");
      s.steps = detail::Integer(detail::Field(run, "steps", "run."),
                                "run.steps");
      cfg.sweep = s;
    }
    if (run.contains("grid_n"))
      cfg.grid_n = detail::Integer(run["grid_n"], "run.grid_n");
    if (run.contains("grid_h"))
      cfg.grid_h = detail::Number(run["grid_h"], "run.grid_h");
    if (run.contains("max_k"))
      cfg.max_k = detail::Integer(run["max_k"], "run.max_k");
    if (run.contains("tolerance"))
      cfg.tolerance = detail::Number(run["tolerance"], "run.tolerance");
    if (run.contains("keep_all")) cfg.keep_all = run["keep_all"].get<bool>();
    if (run.contains("full_matching"))
      cfg.full_matching = run["full_matching"].get<bool>();
    if (run.contains("out")) cfg.out_path = run["out"].get<std::string>();
    if (run.contains("csv")) cfg.csv_path = run["csv"].get<std::string>();
  }
  cfg.Validate();
  return cfg;
}

}  // namespace advbayes

#endif  // ADVBAYES_CONFIG_HPP_
