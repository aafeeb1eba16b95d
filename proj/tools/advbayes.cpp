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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "advbayes/advbayes.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::string example;
  std::optional<double> eps;
  std::optional<double> eps_min;
  std::optional<double> eps_max;
  std::optional<int> steps;
  std::optional<int> grid_n;
  std::optional<double> grid_h;
  std::optional<int> max_k;
  std::optional<double> tolerance;
  bool keep_all = false;
  bool full_matching = false;
  std::string out;
  std::string csv;
};

void AddRunFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file");
  cmd->add_option("--example", f.example, "built-in distribution name");
  cmd->add_option("--eps", f.eps, "adversarial radius");
  cmd->add_option("--eps-min", f.eps_min, "sweep start");
  cmd->add_option("--eps-max", f.eps_max, "sweep end");
  cmd->add_option("--steps", f.steps, "number of sweep points");
  cmd->add_option("--grid-n", f.grid_n, "first-order scan resolution");
  cmd->add_option("--grid-h", f.grid_h, "certificate grid spacing");
  cmd->add_option("--max-k", f.max_k, "max intervals per class in brute force");
  cmd->add_option("--tolerance", f.tolerance, "certificate tolerance");
  cmd->add_flag("--keep-all", f.keep_all,
                "keep candidates failing the second-order check");
  cmd->add_flag("--full-matching", f.full_matching,
                "write every matched atom pair");
  cmd->add_option("--out", f.out, "JSON report path");
  cmd->add_option("--csv", f.csv, "CSV report path");
}

advbayes::RunConfig BuildConfig(const Flags& f) {
  using advbayes::RunConfig;
  RunConfig cfg;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in)
      throw advbayes::ValidationError("cannot read '" + f.config_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = advbayes::ParseConfig(ss.str());
  }
  if (!f.example.empty()) {
    if (!f.config_path.empty())
      throw advbayes::ValidationError("--config and --example are exclusive");
    advbayes::catalog::ByName(f.example);
    cfg.example = f.example;
  }
  if (f.eps) {
    cfg.epsilon = *f.eps;
    cfg.sweep.reset();
  }
  if (f.eps_min || f.eps_max || f.steps) {
    advbayes::SweepSpec s = cfg.sweep.value_or(advbayes::SweepSpec{});
    if (f.eps_min) s.eps_min = *f.eps_min;
    if (f.eps_max) s.eps_max = *f.eps_max;
    if (f.steps) s.steps = *f.steps;
    if (!f.eps_max && !cfg.sweep) s.eps_max = s.eps_min;
    cfg.sweep = s;
  }
  if (f.grid_n) cfg.grid_n = *f.grid_n;
  if (f.grid_h) cfg.grid_h = *f.grid_h;
  if (f.max_k) cfg.max_k = *f.max_k;
  if (f.tolerance) cfg.tolerance = *f.tolerance;
  cfg.keep_all = cfg.keep_all || f.keep_all;
  cfg.full_matching = cfg.full_matching || f.full_matching;
  if (!f.out.empty()) cfg.out_path = f.out;
  if (!f.csv.empty()) cfg.csv_path = f.csv;
  if (!cfg.distribution && cfg.example.empty() && !cfg.atom_mode())
    throw advbayes::ValidationError("no distribution: use --config or --example");
  cfg.Validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adversarial Bayes classifiers for 1-D binary classification"};
  app.require_subcommand(1);
  Flags flags;
  std::string example_name = "all";

  CLI::App* solve = app.add_subcommand("solve", "solve at one epsilon");
  CLI::App* sweep = app.add_subcommand("sweep", "solve over a range of epsilon");
  CLI::App* certify =
      app.add_subcommand("certify", "primal brute force and dual certificate");
  CLI::App* examples =
      app.add_subcommand("examples", "run pinned built-in regressions");
  for (CLI::App* cmd : {solve, sweep, certify}) AddRunFlags(cmd, flags);
  examples->add_option("name", example_name, "example name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : advbayes::kExitUsage;
  }

  try {
    if (examples->parsed())
      return advbayes::CmdExamples(example_name, std::cout);
    const advbayes::RunConfig cfg = BuildConfig(flags);
    if (solve->parsed()) return advbayes::CmdSolve(cfg, std::cout);
    if (sweep->parsed()) return advbayes::CmdSweep(cfg, std::cout);
    return advbayes::CmdCertify(cfg, std::cout);
  } catch (const advbayes::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return advbayes::kExitBudget;
  } catch (const advbayes::ParseError& e) {
    std::cerr << "error: " << e.what();
    if (!e.field().empty() &&
        std::string(e.what()).find(e.field()) == std::string::npos)
      std::cerr << " (field " << e.field() << ")";
    std::cerr << "\n";
    return advbayes::kExitUsage;
  } catch (const advbayes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return advbayes::kExitUsage;
  }
}
