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

// The four commands behind the advbayes executable. Each returns a process
// exit code and writes its reports to the configured paths or to `out`.

#ifndef ADVBAYES_COMMANDS_HPP_
#define ADVBAYES_COMMANDS_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "advbayes/catalog.hpp"
#include "advbayes/certify.hpp"
#include "advbayes/conditions.hpp"
#include "advbayes/config.hpp"
#include "advbayes/errors.hpp"
#include "advbayes/intervals.hpp"
#include "advbayes/risk.hpp"
#include "advbayes/serialize.hpp"
#include "advbayes/solver.hpp"

namespace advbayes {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitWarnings = 2;
inline constexpr int kExitBudget = 3;

namespace detail {

inline void WriteText(const std::string& path, const std::string& text,
                      std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << text;
  if (!f) throw ValidationError("failed writing '" + path + "'");
}

inline void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << text;
}

inline SolveOptions OptionsOf(const RunConfig& cfg) {
  SolveOptions opt;
  opt.grid_n = cfg.grid_n;
  opt.keep_all = cfg.keep_all;
  return opt;
}

inline double SingleEpsilon(const RunConfig& cfg) {
  if (cfg.epsilon) return *cfg.epsilon;
  if (cfg.sweep && cfg.sweep->steps == 1) return cfg.sweep->eps_min;
  throw ValidationError("an epsilon is required (--eps)");
}

inline unsigned WorkerCount(std::size_t items) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ADVBAYES_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(items)));
}

// Runs work(i) for i in [0, n) on up to WorkerCount(n) threads. The first
// exception thrown by any item is rethrown after all threads finish.
inline void ParallelFor(std::size_t n,
                        const std::function<void(std::size_t)>& work) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  const auto run = [&] {
    for (std::size_t i = next++; i < n && !failed; i = next++) {
      try {
        work(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = WorkerCount(n);
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

inline int CmdSolve(const RunConfig& cfg, std::ostream& out) {
  const double eps = detail::SingleEpsilon(cfg);
  const DistributionPair pair = cfg.DistributionAt(eps);
  const SolveReport rep = Solve(pair, eps, detail::OptionsOf(cfg));
  detail::WriteText(cfg.out_path, Dump(ToJson(rep)) + "\n", out);
  if (!cfg.csv_path.empty())
    detail::WriteFile(cfg.csv_path,
                      SolveCsvHeader() + "\n" + SolveCsvRow(rep) + "\n");
  return rep.warnings.empty() && !rep.truncated ? kExitOk : kExitWarnings;
}

// Columns of the sweep CSV, in order. Component counts are those of the
// first representative A restricted to I = expansion of the support.
inline std::string SweepCsvHeader() {
  return "epsilon,min_risk,n_classes,comp_A,comp_AC,unique,representatives,"
         "monotone_with_previous";
}

struct SweepRow {
  SolveReport report;
  std::size_t comp_a = 0;
  std::size_t comp_ac = 0;
  std::string monotone = "n/a";
};

inline std::vector<SweepRow> RunSweep(const RunConfig& cfg) {
  std::vector<double> eps_values;
  if (cfg.sweep) eps_values = cfg.sweep->Values();
  else eps_values = {detail::SingleEpsilon(cfg)};

  std::vector<SweepRow> rows(eps_values.size());
  detail::ParallelFor(eps_values.size(), [&](std::size_t i) {
    const double eps = eps_values[i];
    const DistributionPair pair = cfg.DistributionAt(eps);
    SweepRow& row = rows[i];
    row.report = Solve(pair, eps, detail::OptionsOf(cfg));
    if (!row.report.classes.empty()) {
      const IntervalSet i_eps = Expand(Support(pair), eps);
      const IntervalSet& a = row.report.classes.front().representative;
      row.comp_a = Components(Intersect(a, i_eps));
      row.comp_ac = Components(Difference(i_eps, a));
    }
  });

  const bool fixed_distribution =
      cfg.example != "deg_eta_0_1_counterexample" || cfg.example_scale;
  if (fixed_distribution) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (!(rows[i - 1].report.epsilon < rows[i].report.epsilon)) continue;
      try {
        const MonotonicityResult m = CheckMonotonicity(
            cfg.DistributionAt(rows[i].report.epsilon), rows[i - 1].report,
            rows[i].report);
        rows[i].monotone = m.holds ? "holds" : "violated";
      } catch (const AssumptionUnmet&) {
        rows[i].monotone = "n/a";
      }
    }
  }
  return rows;
}

inline std::string SweepCsvRow(const SweepRow& row) {
  const SolveReport& r = row.report;
  std::string reps;
  for (const auto& c : r.classes) {
    if (!reps.empty()) reps += "|";
    reps += EndpointString(c.representative);
  }
  return FormatDouble(r.epsilon) + "," + FormatDouble(r.min_risk) + "," +
         std::to_string(r.classes.size()) + "," + std::to_string(row.comp_a) +
         "," + std::to_string(row.comp_ac) + "," +
         (r.unique_up_to_degeneracy ? "1" : "0") + "," + reps + "," +
         row.monotone;
}

inline int CmdSweep(const RunConfig& cfg, std::ostream& out) {
  const std::vector<SweepRow> rows = RunSweep(cfg);
  std::string csv = SweepCsvHeader() + "\n";
  bool warned = false;
  Json reports = Json::array();
  for (const SweepRow& row : rows) {
    csv += SweepCsvRow(row) + "\n";
    warned = warned || row.report.truncated || !row.report.warnings.empty() ||
             row.monotone == "violated";
    if (!cfg.out_path.empty()) reports.push_back(ToJson(row.report));
  }
  detail::WriteText(cfg.csv_path, csv, out);
  if (!cfg.out_path.empty())
    detail::WriteFile(cfg.out_path, Dump(reports) + "\n");
  return warned ? kExitWarnings : kExitOk;
}

inline int CmdCertify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.atom_mode()) {
    const double eps = detail::SingleEpsilon(cfg);
    const DualCertificate cert = DualValue(*cfg.atoms0, *cfg.atoms1, eps);
    Json j = ToJson(cert, *cfg.atoms0, *cfg.atoms1, cfg.full_matching);
    detail::WriteText(cfg.out_path, Dump(j) + "\n", out);
    return kExitOk;
  }
  const double eps = detail::SingleEpsilon(cfg);
  const DistributionPair pair = cfg.DistributionAt(eps);
  const SolveReport rep = Solve(pair, eps, detail::OptionsOf(cfg));
  const DualityGap g = ComputeDualityGap(pair, eps, cfg.grid_h, cfg.max_k);
  const double solver_vs_primal = std::abs(rep.min_risk - g.primal);
  const double solver_vs_dual = std::abs(rep.min_risk - g.dual);
  const bool ok = solver_vs_primal <= cfg.tolerance &&
                  std::abs(g.gap) <= cfg.tolerance;
  const Discretization d =
      Discretize(pair, cfg.grid_h, DefaultCertifyWindow(pair));
  Json j = ToJson(g.certificate, d.class0, d.class1, cfg.full_matching);
  j["primal"] = g.primal;
  j["primal_argmin"] = ToJson(g.argmin);
  j["gap"] = g.gap;
  j["max_k"] = cfg.max_k;
  j["solver_min_risk"] = rep.min_risk;
  j["solver_vs_primal"] = solver_vs_primal;
  j["solver_vs_dual"] = solver_vs_dual;
  j["tolerance"] = cfg.tolerance;
  j["within_tolerance"] = ok;
  detail::WriteText(cfg.out_path, Dump(j) + "\n", out);
  return ok ? kExitOk : kExitWarnings;
}

// Pinned regression checks for the built-in distributions.
class ExampleChecks {
 public:
  explicit ExampleChecks(std::ostream& out) : out_(out) {}

  void Check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "[pass] " : "[FAIL] ") << name << ": " << detail << "\n";
    all_ok_ = all_ok_ && ok;
  }

  void Note(const std::string& text) { out_ << "       " << text << "\n"; }

  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

namespace detail {

inline std::string Fmt(double v) { return FormatDouble(v); }

inline bool SingleClass(const SolveReport& r, const IntervalSet& expected,
                        double tol) {
  if (r.classes.size() != 1) return false;
  const IntervalSet& rep = r.classes.front().representative;
  if (rep.size() != expected.size()) return false;
  const auto a = rep.boundary_points();
  const auto b = expected.boundary_points();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(std::abs(a[i] - b[i]) <= tol)) return false;
  return rep.empty() == expected.empty() &&
         (rep.empty() || (rep[0].lo == -kInf) == (expected[0].lo == -kInf));
}

inline bool HasTrivialPair(const SolveReport& r) {
  bool line = false;
  bool empty = false;
  for (const auto& c : r.classes) {
    line = line || c.representative.is_line();
    empty = empty || c.representative.empty();
  }
  return line && empty;
}

inline void RunExampleChecks(const std::string& name, ExampleChecks& ck) {
  using catalog::ByName;
  const SolveOptions opt;
  if (name == "gaussians_equal_variances") {
    const auto pair = catalog::GaussiansEqualVariances();
    for (double eps : {0.1, 0.5, 0.9}) {
      const SolveReport r = Solve(pair, eps, opt);
      ck.Check("eps=" + Fmt(eps) + " single class (1,inf)",
               SingleClass(r, IntervalSet({Interval::Open(1.0, kInf)}), 1e-8),
               "classes=" + std::to_string(r.classes.size()));
    }
    for (double eps : {1.1, 1.5}) {
      const SolveReport r = Solve(pair, eps, opt);
      ck.Check("eps=" + Fmt(eps) + " classes R and empty at risk 1/2",
               r.classes.size() == 2 && HasTrivialPair(r) &&
                   std::abs(r.min_risk - 0.5) <= 1e-9,
               "min_risk=" + Fmt(r.min_risk));
    }
    return;
  }
  if (name == "gaussians_equal_means") {
    const auto pair = catalog::GaussiansEqualMeans();
    for (double eps : {0.0, 0.5, 1.0}) {
      const double b = catalog::EqualMeansB(eps);
      const FirstOrderResult fo = SolveFirstOrder(pair, eps, opt.grid_n);
      double best = kInf;
      for (const auto& c : fo.b)
        if (!c.plateau) best = std::min(best, std::abs(c.location - b));
      ck.Check("eps=" + Fmt(eps) + " b-root matches closed form",
               best <= 1e-8, "b=" + Fmt(b) + " error=" + Fmt(best));
      ck.Note("closed form as printed in the literature gives " +
              Fmt(catalog::EqualMeansBLiterature(eps)));
      const SolveReport r = Solve(pair, eps, opt);
      ck.Check("eps=" + Fmt(eps) + " single class (-b,b)",
               SingleClass(r, IntervalSet({Interval::Open(-b, b)}), 1e-8),
               "classes=" + std::to_string(r.classes.size()));
    }
    return;
  }
  if (name == "non_uniqueness_single") {
    const auto pair = catalog::NonUniquenessSingle();
    for (double eps : {0.05, 0.1}) {
      const auto v = catalog::NonUniquenessSingleComputed(eps);
      const auto lit = catalog::NonUniquenessSingleLiterature(eps);
      const SolveReport r = Solve(pair, eps, opt);
      const PrimalResult p = PrimalBruteforce(pair, eps, 1e-3, 2);
      ck.Check("eps=" + Fmt(eps) + " solver matches brute force",
               std::abs(r.min_risk - p.min_risk) <= 2e-3,
               "solver=" + Fmt(r.min_risk) + " brute_force=" + Fmt(p.min_risk));
      ck.Check("eps=" + Fmt(eps) + " classifier (-inf," + Fmt(v.b) + ")",
               SingleClass(r, IntervalSet({Interval::Open(-kInf, v.b)}), 1e-8),
               "risk=" + Fmt(r.min_risk) + " expected=" + Fmt(v.risk));
      ck.Note("literature states b=" + Fmt(lit.b) + " risk=" +
              Fmt(lit.risk) + " threshold=" + Fmt(lit.threshold) +
              "; computed threshold=" + Fmt(v.threshold));
    }
    return;
  }
  if (name == "non_uniqueness_all") {
    const auto pair = catalog::NonUniquenessAll();
    for (double eps : {0.1, 0.2, 0.3}) {
      double worst = 0.0;
      for (double y : {-eps, 0.0, eps})
        worst = std::max(
            worst,
            std::abs(AdversarialRisk(pair,
                                     IntervalSet({Interval::Open(y, kInf)}),
                                     eps)
                         .total -
                     (eps + 0.25 * (1 - eps))));
      ck.Check("eps=" + Fmt(eps) + " risk of (y,inf) is eps+(1-eps)/4",
               worst <= 1e-12, "max error=" + Fmt(worst));
      const SolveReport r = Solve(pair, eps, opt);
      ck.Check("eps=" + Fmt(eps) + " not unique up to degeneracy",
               !r.unique_up_to_degeneracy,
               "classes=" + std::to_string(r.classes.size()));
    }
    for (double eps : {0.35, 0.4}) {
      const SolveReport r = Solve(pair, eps, opt);
      ck.Check("eps=" + Fmt(eps) + " classes include R and empty",
               HasTrivialPair(r), "min_risk=" + Fmt(r.min_risk));
    }
    return;
  }
  if (name == "degenerate") {
    const auto pair = catalog::Degenerate();
    for (double eps : {0.05, 0.1}) {
      const IntervalSet a1({Interval::Open(-kInf, -0.25 + eps),
                            Interval::Open(0.25 - eps, kInf)});
      const double risk = AdversarialRisk(pair, a1, eps).total;
      ck.Check("eps=" + Fmt(eps) + " risk of A1 is 4eps/5",
               std::abs(risk - 0.8 * eps) <= 1e-12, "risk=" + Fmt(risk));
    }
    const double step = 1.0 / 200;
    double threshold = kInf;
    for (int i = 0; i <= 10; ++i) {
      const double eps = 0.1 + step * i;
      const SolveReport r = Solve(pair, eps, opt);
      const bool line = std::any_of(
          r.classes.begin(), r.classes.end(),
          [](const EquivalenceClass& c) { return c.representative.is_line(); });
      if (line) {
        threshold = eps;
        break;
      }
    }
    ck.Check("threshold eps=1/8 detected", std::abs(threshold - 0.125) <= step,
             "first eps with R optimal=" + Fmt(threshold));
    const SolveReport r = Solve(pair, 0.2, opt);
    const IntervalSet& deg = r.classes.empty()
                                 ? IntervalSet::Empty()
                                 : r.classes.front().degenerate.probed;
    ck.Check("eps=0.2 flags degenerate interval [-0.05,0.05]",
             r.classes.size() == 1 && r.classes.front().representative.is_line() &&
                 deg.size() == 1 && std::abs(deg[0].lo + 0.05) <= 1e-8 &&
                 std::abs(deg[0].hi - 0.05) <= 1e-8,
             "degenerate=" + ToString(deg));
    return;
  }
  if (name == "deg_eta_0_1_counterexample") {
    const double s = 0.1;
    const auto pair = catalog::DegEtaCounterexample(s);
    const SolveReport r = Solve(pair, s, opt);
    const PrimalResult p = PrimalBruteforce(pair, s, 1e-3, 2);
    ck.Check("solver matches brute force", std::abs(r.min_risk - p.min_risk) <= 2e-3,
             "solver=" + Fmt(r.min_risk) + " brute_force=" + Fmt(p.min_risk));
    ck.Check("R is optimal at risk 1/3",
             !r.classes.empty() && r.classes.front().representative.is_line() &&
                 std::abs(r.min_risk - 1.0 / 3) <= 1e-9,
             "min_risk=" + Fmt(r.min_risk));
    ck.Note("literature states R^e(R)=" + Fmt(catalog::kDegEtaLiteratureRiskLine) +
            " and R^e(empty)=" + Fmt(catalog::kDegEtaLiteratureRiskEmpty) +
            "; computed R^e(empty)=" +
            Fmt(AdversarialRisk(pair, IntervalSet::Empty(), s).total));
    return;
  }
  throw UnknownExample("unknown example '" + name + "'");
}

}  // namespace detail

// Runs the pinned checks for `name`, or for every built-in when `name` is
// "all". Returns 0 when every check passes and 2 otherwise.
inline int CmdExamples(const std::string& name, std::ostream& out) {
  std::vector<std::string> names;
  if (name == "all" || name.empty()) names = catalog::Names();
  else names = {name};
  ExampleChecks ck(out);
  for (const auto& n : names) {
    if (std::find(catalog::Names().begin(), catalog::Names().end(), n) ==
        catalog::Names().end())
      throw UnknownExample("unknown example '" + n + "'");
    out << n << "\n";
    detail::RunExampleChecks(n, ck);
  }
  return ck.all_ok() ? kExitOk : kExitWarnings;
}

}  // namespace advbayes

#endif  // ADVBAYES_COMMANDS_HPP_
