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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "advbayes/catalog.hpp"
#include "advbayes/certify.hpp"
#include "advbayes/solver.hpp"
#include "oracles.hpp"

namespace advbayes {
namespace {

IntervalSet Open(double lo, double hi) {
  return IntervalSet({Interval::Open(lo, hi)});
}

bool HasSet(const std::vector<IntervalSet>& sets, const IntervalSet& s) {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

TEST(Enumerate, NoPointsGivesTrivialSets) {
  const auto e = EnumerateCandidates({}, {}, 0.3);
  ASSERT_EQ(e.sets.size(), 2u);
  EXPECT_TRUE(HasSet(e.sets, IntervalSet::Empty()));
  EXPECT_TRUE(HasSet(e.sets, IntervalSet::Line()));
  EXPECT_FALSE(e.truncated);
}

TEST(Enumerate, SinglePointBothKinds) {
  const auto e = EnumerateCandidates({1.0}, {1.0}, 0.5);
  EXPECT_EQ(e.sets.size(), 4u);
  EXPECT_TRUE(HasSet(e.sets, Open(1, kInf)));
  EXPECT_TRUE(HasSet(e.sets, Open(-kInf, 1)));
}

TEST(Enumerate, DegenerateEndpoints) {
  const double eps = 0.05;
  const std::vector<double> a{-0.25 - eps, 0.25 - eps};
  const std::vector<double> b{-0.25 + eps, 0.25 + eps};
  const auto e = EnumerateCandidates(a, b, eps);
  EXPECT_TRUE(HasSet(e.sets, IntervalSet({Interval::Open(-kInf, -0.25 + eps),
                                          Interval::Open(0.25 - eps, kInf)})));
  for (const auto& s : e.sets) EXPECT_TRUE(IsRegular(s, eps)) << ToString(s);
}

TEST(Enumerate, MatchesBruteForceFiltering) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a, b;
    for (int i = 0; i < 3; ++i) a.push_back(oracle::Dyadic(rng, -2, 2, 3));
    for (int i = 0; i < 3; ++i) b.push_back(oracle::Dyadic(rng, -2, 2, 3));
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    const double eps = 0.25;
    const auto e = EnumerateCandidates(a, b, eps);
    // Reference: every set from the pooled points with lower endpoints in
    // a and upper endpoints in b that is regular.
    std::vector<double> pool(a);
    pool.insert(pool.end(), b.begin(), b.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::size_t expected = 0;
    for (const auto& s : oracle::AllGridSets(pool, 4)) {
      bool ok = IsRegular(s, eps);
      for (const auto& iv : s.intervals()) {
        if (std::isfinite(iv.lo) &&
            std::find(a.begin(), a.end(), iv.lo) == a.end())
          ok = false;
        if (std::isfinite(iv.hi) &&
            std::find(b.begin(), b.end(), iv.hi) == b.end())
          ok = false;
      }
      if (ok) {
        ++expected;
        EXPECT_TRUE(HasSet(e.sets, s)) << ToString(s);
      }
    }
    EXPECT_EQ(e.sets.size(), expected);
  }
}

TEST(AreEquivalent, Examples) {
  EXPECT_TRUE(AreEquivalent(catalog::GaussiansEqualMeans(), 0.5,
                            Open(-1, 1), Open(-1, 1)));
  const double eps = 0.2;
  const IntervalSet hole({Interval::Open(-kInf, -0.05),
                          Interval::Open(0.05, kInf)});
  EXPECT_TRUE(AreEquivalent(catalog::Degenerate(), eps, IntervalSet::Line(),
                            hole));
  EXPECT_FALSE(AreEquivalent(catalog::NonUniquenessAll(), eps,
                             Open(-0.2, kInf), Open(0.2, kInf)));
}

TEST(DegenerateReport, SmallComponentsAtTwoEps) {
  const auto r = MakeDegenerateReport(catalog::GaussiansEqualMeans(), 0.5,
                                      Open(0, 1));
  EXPECT_EQ(r.small_components, Open(0, 1));
  EXPECT_TRUE(r.assumptions_met);
}

TEST(DegenerateReport, EqualMeansBoundaryOnly) {
  const double b = catalog::EqualMeansB(0.5);
  const auto r = MakeDegenerateReport(catalog::GaussiansEqualMeans(), 0.5,
                                      Open(-b, b));
  EXPECT_EQ(r.maximal_degenerate,
            IntervalSet({Interval::Point(-b), Interval::Point(b)}));
  EXPECT_TRUE(r.small_components.empty());
}

TEST(Solve, EqualVariancesBelowThreshold) {
  const auto r = Solve(catalog::GaussiansEqualVariances(), 0.5);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_TRUE(r.unique_up_to_degeneracy);
  ASSERT_EQ(r.classes[0].representative.size(), 1u);
  EXPECT_NEAR(r.classes[0].representative[0].lo, 1.0, 1e-10);
  EXPECT_NEAR(r.min_risk, NormalCdf(-0.5), 1e-12);
}

TEST(Solve, EqualVariancesAboveThreshold) {
  const auto r = Solve(catalog::GaussiansEqualVariances(), 1.5);
  ASSERT_EQ(r.classes.size(), 2u);
  EXPECT_FALSE(r.unique_up_to_degeneracy);
  for (const auto& c : r.classes) EXPECT_NEAR(c.risk, 0.5, 1e-9);
}

TEST(Solve, NonUniquenessAllFamily) {
  const auto r = Solve(catalog::NonUniquenessAll(), 0.2);
  EXPECT_GE(r.classes.size(), 2u);
  EXPECT_FALSE(r.unique_up_to_degeneracy);
  EXPECT_NEAR(r.min_risk, 0.4, 1e-12);
  ASSERT_FALSE(r.plateau_checks.empty());
  EXPECT_TRUE(r.plateau_checks[0].family_optimal);
}

TEST(Solve, DegenerateProbe) {
  const auto r = Solve(catalog::Degenerate(), 0.2);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_TRUE(r.classes[0].representative.is_line());
  EXPECT_FALSE(r.classes[0].degenerate.assumptions_met);
  const IntervalSet& probed = r.classes[0].degenerate.probed;
  ASSERT_EQ(probed.size(), 1u);
  EXPECT_NEAR(probed[0].lo, -0.05, 1e-12);
  EXPECT_NEAR(probed[0].hi, 0.05, 1e-12);
  EXPECT_TRUE(probed[0].lo_closed && probed[0].hi_closed);
}

TEST(Solve, KeepAllRetainsPrunedPoints) {
  const auto pair = catalog::GaussiansEqualVariances();
  SolveOptions opt;
  const auto pruned = Solve(pair, 0.5, opt);
  opt.keep_all = true;
  const auto kept = Solve(pair, 0.5, opt);
  EXPECT_FALSE(pruned.pruned_points.empty());
  EXPECT_GT(kept.candidates.size(), pruned.candidates.size());
  EXPECT_NEAR(kept.min_risk, pruned.min_risk, 1e-12);
}

TEST(Solve, InvariantsOnCatalog) {
  const std::pair<const char*, double> cases[] = {
      {"gaussians_equal_variances", 1.0}, {"gaussians_equal_means", 0.5},
      {"non_uniqueness_single", 0.1},     {"non_uniqueness_all", 0.2},
      {"degenerate", 0.05},               {"degenerate", 0.125},
      {"deg_eta_0_1_counterexample", 0.1}};
  for (const auto& [name, eps] : cases) {
    const auto pair = catalog::ByName(name, eps);
    const auto r = Solve(pair, eps);
    ASSERT_FALSE(r.minimizers.empty()) << name;
    double lowest = kInf;
    for (const auto& c : r.candidates) lowest = std::min(lowest, c.risk.total);
    EXPECT_EQ(r.min_risk, lowest) << name;
    EXPECT_EQ(r.unique_up_to_degeneracy, r.classes.size() == 1) << name;
    EXPECT_TRUE(r.closure_holds) << name;
    // Every minimizer is equivalent to its class representative, and
    // equivalence is symmetric.
    for (const auto& cls : r.classes)
      for (const auto& m : cls.members) {
        EXPECT_TRUE(AreEquivalent(pair, eps, cls.representative, m.set));
        EXPECT_TRUE(AreEquivalent(pair, eps, m.set, cls.representative));
      }
    // Minimizers in different classes are never equivalent.
    for (std::size_t i = 0; i < r.classes.size(); ++i)
      for (std::size_t j = i + 1; j < r.classes.size(); ++j)
        EXPECT_FALSE(AreEquivalent(pair, eps, r.classes[i].representative,
                                   r.classes[j].representative))
            << name;
    // Union and intersection of minimizers stay optimal.
    for (const auto& x : r.minimizers)
      for (const auto& y : r.minimizers) {
        EXPECT_NEAR(AdversarialRisk(pair, Union(x.set, y.set), eps).total,
                    r.min_risk, 1e-9)
            << name;
        EXPECT_NEAR(AdversarialRisk(pair, Intersect(x.set, y.set), eps).total,
                    r.min_risk, 1e-9)
            << name;
      }
    if (r.unique_up_to_degeneracy) {
      for (const auto& m : r.minimizers)
        EXPECT_NEAR(pair.class0().Mass(Expand(m.set, eps)),
                    pair.class0().Mass(Expand(r.minimizers[0].set, eps)), 1e-9);
    }
  }
}

TEST(Solve, WeakDualityAgainstDualValue) {
  const std::pair<const char*, double> cases[] = {
      {"non_uniqueness_all", 0.2}, {"degenerate", 0.05},
      {"non_uniqueness_single", 0.1}};
  for (const auto& [name, eps] : cases) {
    const auto pair = catalog::ByName(name, eps);
    const double h = 1e-3;
    const auto d = Discretize(pair, h, DefaultCertifyWindow(pair));
    const double dual = DualValue(d.class0, d.class1, eps).dual_value;
    EXPECT_GE(Solve(pair, eps).min_risk, dual - 2 * h) << name;
  }
}

TEST(Solve, NegativeEpsilonRejected) {
  EXPECT_THROW(Solve(catalog::Degenerate(), -0.1), ValidationError);
}

TEST(CheckMonotonicity, Examples) {
  {
    const auto pair = catalog::GaussiansEqualVariances();
    EXPECT_TRUE(CheckMonotonicity(pair, Solve(pair, 0.3), Solve(pair, 0.6)).holds);
  }
  {
    const auto pair = catalog::GaussiansEqualMeans();
    EXPECT_TRUE(CheckMonotonicity(pair, Solve(pair, 0.2), Solve(pair, 0.8)).holds);
  }
  {
    const auto pair = catalog::NonUniquenessSingle();
    EXPECT_TRUE(CheckMonotonicity(pair, Solve(pair, 0.1), Solve(pair, 0.3)).holds);
  }
}

TEST(CheckMonotonicity, AssumptionsChecked) {
  const auto pair = catalog::Degenerate();
  EXPECT_THROW(CheckMonotonicity(pair, Solve(pair, 0.05), Solve(pair, 0.1)),
               AssumptionUnmet);
  const auto g = catalog::GaussiansEqualMeans();
  EXPECT_THROW(CheckMonotonicity(g, Solve(g, 0.5), Solve(g, 0.2)),
               ValidationError);
}

}  // namespace
}  // namespace advbayes
