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

// Boundary conditions for adversarial Bayes classifiers.
//
//   g_a(x) = p1(x + e) - p0(x - e)   (left endpoints)
//   g_b(x) = p0(x + e) - p1(x - e)   (right endpoints)
//
// The window is cut into analytic cells at the shifted density breakpoints.
// Inside each cell g is smooth: sign changes are bracketed on a sample grid
// and bisected, and cells on which g vanishes at every sample become plateau
// candidates. At cell edges g may jump; a jump whose one-sided limits
// straddle zero is reported as a discontinuity candidate.

#ifndef ADVBAYES_CONDITIONS_HPP_
#define ADVBAYES_CONDITIONS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "advbayes/density.hpp"
#include "advbayes/errors.hpp"
#include "advbayes/intervals.hpp"
#include "advbayes/risk.hpp"

namespace advbayes {

inline constexpr double kRootTolerance = 1e-10;
inline constexpr double kPlateauTolerance = 1e-11;
inline constexpr double kDerivTolerance = 1e-10;
inline constexpr double kBisectTolerance = 1e-12;
inline constexpr std::size_t kMaxCandidatesPerKind = 64;

enum class EndpointKind { kA, kB };
enum class SecondOrder { kPass, kFail, kInconclusive };
enum class CandidateOrigin { kRoot, kPlateau, kDiscontinuity };

inline const char* ToString(EndpointKind k) {
  return k == EndpointKind::kA ? "A_ENDPOINT" : "B_ENDPOINT";
}
inline const char* ToString(SecondOrder s) {
  switch (s) {
    case SecondOrder::kPass: return "PASS";
    case SecondOrder::kFail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}
inline const char* ToString(CandidateOrigin o) {
  switch (o) {
    case CandidateOrigin::kRoot: return "root";
    case CandidateOrigin::kPlateau: return "plateau";
    default: return "discontinuity";
  }
}

struct CandidatePoint {
  EndpointKind kind = EndpointKind::kA;
  double location = 0.0;
  std::optional<Interval> plateau;
  SecondOrder second_order = SecondOrder::kInconclusive;
  // g at the location; zero for a jump whose one-sided limits bracket zero.
  double residual = 0.0;
  CandidateOrigin origin = CandidateOrigin::kRoot;

  bool is_plateau() const { return plateau.has_value(); }
  // Points fed to enumeration: the location, or both plateau endpoints.
  std::vector<double> representatives() const {
    if (!plateau) return {location};
    if (plateau->lo == plateau->hi) return {plateau->lo};
    return {plateau->lo, plateau->hi};
  }
};

struct ScanWindow {
  Interval window;
  bool support_is_interval = true;
  bool empty = false;
};

inline ScanWindow GetScanWindow(const DistributionPair& pair, double eps) {
  const IntervalSet supp = Support(pair);
  ScanWindow out;
  IntervalSet w;
  if (supp.size() == 1) {
    w = Interior(Contract(supp, eps));
  } else {
    out.support_is_interval = false;
    w = Interior(Expand(supp, eps));
    if (w.size() > 1)
      w = IntervalSet({Interval::Open(w.intervals().front().lo,
                                      w.intervals().back().hi)});
  }
  if (w.empty()) {
    out.empty = true;
    return out;
  }
  out.window = w[0];
  return out;
}

namespace detail {

// One-sided limit of a density at y, with y snapped onto a breakpoint lying
// within 1e-12 (1 + |y|).
inline double SnappedLimit(const ClassDensity& d, double y, int side) {
  const auto br = d.breakpoints();
  const double tol = 1e-12 * (1.0 + std::abs(y));
  auto it = std::lower_bound(br.begin(), br.end(), y - tol);
  if (it != br.end() && *it <= y + tol) y = *it;
  return d.Limit(y, side);
}

inline const ClassDensity& Plus(const DistributionPair& pair,
                                EndpointKind kind) {
  return kind == EndpointKind::kA ? pair.class1() : pair.class0();
}
inline const ClassDensity& Minus(const DistributionPair& pair,
                                 EndpointKind kind) {
  return kind == EndpointKind::kA ? pair.class0() : pair.class1();
}

// Breakpoints at which g of the given kind can jump.
inline std::vector<double> ShiftedBreakpoints(const DistributionPair& pair,
                                              EndpointKind kind, double eps) {
  std::vector<double> out;
  for (double t : Plus(pair, kind).breakpoints()) out.push_back(t - eps);
  for (double t : Minus(pair, kind).breakpoints()) out.push_back(t + eps);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// First-order defect g_kind(x); side selects a one-sided limit (0 = value).
inline double FirstOrderDefect(const DistributionPair& pair, EndpointKind kind,
                               double eps, double x, int side = 0) {
  const ClassDensity& plus = detail::Plus(pair, kind);
  const ClassDensity& minus = detail::Minus(pair, kind);
  if (side == 0) return plus.Eval(x + eps) - minus.Eval(x - eps);
  return detail::SnappedLimit(plus, x + eps, side) -
         detail::SnappedLimit(minus, x - eps, side);
}

inline SecondOrder CheckSecondOrder(const DistributionPair& pair, double eps,
                                    double x, EndpointKind kind) {
  const ClassDensity& plus = detail::Plus(pair, kind);
  const ClassDensity& minus = detail::Minus(pair, kind);
  const auto near_break = [](const ClassDensity& d, double y) {
    const double tol = 1e-12 * (1.0 + std::abs(y));
    const auto br = d.breakpoints();
    auto it = std::lower_bound(br.begin(), br.end(), y - tol);
    return it != br.end() && *it <= y + tol;
  };
  if (near_break(plus, x + eps) || near_break(minus, x - eps))
    return SecondOrder::kInconclusive;
  try {
    const double v = plus.Derivative(x + eps) - minus.Derivative(x - eps);
    return v >= -kDerivTolerance ? SecondOrder::kPass : SecondOrder::kFail;
  } catch (const BreakpointDerivative&) {
    return SecondOrder::kInconclusive;
  }
}

struct FirstOrderResult {
  ScanWindow window;
  std::vector<CandidatePoint> a;
  std::vector<CandidatePoint> b;
  bool truncated = false;
  std::vector<std::string> warnings;
};

namespace detail {

inline double Bisect(const DistributionPair& pair, EndpointKind kind,
                     double eps, double lo, double hi, double flo) {
  while (hi - lo > kBisectTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = FirstOrderDefect(pair, kind, eps, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline std::vector<CandidatePoint> ScanKind(const DistributionPair& pair,
                                            EndpointKind kind, double eps,
                                            const Interval& window,
                                            int grid_n) {
  double lo = window.lo;
  double hi = window.hi;
  if (!window.bounded()) {
    const Interval r = EffectiveRange(pair, 12.0);
    if (std::isinf(lo)) lo = r.lo - eps;
    if (std::isinf(hi)) hi = r.hi + eps;
  }
  std::vector<double> cuts{lo};
  for (double c : ShiftedBreakpoints(pair, kind, eps))
    if (c > lo && c < hi) cuts.push_back(c);
  cuts.push_back(hi);

  struct Cell {
    double lo, hi;
    bool plateau;
  };
  std::vector<Cell> cells;
  std::vector<CandidatePoint> roots;
  const double span = hi - lo;

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double l = cuts[i];
    const double r = cuts[i + 1];
    const int n = std::max(16, static_cast<int>(grid_n * (r - l) / span));
    std::vector<double> xs(n + 1);
    std::vector<double> vs(n + 1);
    bool all_small = true;
    for (int k = 0; k <= n; ++k) {
      const double x = k == n ? r : l + (r - l) * k / n;
      xs[k] = x;
      if (k == 0) vs[k] = FirstOrderDefect(pair, kind, eps, x, +1);
      else if (k == n) vs[k] = FirstOrderDefect(pair, kind, eps, x, -1);
      else vs[k] = FirstOrderDefect(pair, kind, eps, x);
      if (std::abs(vs[k]) >= kPlateauTolerance) all_small = false;
    }
    cells.push_back({l, r, all_small});
    if (all_small) continue;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && vs[k] == 0.0) {
        CandidatePoint c;
        c.kind = kind;
        c.location = xs[k];
        roots.push_back(c);
        continue;
      }
      if (vs[k] != 0.0 && vs[k + 1] != 0.0 && (vs[k] > 0) != (vs[k + 1] > 0)) {
        CandidatePoint c;
        c.kind = kind;
        c.location = Bisect(pair, kind, eps, xs[k], xs[k + 1], vs[k]);
        c.residual = FirstOrderDefect(pair, kind, eps, c.location);
        roots.push_back(c);
      }
    }
  }

  std::vector<CandidatePoint> out;
  // Plateaus: maximal runs of flat cells.
  for (std::size_t i = 0; i < cells.size();) {
    if (!cells[i].plateau) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < cells.size() && cells[j + 1].plateau) ++j;
    CandidatePoint c;
    c.kind = kind;
    c.origin = CandidateOrigin::kPlateau;
    c.plateau = Interval::Closed(cells[i].lo, cells[j].hi);
    c.location = cells[i].lo;
    c.residual = 0.0;
    const double mid = 0.5 * (cells[i].lo + cells[j].hi);
    c.second_order = CheckSecondOrder(pair, eps, mid, kind);
    out.push_back(c);
    i = j + 1;
  }

  const auto in_plateau = [&out](double x) {
    for (const auto& p : out)
      if (p.plateau && x >= p.plateau->lo - kBisectTolerance &&
          x <= p.plateau->hi + kBisectTolerance)
        return true;
    return false;
  };

  // Jumps at interior cuts that straddle zero.
  for (std::size_t i = 1; i + 1 < cuts.size(); ++i) {
    const double c = cuts[i];
    if (!window.contains(c)) continue;
    const double left = FirstOrderDefect(pair, kind, eps, c, -1);
    const double right = FirstOrderDefect(pair, kind, eps, c, +1);
    if (left == right) continue;
    const bool straddles = (left <= 0.0 && right >= 0.0) ||
                           (left >= 0.0 && right <= 0.0);
    if (!straddles || in_plateau(c)) continue;
    CandidatePoint p;
    p.kind = kind;
    p.location = c;
    p.origin = CandidateOrigin::kDiscontinuity;
    p.second_order = SecondOrder::kInconclusive;
    p.residual = 0.0;
    out.push_back(p);
  }

  for (CandidatePoint& c : roots) {
    if (!window.contains(c.location) || in_plateau(c.location)) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& o) {
      return !o.plateau && std::abs(o.location - c.location) <= 1e-11;
    });
    if (dup) continue;
    c.second_order = CheckSecondOrder(pair, eps, c.location, kind);
    out.push_back(c);
  }

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.location < y.location;
  });
  return out;
}

}  // namespace detail

inline FirstOrderResult SolveFirstOrder(const DistributionPair& pair,
                                        double eps, int grid_n) {
  if (grid_n < 64) throw ValidationError("grid_n must be >= 64");
  if (!(eps >= 0.0) || !std::isfinite(eps))
    throw ValidationError("epsilon must be a finite number >= 0");
  FirstOrderResult res;
  res.window = GetScanWindow(pair, eps);
  if (!res.window.support_is_interval)
    res.warnings.push_back(
        "support is not an interval; scanning the expanded support");
  if (res.window.empty)
    throw WindowEmpty("scan window is empty at epsilon=" +
                      std::to_string(eps));
  res.a = detail::ScanKind(pair, EndpointKind::kA, eps, res.window.window,
                           grid_n);
  res.b = detail::ScanKind(pair, EndpointKind::kB, eps, res.window.window,
                           grid_n);
  for (auto* list : {&res.a, &res.b}) {
    if (list->size() > kMaxCandidatesPerKind) {
      list->resize(kMaxCandidatesPerKind);
      res.truncated = true;
    }
  }
  if (res.truncated)
    res.warnings.push_back("candidate list truncated at 64 per kind");
  return res;
}

struct ProximityEntry {
  CandidatePoint candidate;
  double nearest = std::numeric_limits<double>::quiet_NaN();
  double distance = kInf;
  bool within_eps = false;
};

inline std::vector<ProximityEntry> BayesBoundaryProximity(
    const DistributionPair& pair, double eps,
    const std::vector<CandidatePoint>& candidates) {
  std::vector<double> boundary;
  try {
    boundary = BayesClassifier(pair).boundary_points();
  } catch (const DegenerateTie&) {
  }
  std::vector<ProximityEntry> out;
  for (const CandidatePoint& c : candidates) {
    ProximityEntry e;
    e.candidate = c;
    if (!boundary.empty()) {
      e.distance = 0.0;
      for (double x : c.representatives()) {
        double best = kInf;
        double arg = boundary.front();
        for (double z : boundary) {
          if (std::abs(x - z) < best) {
            best = std::abs(x - z);
            arg = z;
          }
        }
        if (best >= e.distance) {
          e.distance = best;
          e.nearest = arg;
        }
      }
      e.within_eps = e.distance <= eps + 1e-12;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace advbayes

#endif  // ADVBAYES_CONDITIONS_HPP_
