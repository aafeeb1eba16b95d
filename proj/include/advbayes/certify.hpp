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

// Independent certificates for the minimal adversarial risk.
//
// Dual side: both class measures are discretized into atoms and the
// largest mass that can be paired across classes at distance <= 2e is
// computed by a greedy sweep. Each class moves its half of a pair by at
// most e onto a common point, so the matched mass is the overlap
// integral of min(dP0', dP1') for some W-infinity perturbations.
//
// Primal side: an exact dynamic program over classifiers with endpoints on
// a grid. For a set with boundary t_1 < ... < t_n the risk splits into one
// term per segment (t_k, t_{k+1}):
//
//   inside:  P0[t_k - e, t_{k+1} + e] - P1[t_{k+1} - e, t_k + e]
//   outside: P1[t_k - e, t_{k+1} + e] - P0[t_{k+1} - e, t_k + e]
//
// where the subtracted term is present only for bounded segments shorter
// than 2e. The expanded pieces form a proper interval family, so only
// neighbouring expansions overlap and the sum is exact.

#ifndef ADVBAYES_CERTIFY_HPP_
#define ADVBAYES_CERTIFY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "advbayes/conditions.hpp"
#include "advbayes/density.hpp"
#include "advbayes/errors.hpp"
#include "advbayes/intervals.hpp"
#include "advbayes/risk.hpp"

namespace advbayes {

inline constexpr double kCoverage = 1.0 - 1e-6;
inline constexpr double kMaxDpTransitions = 1e10;

struct AtomList {
  std::vector<double> positions;
  std::vector<double> masses;
  Label label = Label::k0;

  std::size_t size() const { return positions.size(); }
  double total() const {
    double s = 0.0;
    for (double m : masses) s += m;
    return s;
  }
};

struct MatchedPair {
  std::size_t index0;
  std::size_t index1;
  double mass;
};

struct DualCertificate {
  double dual_value = 0.0;
  std::vector<MatchedPair> matching;
  double grid_h = 0.0;
  double epsilon = 0.0;
  double radius = 0.0;
};

struct Discretization {
  AtomList class0;
  AtomList class1;
  Interval window;
};

// Hull of the support, with Gaussian tails cut at mu +- 8 sigma.
inline Interval DefaultCertifyWindow(const DistributionPair& pair) {
  return EffectiveRange(pair, 8.0);
}

inline Discretization Discretize(const DistributionPair& pair, double grid_h,
                                 Interval window) {
  if (!(grid_h > 0.0)) throw ValidationError("grid_h must be > 0");
  if (!window.bounded() || !(window.lo < window.hi))
    throw ValidationError("discretization window must be bounded");
  const auto covered = [&](const ClassDensity& d) {
    const double total = d.TotalMass();
    return d.Mass(window) >= kCoverage * total;
  };
  while (!covered(pair.class0()) || !covered(pair.class1())) {
    const double w = window.hi - window.lo;
    window = Interval::Closed(window.lo - 0.5 * w, window.hi + 0.5 * w);
  }
  Discretization out;
  out.window = window;
  out.class0.label = Label::k0;
  out.class1.label = Label::k1;
  const auto cells = static_cast<std::size_t>(
      std::ceil((window.hi - window.lo) / grid_h - 1e-9));
  for (std::size_t k = 0; k < cells; ++k) {
    const double lo = window.lo + static_cast<double>(k) * grid_h;
    const double hi = std::min(window.hi, lo + grid_h);
    const Interval cell = Interval::Closed(lo, hi);
    const double mid = 0.5 * (lo + hi);
    for (auto [d, atoms] : {std::pair{&pair.class0(), &out.class0},
                            std::pair{&pair.class1(), &out.class1}}) {
      const double m = d->Mass(cell);
      if (m > 0.0) {
        atoms->positions.push_back(mid);
        atoms->masses.push_back(m);
      }
    }
  }
  return out;
}

inline void ValidateAtoms(const AtomList& atoms) {
  if (atoms.positions.size() != atoms.masses.size())
    throw ValidationError("atom positions and masses differ in length");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!(atoms.masses[i] >= 0.0))
      throw ValidationError("atom masses must be nonnegative");
    if (i > 0 && !(atoms.positions[i] > atoms.positions[i - 1]))
      throw ValidationError("atom positions must be strictly increasing");
  }
}

// Maximum mass matched between class-0 and class-1 atoms at distance at
// most 2e + slack. Each class-0 atom, left to right, takes the leftmost
// compatible class-1 mass still available.
inline DualCertificate DualValue(const AtomList& c0, const AtomList& c1,
                                 double eps, double slack = 0.0) {
  if (!(eps >= 0.0)) throw ValidationError("epsilon must be >= 0");
  ValidateAtoms(c0);
  ValidateAtoms(c1);
  DualCertificate cert;
  cert.epsilon = eps;
  cert.grid_h = slack;
  cert.radius = 2.0 * eps + slack;
  const double r = cert.radius * (1.0 + 1e-12) + 1e-15;
  std::vector<double> left(c1.masses);
  std::size_t j = 0;
  for (std::size_t i = 0; i < c0.size(); ++i) {
    double need = c0.masses[i];
    const double x = c0.positions[i];
    while (j < c1.size() && (c1.positions[j] < x - r || left[j] <= 0.0)) ++j;
    for (std::size_t k = j; k < c1.size() && need > 0.0; ++k) {
      if (c1.positions[k] > x + r) break;
      if (left[k] <= 0.0) continue;
      const double m = std::min(need, left[k]);
      need -= m;
      left[k] -= m;
      cert.dual_value += m;
      cert.matching.push_back({i, k, m});
    }
  }
  return cert;
}

struct PrimalResult {
  double min_risk = 0.0;
  IntervalSet argmin;
  std::size_t grid_points = 0;
  double transitions = 0.0;
};

inline PrimalResult PrimalBruteforce(const DistributionPair& pair, double eps,
                                     double grid_h, int max_k) {
  if (max_k < 1 || max_k > 3)
    throw ValidationError("max_k must lie in [1, 3]");
  if (!(grid_h > 0.0)) throw ValidationError("grid_h must be > 0");
  if (!(eps >= 0.0)) throw ValidationError("epsilon must be >= 0");

  PrimalResult best;
  const double r_line = pair.class0().TotalMass();
  const double r_empty = pair.class1().TotalMass();
  best.min_risk = r_empty;
  best.argmin = IntervalSet::Empty();
  if (r_line < best.min_risk) {
    best.min_risk = r_line;
    best.argmin = IntervalSet::Line();
  }

  const ScanWindow sw = GetScanWindow(pair, eps);
  if (sw.empty) return best;
  Interval w = sw.window;
  if (!w.bounded()) {
    const Interval r = EffectiveRange(pair, 12.0);
    if (std::isinf(w.lo)) w.lo = r.lo - eps;
    if (std::isinf(w.hi)) w.hi = r.hi + eps;
  }
  const double approx_points = std::floor((w.hi - w.lo) / grid_h) + 1.0;
  const auto window_width = static_cast<double>(
      std::ceil(2.0 * eps / grid_h) + 1.0);
  best.transitions =
      approx_points * (window_width + 1.0) * 2.0 * static_cast<double>(max_k + 1);
  if (best.transitions > kMaxDpTransitions)
    throw BudgetExceeded("primal search needs " +
                         std::to_string(best.transitions) + " transitions");

  std::vector<double> t;
  {
    const double start = std::ceil(w.lo / grid_h) * grid_h;
    for (std::int64_t k = 0;; ++k) {
      const double x = start + static_cast<double>(k) * grid_h;
      if (x >= w.hi) break;
      if (w.contains(x)) t.push_back(x);
    }
  }
  const std::size_t n = t.size();
  best.grid_points = n;
  if (n == 0) return best;

  best.transitions = static_cast<double>(n) * (window_width + 1.0) * 2.0 *
                     static_cast<double>(max_k + 1);

  // Cumulative masses F_c(t_i +- e).
  std::vector<double> f0m(n), f0p(n), f1m(n), f1p(n);
  for (std::size_t i = 0; i < n; ++i) {
    f0m[i] = pair.class0().Mass(Interval::Open(-kInf, t[i] - eps));
    f0p[i] = pair.class0().Mass(Interval::Open(-kInf, t[i] + eps));
    f1m[i] = pair.class1().Mass(Interval::Open(-kInf, t[i] - eps));
    f1p[i] = pair.class1().Mass(Interval::Open(-kInf, t[i] + eps));
  }
  const double tot0 = r_line;
  const double tot1 = r_empty;

  // Type 1 = inside A, type 0 = outside.
  const auto seg_cost = [&](int type, std::size_t i, std::size_t j) {
    const auto& fm_main = type == 1 ? f0m : f1m;
    const auto& fp_main = type == 1 ? f0p : f1p;
    const auto& fm_other = type == 1 ? f1m : f0m;
    const auto& fp_other = type == 1 ? f1p : f0p;
    double c = fp_main[j] - fm_main[i];
    if (t[j] - t[i] < 2.0 * eps) c -= fp_other[i] - fm_other[j];
    return c;
  };
  const auto first_cost = [&](int type, std::size_t j) {
    return type == 1 ? f0p[j] : f1p[j];
  };
  const auto last_cost = [&](int type, std::size_t i) {
    return type == 1 ? tot0 - f0m[i] : tot1 - f1m[i];
  };

  // D[j][c][k]: cheapest prefix whose last boundary is t_j, with the
  // segment after t_j of type c and k inside segments counted so far.
  const int K = max_k;
  const std::size_t stride = 2 * static_cast<std::size_t>(K + 1);
  const auto at = [&](std::size_t j, int c, int k) {
    return j * stride + static_cast<std::size_t>(c) * (K + 1) +
           static_cast<std::size_t>(k);
  };
  constexpr double kNone = std::numeric_limits<double>::infinity();
  std::vector<double> D(n * stride, kNone);
  std::vector<std::int64_t> back(n * stride, -1);

  // Prefix minima of D[i][c][k] - F_main(t_i - e) over i far enough back.
  std::vector<double> pmin(stride, kNone);
  std::vector<std::int64_t> parg(stride, -1);
  std::size_t far = 0;  // indices < far satisfy t_j - t_i >= 2e

  for (std::size_t j = 0; j < n; ++j) {
    while (far < j && t[j] - t[far] >= 2.0 * eps) {
      for (int c = 0; c < 2; ++c) {
        // Segment after t_far has type c; its main class is 0 if inside.
        const auto& fm_main = c == 1 ? f0m : f1m;
        for (int k = 0; k <= K; ++k) {
          const double v = D[at(far, c, k)];
          if (v == kNone) continue;
          const double key = v - fm_main[far];
          const std::size_t s = static_cast<std::size_t>(c) * (K + 1) + k;
          if (key < pmin[s]) {
            pmin[s] = key;
            parg[s] = static_cast<std::int64_t>(far);
          }
        }
      }
      ++far;
    }
    for (int c = 0; c < 2; ++c) {
      const int prev = 1 - c;
      const auto& fp_main = prev == 1 ? f0p : f1p;
      for (int k = 0; k <= K; ++k) {
        const int k_prev = k - (c == 1 ? 1 : 0);
        double bestv = kNone;
        std::int64_t arg = -1;
        // Leading segment (-inf, t_j) of type prev.
        const int lead_k = (prev == 1 ? 1 : 0) + (c == 1 ? 1 : 0);
        if (lead_k == k) {
          bestv = first_cost(prev, j);
          arg = -1;
        }
        if (k_prev >= 0) {
          const std::size_t s = static_cast<std::size_t>(prev) * (K + 1) +
                                static_cast<std::size_t>(k_prev);
          if (pmin[s] != kNone) {
            const double v = pmin[s] + fp_main[j];
            if (v < bestv) {
              bestv = v;
              arg = parg[s];
            }
          }
          for (std::size_t i = far; i < j; ++i) {
            const double d = D[at(i, prev, k_prev)];
            if (d == kNone) continue;
            const double v = d + seg_cost(prev, i, j);
            if (v < bestv) {
              bestv = v;
              arg = static_cast<std::int64_t>(i);
            }
          }
        }
        if (bestv != kNone) {
          D[at(j, c, k)] = bestv;
          back[at(j, c, k)] = arg;
        }
      }
    }
  }

  std::int64_t end_j = -1;
  int end_c = 0;
  int end_k = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k <= K; ++k) {
        const double d = D[at(j, c, k)];
        if (d == kNone) continue;
        const double v = d + last_cost(c, j);
        if (v < best.min_risk) {
          best.min_risk = v;
          end_j = static_cast<std::int64_t>(j);
          end_c = c;
          end_k = k;
        }
      }
  if (end_j < 0) return best;

  std::vector<double> boundary;
  std::int64_t j = end_j;
  int c = end_c;
  int k = end_k;
  while (j >= 0) {
    boundary.push_back(t[static_cast<std::size_t>(j)]);
    const std::int64_t i = back[at(static_cast<std::size_t>(j), c, k)];
    k -= c == 1 ? 1 : 0;
    c = 1 - c;
    j = i;
  }
  std::reverse(boundary.begin(), boundary.end());
  // c is now the type of the leading segment.
  best.argmin = IntervalSet::FromBoundary(boundary, c == 1);
  return best;
}

struct DualityGap {
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
  IntervalSet argmin;
  DualCertificate certificate;
  std::size_t atoms0 = 0;
  std::size_t atoms1 = 0;
};

inline DualityGap ComputeDualityGap(const DistributionPair& pair, double eps,
                                    double grid_h, int max_k) {
  DualityGap g;
  const PrimalResult p = PrimalBruteforce(pair, eps, grid_h, max_k);
  const Discretization d =
      Discretize(pair, grid_h, DefaultCertifyWindow(pair));
  g.certificate = DualValue(d.class0, d.class1, eps, grid_h);
  g.primal = p.min_risk;
  g.argmin = p.argmin;
  g.dual = g.certificate.dual_value;
  g.gap = g.primal - g.dual;
  g.atoms0 = d.class0.size();
  g.atoms1 = d.class1.size();
  return g;
}

}  // namespace advbayes

#endif  // ADVBAYES_CERTIFY_HPP_
