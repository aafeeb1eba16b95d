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

#ifndef ADVBAYES_RISK_HPP_
#define ADVBAYES_RISK_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "advbayes/density.hpp"
#include "advbayes/errors.hpp"
#include "advbayes/intervals.hpp"
#include "advbayes/polynomial.hpp"

namespace advbayes {

inline constexpr double kRiskTolerance = 1e-9;

struct RiskBreakdown {
  double total = 0.0;
  double false_negative_mass = 0.0;  // P1((A^C)^e)
  double false_positive_mass = 0.0;  // P0(A^e)
  double epsilon = 0.0;
};

inline RiskBreakdown AdversarialRisk(const DistributionPair& pair,
                                     const IntervalSet& a, double eps) {
  RiskBreakdown r;
  r.epsilon = eps;
  r.false_negative_mass = pair.class1().Mass(Expand(Complement(a), eps));
  r.false_positive_mass = pair.class0().Mass(Expand(a, eps));
  r.total = r.false_negative_mass + r.false_positive_mass;
  return r;
}

inline RiskBreakdown StandardRisk(const DistributionPair& pair,
                                  const IntervalSet& a) {
  return AdversarialRisk(pair, a, 0.0);
}

namespace detail {

// Open intervals of (lo, hi) on which f > 0, given every sign change of f
// inside (lo, hi) as a sorted root list.
inline std::vector<Interval> PositiveParts(const std::function<double(double)>& f,
                                           double lo, double hi,
                                           const std::vector<double>& roots) {
  std::vector<double> cuts{lo};
  for (double r : roots)
    if (r > lo && r < hi) cuts.push_back(r);
  cuts.push_back(hi);
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    double probe;
    if (std::isinf(a) && std::isinf(b)) probe = 0.0;
    else if (std::isinf(a)) probe = b - 1.0;
    else if (std::isinf(b)) probe = a + 1.0;
    else probe = 0.5 * (a + b);
    if (f(probe) > 0.0) out.push_back(Interval::Open(a, b));
  }
  return out;
}

// Sum of the polynomial pieces of `d` active on the open cell holding `mid`.
inline Polynomial ActivePolynomial(const ClassDensity& d, double mid) {
  Polynomial sum;
  for (const auto& c : d.components()) {
    const auto& pp = std::get<PiecewisePoly>(c);
    const int j = pp.CellOf(mid);
    if (j >= 0) sum = sum + pp.cells()[j];
  }
  return sum;
}

inline std::optional<std::pair<Gaussian, Gaussian>> SingleGaussians(
    const DistributionPair& pair) {
  const auto c0 = pair.class0().components();
  const auto c1 = pair.class1().components();
  if (c0.size() != 1 || c1.size() != 1) return std::nullopt;
  const auto* g0 = std::get_if<Gaussian>(&c0[0]);
  const auto* g1 = std::get_if<Gaussian>(&c1[0]);
  if (g0 == nullptr || g1 == nullptr) return std::nullopt;
  return std::make_pair(*g0, *g1);
}

// Real roots of A x^2 + B x + C, sorted; throws DegenerateTie when the
// polynomial vanishes identically.
inline std::vector<double> QuadraticRoots(double A, double B, double C) {
  std::vector<double> roots;
  if (A == 0.0) {
    if (B == 0.0) {
      if (C == 0.0) throw DegenerateTie("p1 == p0 on the whole line");
      return roots;
    }
    roots.push_back(-C / B);
    return roots;
  }
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return roots;
  const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  if (q == 0.0) {
    roots.push_back(0.0);
    return roots;
  }
  roots.push_back(q / A);
  roots.push_back(C / q);
  std::sort(roots.begin(), roots.end());
  if (roots[0] == roots[1]) roots.pop_back();
  return roots;
}

inline double BisectRoot(const std::function<double(double)>& f, double lo,
                         double hi, double tol) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
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

}  // namespace detail

// The open set {p1 > p0}. Analytic quadratic for one Gaussian per class,
// Sturm isolation on polynomial cells, and a sampled bracket scan with
// bisection when Gaussians and polynomials are mixed.
inline IntervalSet BayesClassifier(const DistributionPair& pair) {
  const auto diff = [&pair](double x) {
    return pair.class1().Eval(x) - pair.class0().Eval(x);
  };
  std::vector<Interval> parts;

  if (auto gs = detail::SingleGaussians(pair)) {
    const auto& [g0, g1] = *gs;
    const double s0 = g0.sigma * g0.sigma;
    const double s1 = g1.sigma * g1.sigma;
    const double A = 0.5 / s0 - 0.5 / s1;
    const double B = g1.mu / s1 - g0.mu / s0;
    const double C = 0.5 * g0.mu * g0.mu / s0 - 0.5 * g1.mu * g1.mu / s1 +
                     std::log(g1.weight * g0.sigma / (g0.weight * g1.sigma));
    const auto logdiff = [=](double x) { return (A * x + B) * x + C; };
    parts = detail::PositiveParts(logdiff, -kInf, kInf,
                                  detail::QuadraticRoots(A, B, C));
    return IntervalSet(std::move(parts));
  }

  const std::vector<double> br = pair.breakpoints();
  std::vector<double> cuts{-kInf};
  cuts.insert(cuts.end(), br.begin(), br.end());
  cuts.push_back(kInf);

  if (!pair.has_gaussian()) {
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i];
      const double hi = cuts[i + 1];
      if (std::isinf(lo) || std::isinf(hi)) continue;
      const double mid = 0.5 * (lo + hi);
      const Polynomial d = detail::ActivePolynomial(pair.class1(), mid) -
                           detail::ActivePolynomial(pair.class0(), mid);
      if (d.is_zero()) {
        if (pair.class0().Eval(mid) > 0.0)
          throw DegenerateTie("p1 == p0 on the cell (" + std::to_string(lo) +
                              ", " + std::to_string(hi) + ")");
        continue;
      }
      const auto f = [&d](double x) { return d(x); };
      auto cell = detail::PositiveParts(f, lo, hi, RealRoots(d, lo, hi));
      parts.insert(parts.end(), cell.begin(), cell.end());
    }
  } else {
    const Interval range = EffectiveRange(pair, 40.0);
    constexpr int kSamples = 4096;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i];
      const double hi = cuts[i + 1];
      const double slo = std::isinf(lo) ? std::min(range.lo, hi - 1.0) : lo;
      const double shi = std::isinf(hi) ? std::max(range.hi, lo + 1.0) : hi;
      std::vector<double> roots;
      double prev_x = slo;
      double prev_f = diff(std::isinf(lo) ? slo : std::nextafter(slo, shi));
      double max_abs = std::abs(prev_f);
      for (int k = 1; k <= kSamples; ++k) {
        double x = slo + (shi - slo) * k / kSamples;
        if (k == kSamples) x = std::nextafter(shi, slo);
        const double fx = diff(x);
        max_abs = std::max(max_abs, std::abs(fx));
        if (fx == 0.0) {
          roots.push_back(x);
        } else if (prev_f != 0.0 && (fx > 0) != (prev_f > 0)) {
          roots.push_back(detail::BisectRoot(diff, prev_x, x, 1e-13));
        }
        prev_x = x;
        prev_f = fx;
      }
      if (max_abs == 0.0) {
        if (pair.class0().Eval(0.5 * (slo + shi)) > 0.0)
          throw DegenerateTie("p1 == p0 on a cell of positive length");
        continue;
      }
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      auto cell = detail::PositiveParts(diff, lo, hi, roots);
      parts.insert(parts.end(), cell.begin(), cell.end());
    }
  }

  for (double b : br) {
    const double left = pair.class1().Limit(b, -1) - pair.class0().Limit(b, -1);
    const double right = pair.class1().Limit(b, 1) - pair.class0().Limit(b, 1);
    if (left > 0.0 && right > 0.0) parts.push_back(Interval::Point(b));
  }
  return Interior(IntervalSet(std::move(parts)));
}

struct RiskGap {
  double gap = 0.0;
  double bound = 0.0;
  bool holds = false;
};

// R(A) - R(B) against 2 e M K, for A and B whose components pair up with
// endpoints no further than e apart.
inline RiskGap RiskGapBound(const DistributionPair& pair, const IntervalSet& a,
                            const IntervalSet& b, double eps, double density_sup,
                            int components) {
  if (a.size() != b.size())
    throw EndpointMismatch("classifiers have different component counts");
  if (static_cast<std::size_t>(components) < a.size())
    throw EndpointMismatch("component count M is smaller than comp(A)");
  const auto close = [eps](double x, double y) {
    if (std::isinf(x) || std::isinf(y)) return x == y;
    return std::abs(x - y) <= eps + 1e-12;
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!close(a[i].lo, b[i].lo) || !close(a[i].hi, b[i].hi))
      throw EndpointMismatch("endpoints of component " + std::to_string(i) +
                             " differ by more than epsilon");
  }
  RiskGap r;
  r.gap = StandardRisk(pair, a).total - StandardRisk(pair, b).total;
  r.bound = 2.0 * eps * components * density_sup;
  r.holds = r.gap <= r.bound + 1e-12;
  return r;
}

}  // namespace advbayes

#endif  // ADVBAYES_RISK_HPP_
