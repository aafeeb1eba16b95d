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

// Class-conditional densities p0, p1 built from weighted Gaussians and
// piecewise polynomials, with exact evaluation, differentiation and mass.

#ifndef ADVBAYES_DENSITY_HPP_
#define ADVBAYES_DENSITY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "advbayes/errors.hpp"
#include "advbayes/intervals.hpp"
#include "advbayes/polynomial.hpp"

namespace advbayes {

inline constexpr int kMaxPolyDegree = 5;
inline constexpr double kMassTolerance = 1e-9;

// Standard normal CDF via the complementary error function.
inline double NormalCdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

// Upper tail 1 - Phi(z), computed without cancellation.
inline double NormalSf(double z) {
  return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

struct Gaussian {
  double weight = 1.0;
  double mu = 0.0;
  double sigma = 1.0;

  void Validate() const {
    if (!(weight > 0.0 && weight <= 1.0))
      throw ValidationError("gaussian weight must lie in (0, 1]");
    if (!std::isfinite(mu)) throw ValidationError("gaussian mu must be finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
      throw ValidationError("gaussian sigma must be > 0");
  }

  double Eval(double x) const {
    const double z = (x - mu) / sigma;
    return weight * std::exp(-0.5 * z * z) /
           (sigma * std::sqrt(2.0 * std::numbers::pi));
  }
  double Derivative(double x) const {
    return -(x - mu) / (sigma * sigma) * Eval(x);
  }
  double Mass(double lo, double hi) const {
    if (!(lo < hi)) return 0.0;
    const double zl = (lo - mu) / sigma;
    const double zh = (hi - mu) / sigma;
    if (zl > 0) return weight * (NormalSf(zl) - NormalSf(zh));
    return weight * (NormalCdf(zh) - NormalCdf(zl));
  }
  double Peak() const {
    return weight / (sigma * std::sqrt(2.0 * std::numbers::pi));
  }
};

// Polynomial pieces on [x_0, x_1), ..., [x_{k-1}, x_k]; zero elsewhere.
class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  PiecewisePoly(std::vector<double> breakpoints,
                std::vector<std::vector<double>> coeffs)
      : breaks_(std::move(breakpoints)) {
    if (breaks_.size() < 2)
      throw ValidationError("piecewise_poly needs at least two breakpoints");
    if (coeffs.size() != breaks_.size() - 1)
      throw ValidationError(
          "piecewise_poly needs one coefficient row per cell");
    for (std::size_t j = 0; j + 1 < breaks_.size(); ++j) {
      if (!std::isfinite(breaks_[j]) || !(breaks_[j] < breaks_[j + 1]))
        throw ValidationError(
            "piecewise_poly breakpoints must be finite and strictly "
            "increasing");
    }
    if (!std::isfinite(breaks_.back()))
      throw ValidationError("piecewise_poly breakpoints must be finite");
    for (auto& row : coeffs) {
      Polynomial p(row);
      if (p.degree() > kMaxPolyDegree)
        throw ValidationError("piecewise_poly degree is capped at 5");
      cells_.push_back(std::move(p));
    }
    for (std::size_t j = 0; j < cells_.size(); ++j) CheckNonNegative(j);
  }

  std::span<const double> breakpoints() const { return breaks_; }
  std::span<const Polynomial> cells() const { return cells_; }

  // Index of the cell [x_j, x_{j+1}) holding x, or -1 outside the support.
  int CellOf(double x) const {
    if (x < breaks_.front() || x > breaks_.back()) return -1;
    if (x == breaks_.back()) return static_cast<int>(cells_.size()) - 1;
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return static_cast<int>(it - breaks_.begin()) - 1;
  }

  double Eval(double x) const {
    const int j = CellOf(x);
    return j < 0 ? 0.0 : cells_[j](x);
  }

  // One-sided limit at x from the left (side < 0) or right (side > 0).
  double Limit(double x, int side) const {
    if (side < 0) {
      if (x <= breaks_.front() || x > breaks_.back()) return 0.0;
      const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
      const int j = static_cast<int>(it - breaks_.begin()) - 1;
      return cells_[j](x);
    }
    if (x < breaks_.front() || x >= breaks_.back()) return 0.0;
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    const int j = static_cast<int>(it - breaks_.begin()) - 1;
    return cells_[j](x);
  }

  bool IsBreakpoint(double x) const {
    return std::binary_search(breaks_.begin(), breaks_.end(), x);
  }

  double Derivative(double x) const {
    if (IsBreakpoint(x)) throw BreakpointDerivative(x);
    const int j = CellOf(x);
    return j < 0 ? 0.0 : cells_[j].derivative()(x);
  }

  double Mass(double lo, double hi) const {
    double total = 0.0;
    for (std::size_t j = 0; j < cells_.size(); ++j) {
      const double a = std::max(lo, breaks_[j]);
      const double b = std::min(hi, breaks_[j + 1]);
      if (a < b) total += cells_[j].integrate(a, b);
    }
    return total;
  }

  double CellMax(std::size_t j) const {
    const Polynomial& p = cells_[j];
    double m = std::max(p(breaks_[j]), p(breaks_[j + 1]));
    for (double r : RealRoots(p.derivative(), breaks_[j], breaks_[j + 1]))
      m = std::max(m, p(r));
    return m;
  }

 private:
  // Samples plus the interior critical points bound the cell minimum.
  void CheckNonNegative(std::size_t j) const {
    const Polynomial& p = cells_[j];
    const double lo = breaks_[j];
    const double hi = breaks_[j + 1];
    const double tol = 1e-12 * std::max(1.0, p.max_abs_coeff());
    double m = std::min(p(lo), p(hi));
    constexpr int kSamples = 64;
    for (int i = 1; i < kSamples; ++i)
      m = std::min(m, p(lo + (hi - lo) * i / kSamples));
    for (double r : RealRoots(p.derivative(), lo, hi)) m = std::min(m, p(r));
    if (m < -tol)
      throw ValidationError("piecewise_poly cell " + std::to_string(j) +
                            " takes negative values");
  }

  std::vector<double> breaks_;
  std::vector<Polynomial> cells_;
};

using DensityComponent = std::variant<Gaussian, PiecewisePoly>;

// One class-conditional density: a sum of components.
class ClassDensity {
 public:
  ClassDensity() = default;
  explicit ClassDensity(std::vector<DensityComponent> components)
      : components_(std::move(components)) {
    for (const auto& c : components_) {
      if (const auto* g = std::get_if<Gaussian>(&c)) {
        g->Validate();
      } else {
        const auto& pp = std::get<PiecewisePoly>(c);
        breaks_.insert(breaks_.end(), pp.breakpoints().begin(),
                       pp.breakpoints().end());
      }
    }
    std::sort(breaks_.begin(), breaks_.end());
    breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
  }

  std::span<const DensityComponent> components() const { return components_; }
  std::span<const double> breakpoints() const { return breaks_; }

  bool has_gaussian() const {
    return std::any_of(components_.begin(), components_.end(), [](auto& c) {
      return std::holds_alternative<Gaussian>(c);
    });
  }

  double Eval(double x) const {
    double v = 0.0;
    for (const auto& c : components_)
      v += std::visit([x](const auto& d) { return d.Eval(x); }, c);
    return v;
  }

  double Limit(double x, int side) const {
    double v = 0.0;
    for (const auto& c : components_) {
      if (const auto* g = std::get_if<Gaussian>(&c))
        v += g->Eval(x);
      else
        v += std::get<PiecewisePoly>(c).Limit(x, side);
    }
    return v;
  }

  bool IsBreakpoint(double x) const {
    return std::binary_search(breaks_.begin(), breaks_.end(), x);
  }

  double Derivative(double x) const {
    if (IsBreakpoint(x)) throw BreakpointDerivative(x);
    double v = 0.0;
    for (const auto& c : components_)
      v += std::visit([x](const auto& d) { return d.Derivative(x); }, c);
    return v;
  }

  // Endpoint inclusion is irrelevant: the measure has no atoms.
  double Mass(const Interval& iv) const {
    double v = 0.0;
    for (const auto& c : components_)
      v += std::visit([&](const auto& d) { return d.Mass(iv.lo, iv.hi); }, c);
    return v;
  }

  double Mass(const IntervalSet& s) const {
    double v = 0.0;
    for (const Interval& iv : s.intervals()) v += Mass(iv);
    return v;
  }

  double TotalMass() const { return Mass(Interval::Line()); }

  // Upper bound on sup p: sum of per-component maxima.
  double SupBound() const {
    double v = 0.0;
    for (const auto& c : components_) {
      if (const auto* g = std::get_if<Gaussian>(&c)) {
        v += g->Peak();
      } else {
        const auto& pp = std::get<PiecewisePoly>(c);
        double m = 0.0;
        for (std::size_t j = 0; j < pp.cells().size(); ++j)
          m = std::max(m, pp.CellMax(j));
        v += m;
      }
    }
    return v;
  }

 private:
  std::vector<DensityComponent> components_;
  std::vector<double> breaks_;
};

enum class Label : int { k0 = 0, k1 = 1 };

// The pair (P0, P1); P = P0 + P1 must be a probability measure.
class DistributionPair {
 public:
  DistributionPair() = default;
  DistributionPair(ClassDensity class0, ClassDensity class1)
      : c0_(std::move(class0)), c1_(std::move(class1)) {
    const double total = c0_.TotalMass() + c1_.TotalMass();
    if (std::abs(total - 1.0) > kMassTolerance)
      throw ValidationError("total mass P0(R) + P1(R) must equal 1, got " +
                            std::to_string(total));
  }

  const ClassDensity& density(Label which) const {
    return which == Label::k0 ? c0_ : c1_;
  }
  const ClassDensity& class0() const { return c0_; }
  const ClassDensity& class1() const { return c1_; }

  // Sorted union of both classes' breakpoints.
  std::vector<double> breakpoints() const {
    std::vector<double> b(c0_.breakpoints().begin(), c0_.breakpoints().end());
    b.insert(b.end(), c1_.breakpoints().begin(), c1_.breakpoints().end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
  }

  bool has_gaussian() const {
    return c0_.has_gaussian() || c1_.has_gaussian();
  }

 private:
  ClassDensity c0_;
  ClassDensity c1_;
};

inline double Eval(const DistributionPair& pair, Label which, double x) {
  return pair.density(which).Eval(x);
}

inline double Derivative(const DistributionPair& pair, Label which, double x) {
  return pair.density(which).Derivative(x);
}

inline double Mass(const DistributionPair& pair, Label which,
                   const Interval& iv) {
  return pair.density(which).Mass(iv);
}

inline double Mass(const DistributionPair& pair, Label which,
                   const IntervalSet& s) {
  return pair.density(which).Mass(s);
}

inline double Eta(const DistributionPair& pair, double x) {
  const double p0 = pair.class0().Eval(x);
  const double p1 = pair.class1().Eval(x);
  if (!(p0 + p1 > 0.0))
    throw OutsideSupport("eta undefined where p0 + p1 = 0");
  return p1 / (p0 + p1);
}

// Closure of {p0 + p1 > 0}.
inline IntervalSet Support(const DistributionPair& pair) {
  if (pair.has_gaussian()) return IntervalSet::Line();
  std::vector<Interval> parts;
  for (const ClassDensity* d : {&pair.class0(), &pair.class1()}) {
    for (const auto& c : d->components()) {
      const auto& pp = std::get<PiecewisePoly>(c);
      const auto br = pp.breakpoints();
      for (std::size_t j = 0; j < pp.cells().size(); ++j)
        if (!pp.cells()[j].is_zero())
          parts.push_back(Interval::Closed(br[j], br[j + 1]));
    }
  }
  return IntervalSet(std::move(parts));
}

// Finite hull of the support, with Gaussian components truncated at
// mu +- tail_sigmas * sigma.
inline Interval EffectiveRange(const DistributionPair& pair,
                               double tail_sigmas) {
  double lo = kInf;
  double hi = -kInf;
  for (const ClassDensity* d : {&pair.class0(), &pair.class1()}) {
    for (const auto& c : d->components()) {
      if (const auto* g = std::get_if<Gaussian>(&c)) {
        lo = std::min(lo, g->mu - tail_sigmas * g->sigma);
        hi = std::max(hi, g->mu + tail_sigmas * g->sigma);
      }
    }
  }
  const IntervalSet supp = Support(pair);
  if (!pair.has_gaussian() && !supp.empty()) {
    lo = std::min(lo, supp.intervals().front().lo);
    hi = std::max(hi, supp.intervals().back().hi);
  }
  if (!(lo < hi)) return Interval::Closed(0.0, 0.0);
  return Interval::Closed(lo, hi);
}

// True when, on some positive-length cell inside the support, one class
// density vanishes identically (so eta takes the value 0 or 1 on positive
// mass).
inline bool EtaZeroOneOnPositiveMass(const DistributionPair& pair) {
  if (pair.class0().has_gaussian() && pair.class1().has_gaussian())
    return false;
  std::vector<double> br = pair.breakpoints();
  const IntervalSet supp = Support(pair);
  if (supp.is_line() && br.empty()) return false;
  std::vector<double> cuts = br;
  if (supp.is_line()) {
    const Interval r = EffectiveRange(pair, 8.0);
    cuts.push_back(r.lo);
    cuts.push_back(r.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    const double lo = cuts[j];
    const double hi = cuts[j + 1];
    bool zero0 = true;
    bool zero1 = true;
    bool inside = false;
    constexpr int kSamples = 16;
    for (int i = 1; i < kSamples; ++i) {
      const double x = lo + (hi - lo) * i / kSamples;
      if (!supp.contains(x)) continue;
      inside = true;
      if (pair.class0().Eval(x) > 0.0) zero0 = false;
      if (pair.class1().Eval(x) > 0.0) zero1 = false;
    }
    if (inside && (zero0 || zero1)) return true;
  }
  return false;
}

}  // namespace advbayes

#endif  // ADVBAYES_DENSITY_HPP_
