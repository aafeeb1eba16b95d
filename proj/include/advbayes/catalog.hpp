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

// Built-in distributions with known adversarial Bayes classifiers, and the
// closed forms used to check them.

#ifndef ADVBAYES_CATALOG_HPP_
#define ADVBAYES_CATALOG_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "advbayes/density.hpp"
#include "advbayes/errors.hpp"

namespace advbayes::catalog {

inline DistributionPair GaussiansEqualVariances(double mu0 = 0.0,
                                                double mu1 = 2.0,
                                                double sigma = 1.0,
                                                double lambda = 0.5) {
  return {ClassDensity({Gaussian{1.0 - lambda, mu0, sigma}}),
          ClassDensity({Gaussian{lambda, mu1, sigma}})};
}

inline DistributionPair GaussiansEqualMeans(double lambda = 0.5,
                                            double sigma0 = 2.0,
                                            double sigma1 = 1.0,
                                            double mu = 0.0) {
  return {ClassDensity({Gaussian{1.0 - lambda, mu, sigma0}}),
          ClassDensity({Gaussian{lambda, mu, sigma1}})};
}

// p0 = (1 + x) / 6, p1 = (1 - x) / 3 on [-1, 1].
inline DistributionPair NonUniquenessSingle() {
  return {ClassDensity({PiecewisePoly({-1.0, 1.0}, {{1.0 / 6, 1.0 / 6}})}),
          ClassDensity({PiecewisePoly({-1.0, 1.0}, {{1.0 / 3, -1.0 / 3}})})};
}

// eta = 1/4 on [-1, 0] and 3/4 on (0, 1], uniform marginal.
inline DistributionPair NonUniquenessAll() {
  return {ClassDensity({PiecewisePoly({-1.0, 0.0, 1.0},
                                      {{3.0 / 8}, {1.0 / 8}})}),
          ClassDensity({PiecewisePoly({-1.0, 0.0, 1.0},
                                      {{1.0 / 8}, {3.0 / 8}})})};
}

// p0 = 1/5 on |x| <= 1/4, p1 = 3/5 on 1/4 < |x| <= 1.
inline DistributionPair Degenerate() {
  return {ClassDensity({PiecewisePoly({-0.25, 0.25}, {{0.2}})}),
          ClassDensity({PiecewisePoly({-1.0, -0.25, 0.25, 1.0},
                                      {{0.6}, {0.0}, {0.6}})})};
}

// Support [-3s,-2s] U [-s,s] U [2s,3s]; meant to be solved at e = s.
inline DistributionPair DegEtaCounterexample(double s) {
  if (!(s > 0.0)) throw ValidationError("scale must be > 0");
  const std::vector<double> br{-3 * s, -2 * s, -s, s, 2 * s, 3 * s};
  const auto rows = [](double outer, double inner) {
    return std::vector<std::vector<double>>{
        {outer}, {0.0}, {inner}, {0.0}, {outer}};
  };
  return {ClassDensity({PiecewisePoly(br, rows(1 / (9 * s), 1 / (18 * s)))}),
          ClassDensity({PiecewisePoly(br, rows(1 / (4 * s), 1 / (12 * s)))})};
}

inline const std::vector<std::string>& Names() {
  static const std::vector<std::string> names{
      "gaussians_equal_variances", "gaussians_equal_means",
      "non_uniqueness_single",     "non_uniqueness_all",
      "degenerate",                "deg_eta_0_1_counterexample"};
  return names;
}

// `eps` only matters for the scale-dependent counterexample.
inline DistributionPair ByName(const std::string& name, double eps = 0.1) {
  if (name == "gaussians_equal_variances") return GaussiansEqualVariances();
  if (name == "gaussians_equal_means") return GaussiansEqualMeans();
  if (name == "non_uniqueness_single") return NonUniquenessSingle();
  if (name == "non_uniqueness_all") return NonUniquenessAll();
  if (name == "degenerate") return Degenerate();
  if (name == "deg_eta_0_1_counterexample")
    return DegEtaCounterexample(eps > 0.0 ? eps : 0.1);
  throw UnknownExample("unknown example '" + name + "'");
}

// Right endpoint b(e) of the equal-means classifier (-b, b): the larger
// root of (b - e)^2 / s1^2 - (b + e)^2 / s0^2 = -2k,
// k = ln((1 - lambda) s1 / (lambda s0)). `sign` = -1 gives the other root.
inline double EqualMeansB(double eps, double lambda = 0.5,
                          double sigma0 = 2.0, double sigma1 = 1.0,
                          double sign = 1.0) {
  const double k = std::log((1 - lambda) * sigma1 / (lambda * sigma0));
  const double i0 = 1 / (sigma0 * sigma0);
  const double i1 = 1 / (sigma1 * sigma1);
  const double disc = 4 * eps * eps * i0 * i1 - 2 * (i1 - i0) * k;
  return (eps * (i1 + i0) + sign * std::sqrt(disc)) / (i1 - i0);
}

// The same expression with the discriminant term 4 e^2 / (s0^4 s1^4), as
// printed in the literature.
inline double EqualMeansBLiterature(double eps, double lambda = 0.5,
                                    double sigma0 = 2.0, double sigma1 = 1.0) {
  const double k = std::log((1 - lambda) * sigma1 / (lambda * sigma0));
  const double i0 = 1 / (sigma0 * sigma0);
  const double i1 = 1 / (sigma1 * sigma1);
  const double disc = 4 * eps * eps * i0 * i0 * i1 * i1 - 2 * (i1 - i0) * k;
  return (eps * (i1 + i0) + std::sqrt(disc)) / (i1 - i0);
}

struct NonUniquenessSingleValues {
  double a, b, risk, threshold;
};

inline NonUniquenessSingleValues NonUniquenessSingleComputed(double eps) {
  return {(1 - eps) / 3, (1 + eps) / 3, 2 * (1 + eps) * (1 + eps) / 9,
          std::sqrt(1.5) - 1};
}

inline NonUniquenessSingleValues NonUniquenessSingleLiterature(double eps) {
  return {2.0 / 3 * (1 - eps), 2.0 / 3 + eps,
          (1 + eps) * (1 + eps) / 4, 2 / std::sqrt(3.0) - 1};
}

inline constexpr double kDegEtaLiteratureRiskLine = 11.0 / 36;
inline constexpr double kDegEtaLiteratureRiskEmpty = 20.0 / 36;

}  // namespace advbayes::catalog

#endif  // ADVBAYES_CATALOG_HPP_
