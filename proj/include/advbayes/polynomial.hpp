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

#ifndef ADVBAYES_POLYNOMIAL_HPP_
#define ADVBAYES_POLYNOMIAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace advbayes {

// Dense real polynomial c0 + c1 x + ... + cn x^n.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    Trim();
  }

  std::span<const double> coeffs() const { return c_; }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  double operator()(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
  }

  // Antiderivative with zero constant term.
  Polynomial antiderivative() const {
    std::vector<double> a(c_.size() + 1, 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k)
      a[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Polynomial(std::move(a));
  }

  double integrate(double lo, double hi) const {
    const Polynomial f = antiderivative();
    return f(hi) - f(lo);
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
    return Polynomial(std::move(r));
  }

 private:
  void Trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
  }

  std::vector<double> c_;
};

namespace detail {

// Remainder of a / b (b non-zero), dropping leading terms below `tol`.
inline Polynomial PolyRemainder(const Polynomial& a, const Polynomial& b,
                                double tol) {
  std::vector<double> r(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const int db = b.degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    const double q = r[k] / bc[db];
    for (int j = 0; j <= db; ++j) r[k - db + j] -= q * bc[j];
    r[k] = 0.0;
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)));
  for (double& v : r)
    if (std::abs(v) < tol) v = 0.0;
  return Polynomial(std::move(r));
}

inline int SignVariations(std::span<const Polynomial> chain, double x) {
  int variations = 0;
  int prev = 0;
  for (const Polynomial& p : chain) {
    const double v = p(x);
    const int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

inline double BisectSignChange(const Polynomial& p, double lo, double hi,
                               double tol) {
  double flo = p(lo);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = p(mid);
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

// Sturm chain of p: p, p', -rem(p_{k-1}, p_k), ...
inline std::vector<Polynomial> SturmChain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Polynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  const double tol = 1e-14 * std::max(1.0, p.max_abs_coeff());
  while (true) {
    Polynomial r =
        detail::PolyRemainder(chain[chain.size() - 2], chain.back(), tol);
    if (r.is_zero()) break;
    std::vector<double> neg(r.coeffs().begin(), r.coeffs().end());
    for (double& v : neg) v = -v;
    chain.emplace_back(std::move(neg));
  }
  return chain;
}

// Number of distinct real roots of p in (lo, hi].
inline int CountRoots(std::span<const Polynomial> chain, double lo, double hi) {
  return detail::SignVariations(chain, lo) - detail::SignVariations(chain, hi);
}

// Distinct real roots of a non-zero polynomial inside the open interval
// (lo, hi), isolated by Sturm bracketing and refined to `tol`.
inline std::vector<double> RealRoots(const Polynomial& p, double lo, double hi,
                                     double tol = 1e-13) {
  std::vector<double> roots;
  if (p.is_zero() || p.degree() == 0 || !(lo < hi)) return roots;
  const std::vector<Polynomial> chain = SturmChain(p);
  const Polynomial dp = p.derivative();

  std::vector<std::pair<double, double>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int n = CountRoots(chain, a, b);
    if (n <= 0) continue;
    if (n == 1 || b - a <= tol) {
      double r;
      if (p(b) == 0.0) {
        r = b;
      } else if ((p(a) > 0) != (p(b) > 0) && p(a) != 0.0) {
        r = detail::BisectSignChange(p, a, b, tol);
      } else {
        // Even multiplicity: the derivative changes sign at the root.
        r = (dp(a) > 0) != (dp(b) > 0)
                ? detail::BisectSignChange(dp, a, b, tol)
                : 0.5 * (a + b);
      }
      if (r > lo && r < hi) roots.push_back(r);
      continue;
    }
    const double mid = 0.5 * (a + b);
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace advbayes

#endif  // ADVBAYES_POLYNOMIAL_HPP_
