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

// Exact set algebra over finite unions of extended-real intervals.
//
// Endpoints are plain doubles compared with exact equality; no tolerance is
// applied anywhere except in `snap`. Endpoint-inclusion flags are tracked so
// that, e.g., contracting a closed interval of length exactly 2e leaves its
// midpoint while contracting the open one leaves nothing.

#ifndef ADVBAYES_INTERVALS_HPP_
#define ADVBAYES_INTERVALS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "advbayes/errors.hpp"

namespace advbayes {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval Open(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval Closed(double lo, double hi) {
    return {lo, hi, std::isfinite(lo), std::isfinite(hi)};
  }
  static Interval LeftClosed(double lo, double hi) {
    return {lo, hi, std::isfinite(lo), false};
  }
  static Interval RightClosed(double lo, double hi) {
    return {lo, hi, false, std::isfinite(hi)};
  }
  static Interval Point(double x) { return {x, x, true, true}; }
  static Interval Line() { return Open(-kInf, kInf); }

  // Non-empty and well-formed (infinite endpoints must be open).
  bool valid() const {
    if (std::isnan(lo) || std::isnan(hi)) return false;
    if ((std::isinf(lo) && lo_closed) || (std::isinf(hi) && hi_closed))
      return false;
    if (lo < hi) return true;
    return lo == hi && lo_closed && hi_closed && std::isfinite(lo);
  }
  bool is_point() const { return lo == hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
  double length() const { return hi - lo; }

  bool contains(double x) const {
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Canonical disjoint, non-adjacent, sorted union of intervals.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts) : parts_(std::move(parts)) {
    Canonicalize();
  }
  IntervalSet(std::initializer_list<Interval> parts)
      : IntervalSet(std::vector<Interval>(parts)) {}

  static IntervalSet Empty() { return {}; }
  static IntervalSet Line() { return IntervalSet({Interval::Line()}); }
  // Open set with the given finite boundary points, alternating membership;
  // `starts_inside` says whether (-inf, t_0) belongs to the set.
  static IntervalSet FromBoundary(std::span<const double> boundary,
                                  bool starts_inside) {
    std::vector<Interval> parts;
    bool inside = starts_inside;
    double prev = -kInf;
    for (double t : boundary) {
      if (inside) parts.push_back(Interval::Open(prev, t));
      inside = !inside;
      prev = t;
    }
    if (inside) parts.push_back(Interval::Open(prev, kInf));
    return IntervalSet(std::move(parts));
  }

  std::span<const Interval> intervals() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  bool is_line() const {
    return parts_.size() == 1 && parts_[0].lo == -kInf && parts_[0].hi == kInf;
  }
  const Interval& operator[](std::size_t i) const { return parts_[i]; }

  bool contains(double x) const {
    return std::any_of(parts_.begin(), parts_.end(),
                       [x](const Interval& iv) { return iv.contains(x); });
  }

  // Finite boundary points in increasing order.
  std::vector<double> boundary_points() const {
    std::vector<double> pts;
    for (const Interval& iv : parts_) {
      if (std::isfinite(iv.lo)) pts.push_back(iv.lo);
      if (std::isfinite(iv.hi) && iv.hi != iv.lo) pts.push_back(iv.hi);
    }
    return pts;
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  void Canonicalize() {
    std::erase_if(parts_, [](const Interval& iv) { return !iv.valid(); });
    std::sort(parts_.begin(), parts_.end(),
              [](const Interval& a, const Interval& b) {
                if (a.lo != b.lo) return a.lo < b.lo;
                return a.lo_closed && !b.lo_closed;
              });
    std::vector<Interval> out;
    out.reserve(parts_.size());
    for (const Interval& iv : parts_) {
      if (!out.empty()) {
        Interval& cur = out.back();
        const bool touches =
            iv.lo < cur.hi ||
            (iv.lo == cur.hi && (cur.hi_closed || iv.lo_closed));
        if (touches) {
          if (iv.hi > cur.hi) {
            cur.hi = iv.hi;
            cur.hi_closed = iv.hi_closed;
          } else if (iv.hi == cur.hi) {
            cur.hi_closed = cur.hi_closed || iv.hi_closed;
          }
          continue;
        }
      }
      out.push_back(iv);
    }
    parts_ = std::move(out);
  }

  std::vector<Interval> parts_;
};

inline IntervalSet Complement(const IntervalSet& a) {
  std::vector<Interval> out;
  double prev = -kInf;
  bool prev_closed = true;  // so that the first gap's lo is open at -inf
  bool first = true;
  for (const Interval& iv : a.intervals()) {
    if (!(first && iv.lo == -kInf)) {
      out.push_back({prev, iv.lo, first ? false : !prev_closed, !iv.lo_closed});
    }
    first = false;
    prev = iv.hi;
    prev_closed = iv.hi_closed;
  }
  if (first) return IntervalSet::Line();
  if (prev != kInf) out.push_back({prev, kInf, !prev_closed, false});
  return IntervalSet(std::move(out));
}

inline IntervalSet Union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts(a.intervals().begin(), a.intervals().end());
  parts.insert(parts.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet(std::move(parts));
}

inline IntervalSet Intersect(const IntervalSet& a, const IntervalSet& b) {
  return Complement(Union(Complement(a), Complement(b)));
}

inline IntervalSet Difference(const IntervalSet& a, const IntervalSet& b) {
  return Intersect(a, Complement(b));
}

inline IntervalSet SymDiff(const IntervalSet& a, const IntervalSet& b) {
  return Union(Difference(a, b), Difference(b, a));
}

inline bool IsSubset(const IntervalSet& a, const IntervalSet& b) {
  return Difference(a, b).empty();
}

// A^e: Minkowski sum with the closed ball of radius e. Inclusion flags are
// preserved since an open set plus a ball stays open.
inline IntervalSet Expand(const IntervalSet& a, double eps) {
  if (eps < 0) throw ValidationError("expand: radius must be >= 0");
  if (eps == 0) return a;
  std::vector<Interval> parts;
  parts.reserve(a.size());
  for (Interval iv : a.intervals()) {
    iv.lo -= eps;
    iv.hi += eps;
    parts.push_back(iv);
  }
  return IntervalSet(std::move(parts));
}

// A^{-e}: points whose closed e-ball lies inside A.
inline IntervalSet Contract(const IntervalSet& a, double eps) {
  return Complement(Expand(Complement(a), eps));
}

inline std::size_t Components(const IntervalSet& a) { return a.size(); }

inline double LebesgueLength(const IntervalSet& a) {
  double total = 0.0;
  for (const Interval& iv : a.intervals()) total += iv.length();
  return total;
}

// Every component of A and of its complement is longer than 2e.
inline bool IsRegular(const IntervalSet& a, double eps) {
  const auto long_enough = [eps](const Interval& iv) {
    return !iv.bounded() || iv.length() > 2 * eps;
  };
  const IntervalSet c = Complement(a);
  return std::all_of(a.intervals().begin(), a.intervals().end(), long_enough) &&
         std::all_of(c.intervals().begin(), c.intervals().end(), long_enough);
}

inline IntervalSet Closure(const IntervalSet& a) {
  std::vector<Interval> parts;
  for (const Interval& iv : a.intervals())
    parts.push_back(Interval::Closed(iv.lo, iv.hi));
  return IntervalSet(std::move(parts));
}

inline IntervalSet Interior(const IntervalSet& a) {
  std::vector<Interval> parts;
  for (const Interval& iv : a.intervals())
    if (!iv.is_point()) parts.push_back(Interval::Open(iv.lo, iv.hi));
  return IntervalSet(std::move(parts));
}

inline IntervalSet BoundarySet(const IntervalSet& a) {
  std::vector<Interval> pts;
  for (double x : a.boundary_points()) pts.push_back(Interval::Point(x));
  return IntervalSet(std::move(pts));
}

// Merges neighbours separated by gaps of length <= delta and drops
// components shorter than delta. Absorbs floating-point near-adjacency.
inline IntervalSet Snap(const IntervalSet& a, double delta = 1e-12) {
  std::vector<Interval> out;
  for (const Interval& iv : a.intervals()) {
    if (!out.empty() && iv.lo - out.back().hi <= delta) {
      out.back().hi = iv.hi;
      out.back().hi_closed = iv.hi_closed;
      continue;
    }
    out.push_back(iv);
  }
  std::erase_if(out, [delta](const Interval& iv) {
    return iv.bounded() && iv.length() < delta;
  });
  return IntervalSet(std::move(out));
}

inline std::string ToString(const Interval& iv) {
  const auto num = [](double v) {
    if (v == kInf) return std::string("inf");
    if (v == -kInf) return std::string("-inf");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
  };
  if (iv.is_point()) return "{" + num(iv.lo) + "}";
  return std::string(iv.lo_closed ? "[" : "(") + num(iv.lo) + ", " +
         num(iv.hi) + (iv.hi_closed ? "]" : ")");
}

inline std::string ToString(const IntervalSet& a) {
  if (a.empty()) return "{}";
  std::string s;
  for (const Interval& iv : a.intervals()) {
    if (!s.empty()) s += " U ";
    s += ToString(iv);
  }
  return s;
}

}  // namespace advbayes

#endif  // ADVBAYES_INTERVALS_HPP_
