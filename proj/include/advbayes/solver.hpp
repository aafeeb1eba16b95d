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

#ifndef ADVBAYES_SOLVER_HPP_
#define ADVBAYES_SOLVER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "advbayes/conditions.hpp"
#include "advbayes/density.hpp"
#include "advbayes/errors.hpp"
#include "advbayes/intervals.hpp"
#include "advbayes/risk.hpp"

namespace advbayes {

inline constexpr std::size_t kMaxEnumerated = 4096;

struct SolveOptions {
  int grid_n = 2048;
  bool keep_all = false;
};

struct CandidateClassifier {
  IntervalSet set;
  RiskBreakdown risk;
  bool regular = true;
  bool second_order_clean = true;
};

struct DegenerateReport {
  IntervalSet small_components;
  IntervalSet maximal_degenerate;
  bool assumptions_met = true;
  // Intervals between consecutive candidate points found degenerate by
  // flipping them in the representative; filled only when the assumptions
  // fail.
  IntervalSet probed;
};

struct EquivalenceClass {
  IntervalSet representative;
  std::vector<CandidateClassifier> members;
  IntervalSet degenerate_core;
  DegenerateReport degenerate;
  double risk = 0.0;
};

// A plateau endpoint moved to interior points of its plateau, with the
// resulting risks.
struct PlateauCheck {
  EndpointKind kind = EndpointKind::kA;
  Interval plateau;
  std::vector<double> probes;
  std::vector<double> risks;
  bool family_optimal = false;
};

struct SolveReport {
  double epsilon = 0.0;
  ScanWindow window;
  std::vector<CandidatePoint> a_points;
  std::vector<CandidatePoint> b_points;
  std::vector<CandidatePoint> pruned_points;
  std::vector<CandidateClassifier> candidates;
  std::vector<CandidateClassifier> minimizers;
  std::vector<EquivalenceClass> classes;
  std::vector<PlateauCheck> plateau_checks;
  bool unique_up_to_degeneracy = false;
  bool closure_holds = true;
  bool p0_expansion_constant = true;
  double min_risk = 0.0;
  bool truncated = false;
  std::vector<std::string> warnings;
};

struct Enumeration {
  std::vector<IntervalSet> sets;
  bool truncated = false;
};

namespace detail {

struct TaggedPoint {
  double x;
  EndpointKind kind;
};

inline bool LexLess(const IntervalSet& a, const IntervalSet& b) {
  const auto pa = a.boundary_points();
  const auto pb = b.boundary_points();
  if (pa != pb) return pa < pb;
  const bool sa = !a.empty() && a[0].lo == -kInf;
  const bool sb = !b.empty() && b[0].lo == -kInf;
  return sa < sb;
}

// Kind of each boundary point of a set built by IntervalSet::FromBoundary.
inline std::vector<EndpointKind> BoundaryKinds(const IntervalSet& s) {
  std::vector<EndpointKind> out;
  for (const Interval& iv : s.intervals()) {
    if (std::isfinite(iv.lo)) out.push_back(EndpointKind::kA);
    if (std::isfinite(iv.hi)) out.push_back(EndpointKind::kB);
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Join(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Every open set (a_1, b_1) U ... built from alternating candidate points
// with all pieces and gaps longer than 2e, plus the empty set and R.
inline Enumeration EnumerateCandidates(const std::vector<double>& a_points,
                                       const std::vector<double>& b_points,
                                       double eps) {
  std::vector<detail::TaggedPoint> pts;
  for (double x : a_points) pts.push_back({x, EndpointKind::kA});
  for (double x : b_points) pts.push_back({x, EndpointKind::kB});
  std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
    return p.x != q.x ? p.x < q.x : p.kind < q.kind;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& p, const auto& q) {
                          return p.x == q.x && p.kind == q.kind;
                        }),
            pts.end());

  Enumeration out;
  out.sets.push_back(IntervalSet::Empty());
  out.sets.push_back(IntervalSet::Line());
  const double gap = 2.0 * eps + 1e-12;
  std::vector<double> boundary;

  // Depth-first over increasing alternating sequences.
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (point, depth)
  for (std::size_t i = pts.size(); i-- > 0;) stack.push_back({i, 0});
  std::vector<std::size_t> path;
  while (!stack.empty()) {
    if (out.sets.size() >= kMaxEnumerated) {
      out.truncated = true;
      break;
    }
    const auto [i, depth] = stack.back();
    stack.pop_back();
    path.resize(depth);
    path.push_back(i);
    boundary.clear();
    for (std::size_t k : path) boundary.push_back(pts[k].x);
    const bool starts_inside = pts[path.front()].kind == EndpointKind::kB;
    out.sets.push_back(IntervalSet::FromBoundary(boundary, starts_inside));
    for (std::size_t j = pts.size(); j-- > i + 1;) {
      if (pts[j].kind != pts[i].kind && pts[j].x - pts[i].x > gap)
        stack.push_back({j, depth + 1});
    }
  }
  std::sort(out.sets.begin(), out.sets.end(), detail::LexLess);
  out.sets.erase(std::unique(out.sets.begin(), out.sets.end()),
                 out.sets.end());
  return out;
}

inline bool AreEquivalent(const DistributionPair& pair, double eps,
                          const IntervalSet& a1, const IntervalSet& a2) {
  const double m0 =
      pair.class0().Mass(SymDiff(Expand(a1, eps), Expand(a2, eps)));
  if (m0 <= kRiskTolerance) return true;
  const double m1 = pair.class1().Mass(
      SymDiff(Expand(Complement(a1), eps), Expand(Complement(a2), eps)));
  return m1 <= kRiskTolerance;
}

inline DegenerateReport MakeDegenerateReport(const DistributionPair& pair,
                                             double eps, const IntervalSet& a) {
  DegenerateReport r;
  std::vector<Interval> small;
  for (const IntervalSet* s : {&a}) {
    for (const Interval& iv : s->intervals())
      if (iv.bounded() && iv.length() <= 2 * eps) small.push_back(iv);
  }
  const IntervalSet comp = Complement(a);
  for (const Interval& iv : comp.intervals())
    if (iv.bounded() && iv.length() <= 2 * eps) small.push_back(iv);
  r.small_components = IntervalSet(std::move(small));
  const IntervalSet supp = Support(pair);
  r.maximal_degenerate =
      Union(Closure(Complement(Expand(supp, eps))), BoundarySet(a));
  r.assumptions_met = supp.size() == 1 && !EtaZeroOneOnPositiveMass(pair);
  return r;
}

// Closed intervals between consecutive cut points whose removal from (or
// addition to) `a` leaves an equivalent set of equal risk.
inline IntervalSet ProbeDegenerate(const DistributionPair& pair, double eps,
                                   const IntervalSet& a,
                                   std::vector<double> cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const double base = AdversarialRisk(pair, a, eps).total;
  std::vector<Interval> found;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const IntervalSet piece({Interval::Closed(cuts[i], cuts[i + 1])});
    const IntervalSet flipped = SymDiff(a, piece);
    if (std::abs(AdversarialRisk(pair, flipped, eps).total - base) <=
            kRiskTolerance &&
        AreEquivalent(pair, eps, a, flipped))
      found.push_back(piece[0]);
  }
  return IntervalSet(std::move(found));
}

inline SolveReport Solve(const DistributionPair& pair, double eps,
                         const SolveOptions& opt = {}) {
  if (!(eps >= 0.0) || !std::isfinite(eps))
    throw ValidationError("epsilon must be a finite number >= 0");
  SolveReport rep;
  rep.epsilon = eps;
  try {
    FirstOrderResult fo = SolveFirstOrder(pair, eps, opt.grid_n);
    rep.window = fo.window;
    rep.truncated = fo.truncated;
    rep.warnings = fo.warnings;
    for (auto* src : {&fo.a, &fo.b}) {
      for (CandidatePoint& c : *src) {
        const bool keep = opt.keep_all || c.second_order != SecondOrder::kFail;
        if (!keep) rep.pruned_points.push_back(c);
        else if (c.kind == EndpointKind::kA) rep.a_points.push_back(c);
        else rep.b_points.push_back(c);
      }
    }
  } catch (const WindowEmpty& e) {
    rep.window = GetScanWindow(pair, eps);
    rep.warnings.push_back(std::string(e.what()) +
                           "; only the empty set and R are candidates");
  }

  std::vector<double> as;
  std::vector<double> bs;
  for (const auto& c : rep.a_points)
    for (double x : c.representatives()) as.push_back(x);
  for (const auto& c : rep.b_points)
    for (double x : c.representatives()) bs.push_back(x);
  const Enumeration en = EnumerateCandidates(as, bs, eps);
  if (en.truncated) {
    rep.truncated = true;
    rep.warnings.push_back("enumeration truncated at 4096 candidate sets");
  }

  const auto fail_at = [&](double x, EndpointKind k) {
    return std::any_of(rep.pruned_points.begin(), rep.pruned_points.end(),
                       [&](const CandidatePoint& c) {
                         return c.kind == k && c.location == x;
                       });
  };
  for (const IntervalSet& s : en.sets) {
    CandidateClassifier c;
    c.set = s;
    c.risk = AdversarialRisk(pair, s, eps);
    c.regular = IsRegular(s, eps);
    const auto pts = s.boundary_points();
    const auto kinds = detail::BoundaryKinds(s);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (fail_at(pts[i], kinds[i])) c.second_order_clean = false;
    for (const auto* list : {&rep.a_points, &rep.b_points}) {
      for (const auto& p : *list) {
        if (p.second_order != SecondOrder::kFail) continue;
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (p.kind == kinds[i] && p.location == pts[i])
            c.second_order_clean = false;
      }
    }
    rep.candidates.push_back(std::move(c));
  }

  rep.min_risk = kInf;
  for (const auto& c : rep.candidates)
    rep.min_risk = std::min(rep.min_risk, c.risk.total);
  for (const auto& c : rep.candidates)
    if (c.risk.total <= rep.min_risk + kRiskTolerance)
      rep.minimizers.push_back(c);

  const std::size_t n = rep.minimizers.size();
  detail::UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uf.Find(i) != uf.Find(j) &&
          AreEquivalent(pair, eps, rep.minimizers[i].set,
                        rep.minimizers[j].set))
        uf.Join(i, j);

  std::vector<double> cut_points;
  for (double x : as) cut_points.push_back(x);
  for (double x : bs) cut_points.push_back(x);
  if (!rep.window.empty) {
    if (std::isfinite(rep.window.window.lo))
      cut_points.push_back(rep.window.window.lo);
    if (std::isfinite(rep.window.window.hi))
      cut_points.push_back(rep.window.window.hi);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (uf.Find(i) != i) continue;
    EquivalenceClass cls;
    for (std::size_t j = 0; j < n; ++j)
      if (uf.Find(j) == i) cls.members.push_back(rep.minimizers[j]);
    const auto best = std::min_element(
        cls.members.begin(), cls.members.end(),
        [](const auto& x, const auto& y) {
          if (x.set.size() != y.set.size()) return x.set.size() < y.set.size();
          return detail::LexLess(x.set, y.set);
        });
    cls.representative = best->set;
    cls.risk = best->risk.total;
    cls.degenerate = MakeDegenerateReport(pair, eps, cls.representative);
    if (!cls.degenerate.assumptions_met)
      cls.degenerate.probed =
          ProbeDegenerate(pair, eps, cls.representative, cut_points);
    cls.degenerate_core =
        Union(cls.degenerate.maximal_degenerate, cls.degenerate.probed);
    rep.classes.push_back(std::move(cls));
  }
  rep.unique_up_to_degeneracy = rep.classes.size() == 1;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& x = rep.minimizers[i].set;
      const auto& y = rep.minimizers[j].set;
      const double ru = AdversarialRisk(pair, Union(x, y), eps).total;
      const double ri = AdversarialRisk(pair, Intersect(x, y), eps).total;
      if (ru > rep.min_risk + kRiskTolerance ||
          ri > rep.min_risk + kRiskTolerance)
        rep.closure_holds = false;
    }
  }

  if (rep.unique_up_to_degeneracy) {
    double lo = kInf;
    double hi = -kInf;
    for (const auto& m : rep.minimizers) {
      const double v = pair.class0().Mass(Expand(m.set, eps));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    rep.p0_expansion_constant = hi - lo <= kRiskTolerance;
  }

  for (const auto* list : {&rep.a_points, &rep.b_points}) {
    for (const CandidatePoint& p : *list) {
      if (!p.is_plateau() || p.plateau->lo == p.plateau->hi) continue;
      for (const auto& m : rep.minimizers) {
        std::vector<double> pts = m.set.boundary_points();
        const auto kinds = detail::BoundaryKinds(m.set);
        std::size_t idx = pts.size();
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (kinds[i] == p.kind &&
              (pts[i] == p.plateau->lo || pts[i] == p.plateau->hi))
            idx = i;
        if (idx == pts.size()) continue;
        PlateauCheck chk;
        chk.kind = p.kind;
        chk.plateau = *p.plateau;
        chk.family_optimal = true;
        const bool starts_inside = !m.set.empty() && m.set[0].lo == -kInf;
        for (double f : {0.25, 0.5, 0.75}) {
          const double t =
              p.plateau->lo + f * (p.plateau->hi - p.plateau->lo);
          std::vector<double> moved = pts;
          moved[idx] = t;
          if (!std::is_sorted(moved.begin(), moved.end())) continue;
          const IntervalSet s = IntervalSet::FromBoundary(moved, starts_inside);
          const double r = AdversarialRisk(pair, s, eps).total;
          chk.probes.push_back(t);
          chk.risks.push_back(r);
          if (std::abs(r - rep.min_risk) > kRiskTolerance)
            chk.family_optimal = false;
        }
        rep.plateau_checks.push_back(std::move(chk));
        break;
      }
    }
  }
  return rep;
}

struct MonotonicityResult {
  bool holds = true;
  std::vector<std::string> violations;
};

// Structural comparison of the classes solved at e1 < e2.
inline MonotonicityResult CheckMonotonicity(const DistributionPair& pair,
                                            const SolveReport& r1,
                                            const SolveReport& r2) {
  const IntervalSet supp = Support(pair);
  if (supp.size() != 1)
    throw AssumptionUnmet("support is not an interval");
  if (EtaZeroOneOnPositiveMass(pair))
    throw AssumptionUnmet("eta takes the value 0 or 1 on positive mass");
  if (!(r1.epsilon < r2.epsilon))
    throw ValidationError("check_monotonicity needs eps1 < eps2");

  MonotonicityResult res;
  const IntervalSet i1 = Expand(supp, r1.epsilon);
  const IntervalSet i2 = Expand(supp, r2.epsilon);
  const auto has_trivial = [](const SolveReport& r, bool line) {
    return std::any_of(r.minimizers.begin(), r.minimizers.end(),
                       [line](const CandidateClassifier& c) {
                         return line ? c.set.is_line() : c.set.empty();
                       });
  };
  const auto name = [](const IntervalSet& s) { return ToString(s); };

  if (has_trivial(r1, true) && has_trivial(r1, false)) {
    if (!has_trivial(r2, true) || !has_trivial(r2, false)) {
      res.holds = false;
      res.violations.push_back(
          "R and the empty set are optimal at eps1 but not both at eps2");
    }
    for (const auto& c : r2.classes) {
      const IntervalSet& s = c.representative;
      if (Components(Intersect(s, i2)) + Components(Difference(i2, s)) != 1) {
        res.holds = false;
        res.violations.push_back("non-trivial representative " + name(s) +
                                 " at eps2");
      }
    }
    return res;
  }

  for (const auto& c1 : r1.classes) {
    const IntervalSet& a1 = c1.representative;
    const IntervalSet in1 = Intersect(a1, i1);
    const IntervalSet out1 = Difference(i1, a1);
    for (const auto& c2 : r2.classes) {
      const IntervalSet& a2 = c2.representative;
      const IntervalSet in2 = Intersect(a2, i2);
      const IntervalSet out2 = Difference(i2, a2);
      const std::string tag = name(a1) + " vs " + name(a2);
      if (Components(in1) < Components(in2)) {
        res.holds = false;
        res.violations.push_back("comp(A cap I) increased: " + tag);
      }
      if (Components(out1) < Components(out2)) {
        res.holds = false;
        res.violations.push_back("comp(A^C cap I) increased: " + tag);
      }
      const IntervalSet gaps2 = Difference(i1, a2);
      const IntervalSet comps2 = Intersect(a2, i1);
      for (const Interval& piece : in1.intervals()) {
        for (const Interval& g : gaps2.intervals()) {
          if (IsSubset(IntervalSet({g}), IntervalSet({piece}))) {
            res.holds = false;
            res.violations.push_back("component of A1 contains a gap of A2: " +
                                     tag);
          }
        }
      }
      for (const Interval& piece : out1.intervals()) {
        for (const Interval& g : comps2.intervals()) {
          if (IsSubset(IntervalSet({g}), IntervalSet({piece}))) {
            res.holds = false;
            res.violations.push_back("gap of A1 contains a component of A2: " +
                                     tag);
          }
        }
      }
    }
  }
  return res;
}

}  // namespace advbayes

#endif  // ADVBAYES_SOLVER_HPP_
