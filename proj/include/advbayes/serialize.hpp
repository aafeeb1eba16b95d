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

// JSON and CSV output. Objects are written with sorted keys and every
// floating-point number with 17 significant digits, so equal inputs give
// byte-identical reports.

#ifndef ADVBAYES_SERIALIZE_HPP_
#define ADVBAYES_SERIALIZE_HPP_

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "advbayes/certify.hpp"
#include "advbayes/conditions.hpp"
#include "advbayes/intervals.hpp"
#include "advbayes/risk.hpp"
#include "advbayes/solver.hpp"

namespace advbayes {

using Json = nlohmann::json;

inline std::string FormatDouble(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (v == kInf) return "\"inf\"";
  if (v == -kInf) return "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline void DumpTo(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        DumpTo(it.value(), out, indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        DumpTo(v, out, indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += FormatDouble(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

inline Json Num(double v) {
  if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
  if (std::isnan(v)) return Json("nan");
  return Json(v);
}

}  // namespace detail

inline std::string Dump(const Json& j, int indent = 2) {
  std::string out;
  detail::DumpTo(j, out, indent, 0);
  return out;
}

inline Json ToJson(const Interval& iv) {
  return Json::array(
      {detail::Num(iv.lo), detail::Num(iv.hi), iv.lo_closed, iv.hi_closed});
}

inline Json ToJson(const IntervalSet& s) {
  Json arr = Json::array();
  for (const Interval& iv : s.intervals()) arr.push_back(ToJson(iv));
  return arr;
}

inline Json ToJson(const RiskBreakdown& r) {
  return {{"total", r.total},
          {"fn_mass", r.false_negative_mass},
          {"fp_mass", r.false_positive_mass},
          {"epsilon", r.epsilon}};
}

inline Json ToJson(const CandidatePoint& c) {
  Json j{{"kind", ToString(c.kind)},
         {"origin", ToString(c.origin)},
         {"residual", c.residual},
         {"second_order", ToString(c.second_order)}};
  if (c.plateau) j["plateau"] = ToJson(*c.plateau);
  else j["location"] = c.location;
  return j;
}

inline Json ToJson(const CandidateClassifier& c) {
  return {{"set", ToJson(c.set)},
          {"risk", ToJson(c.risk)},
          {"regular", c.regular},
          {"second_order_clean", c.second_order_clean}};
}

inline Json ToJson(const DegenerateReport& d) {
  return {{"small_components", ToJson(d.small_components)},
          {"maximal_degenerate", ToJson(d.maximal_degenerate)},
          {"assumptions_met", d.assumptions_met},
          {"probed_degenerate", ToJson(d.probed)}};
}

inline Json ToJson(const EquivalenceClass& c) {
  Json members = Json::array();
  for (const auto& m : c.members) members.push_back(ToJson(m.set));
  return {{"representative", ToJson(c.representative)},
          {"members", members},
          {"degenerate_core", ToJson(c.degenerate_core)},
          {"degenerate", ToJson(c.degenerate)},
          {"risk", c.risk}};
}

inline Json ToJson(const SolveReport& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates) cands.push_back(ToJson(c));
  Json mins = Json::array();
  for (const auto& c : r.minimizers) mins.push_back(ToJson(c.set));
  Json classes = Json::array();
  for (const auto& c : r.classes) classes.push_back(ToJson(c));
  Json pts = Json::array();
  for (const auto* list : {&r.a_points, &r.b_points})
    for (const auto& c : *list) pts.push_back(ToJson(c));
  Json pruned = Json::array();
  for (const auto& c : r.pruned_points) pruned.push_back(ToJson(c));
  Json plateaus = Json::array();
  for (const auto& p : r.plateau_checks) {
    Json probes = Json::array();
    for (std::size_t i = 0; i < p.probes.size(); ++i)
      probes.push_back({{"point", p.probes[i]}, {"risk", p.risks[i]}});
    plateaus.push_back({{"kind", ToString(p.kind)},
                        {"plateau", ToJson(p.plateau)},
                        {"probes", probes},
                        {"family_optimal", p.family_optimal}});
  }
  Json window = Json();
  if (!r.window.empty) window = ToJson(r.window.window);
  return {{"epsilon", r.epsilon},
          {"window", window},
          {"support_is_interval", r.window.support_is_interval},
          {"candidate_points", pts},
          {"pruned_points", pruned},
          {"candidates", cands},
          {"minimizers", mins},
          {"classes", classes},
          {"plateau_checks", plateaus},
          {"unique_up_to_degeneracy", r.unique_up_to_degeneracy},
          {"closure_holds", r.closure_holds},
          {"p0_expansion_constant", r.p0_expansion_constant},
          {"min_risk", r.min_risk},
          {"truncated", r.truncated},
          {"warnings", r.warnings}};
}

inline Json ToJson(const DualCertificate& c, const AtomList& a0,
                   const AtomList& a1, bool full_matching) {
  double max_dist = 0.0;
  for (const auto& m : c.matching)
    max_dist = std::max(
        max_dist, std::abs(a0.positions[m.index0] - a1.positions[m.index1]));
  Json j{{"dual_value", c.dual_value},
         {"epsilon", c.epsilon},
         {"grid_h", c.grid_h},
         {"radius", c.radius},
         {"matching_summary",
          {{"pairs", c.matching.size()},
           {"max_distance", max_dist},
           {"atoms0", a0.size()},
           {"atoms1", a1.size()}}}};
  if (full_matching) {
    Json pairs = Json::array();
    for (const auto& m : c.matching)
      pairs.push_back({{"index0", m.index0},
                       {"index1", m.index1},
                       {"position0", a0.positions[m.index0]},
                       {"position1", a1.positions[m.index1]},
                       {"mass", m.mass}});
    j["matching"] = pairs;
  }
  return j;
}

inline Json ToJson(const MonotonicityResult& m) {
  return {{"holds", m.holds}, {"violations", m.violations}};
}

// Finite boundary points of a set joined by ';', with a leading '+' when
// the set contains (-inf, t_1).
inline std::string EndpointString(const IntervalSet& s) {
  if (s.empty()) return "empty";
  if (s.is_line()) return "R";
  std::string out = s[0].lo == -kInf ? "+" : "";
  bool first = true;
  for (double x : s.boundary_points()) {
    if (!first) out += ";";
    first = false;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out += buf;
  }
  return out;
}

inline std::string SolveCsvHeader() {
  return "epsilon,min_risk,n_classes,unique,representatives";
}

inline std::string SolveCsvRow(const SolveReport& r) {
  std::string reps;
  for (const auto& c : r.classes) {
    if (!reps.empty()) reps += "|";
    reps += EndpointString(c.representative);
  }
  return FormatDouble(r.epsilon) + "," + FormatDouble(r.min_risk) + "," +
         std::to_string(r.classes.size()) + "," +
         (r.unique_up_to_degeneracy ? "1" : "0") + "," + reps;
}

}  // namespace advbayes

#endif  // ADVBAYES_SERIALIZE_HPP_
