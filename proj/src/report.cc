// Copyright 2026 The folimits Authors
//
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


#include "folimits/report.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace folimits {

std::string FormatSig(double value) {
  if (value == 0.0) return "0";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.*g", kSignificantDigits, value);
  return buffer;
}

double RoundSig(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  return std::strtod(FormatSig(value).c_str(), nullptr);
}

Json Number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return RoundSig(value);
}

Json RationalJson(const Rational& value) {
  return {{"value", ToString(value)}, {"approx", Number(ToDouble(value))}};
}

Json ModelJson(const ModelParams& model) {
  Json j = {{"kind", model.is_graph() ? "graph" : "hyper"},
            {"d", model.uniformity()}};
  j["c"] = Number(model.c());
  j["x"] = Number(model.x());
  return j;
}

Json ShapeJson(const UnicycleShape& shape) {
  return {{"code", shape.code},
          {"size", shape.size},
          {"cycle_length", shape.cycle_length},
          {"aut", ToString(shape.aut)},
          {"weighted_inverse_aut", ToString(shape.WeightedInverseAut())}};
}

Json ShapeJson(const FragmentShape& shape) {
  Json components = Json::array();
  for (const auto& c : shape.components) components.push_back(c.code);
  return {{"code", shape.code},
          {"size", shape.size},
          {"aut", ToString(shape.aut)},
          {"weighted_inverse_aut", ToString(shape.WeightedInverseAut())},
          {"components", components}};
}

Json IntervalsJson(const std::vector<Interval>& intervals) {
  Json out = Json::array();
  for (const auto& iv : intervals) {
    out.push_back(Json::array({Number(iv.lo), Number(iv.hi)}));
  }
  return out;
}

Json ToJson(const C0Result& result) {
  return {{"d", result.uniformity},
          {"c0", Number(result.c0)},
          {"ratio", Number(result.ratio)},
          {"residual", Number(result.residual)},
          {"iterations", result.iterations}};
}

Json ToJson(const GapReport& report) {
  Json j;
  j["model"] = ModelJson(report.model);
  j["intervals"] = IntervalsJson(report.intervals.intervals);
  j["interval_count"] = report.intervals.count();
  j["gaps"] = IntervalsJson(report.gaps);
  j["certified"] = report.intervals.certified;
  j["uncertainty"] = Number(report.intervals.uncertainty);
  j["below_c0"] = report.below_c0;
  if (report.theoretical_gap) {
    j["theoretical_gap"] = Json::array(
        {Number(report.theoretical_gap->lo), Number(report.theoretical_gap->hi)});
  } else {
    j["theoretical_gap"] = nullptr;
  }
  j["consistent"] = report.consistent;
  j["k_star"] = report.k_star;
  j["max_size_reached"] = report.max_size_reached;
  j["head_size"] = report.head_size;
  j["violations"] = report.violations;
  return j;
}

Json ToJson(const SweepRow& row) {
  return {{"c", Number(row.c)},
          {"interval_count", row.interval_count},
          {"certified", row.certified},
          {"gaps", IntervalsJson(row.gaps)},
          {"k_star", row.k_star},
          {"max_size_reached", row.max_size_reached},
          {"uncertainty", Number(row.uncertainty)}};
}

Json ToJson(const ApproxResult& result) {
  return {{"k", result.k},
          {"a", result.a},
          {"mu", Number(result.mu)},
          {"achieved", Number(result.achieved)},
          {"error", Number(result.error)},
          {"certified", result.certified}};
}

Json ToJson(const FamilyCheck& check) {
  return {{"family", FamilyName(check.family)},
          {"d", check.uniformity},
          {"k", check.k},
          {"sum", ToString(check.sum)},
          {"expected", ToString(check.expected)},
          {"members", check.member_codes.size()},
          {"holds", check.holds}};
}

Json ToJson(const InverseAutBoundCheck& check) {
  return {{"k", check.k},
          {"sum", ToString(check.sum)},
          {"bound", ToString(check.bound)},
          {"holds", check.holds}};
}

Json ToJson(const AutBoundReport& report) {
  return {{"d", report.uniformity},
          {"max_size", report.max_size},
          {"shapes_checked", report.shapes_checked},
          {"max_ratio", ToString(report.max_ratio)},
          {"argmax_code", report.argmax_code},
          {"bound", ToString(report.bound)},
          {"ratio_bound_holds", report.ratio_bound_holds},
          {"free_vertex_bound_holds", report.free_vertex_bound_holds},
          {"excess_holds", report.excess_holds}};
}

Json ToJson(const SimResult& result) {
  Json j;
  j["model"] = ModelJson(result.config.model);
  j["n"] = result.config.n;
  j["trials"] = result.trials;
  j["seed"] = result.config.master_seed;
  j["mean_edges"] = Number(result.mean_edges);
  j["acyclic_fraction"] = Number(result.acyclic_fraction);
  j["acyclic_expected"] =
      result.acyclic_expected ? Number(*result.acyclic_expected) : Json();
  j["acyclic_z"] = Number(result.acyclic_z);
  j["complex_incidence"] = Number(result.complex_incidence);
  j["mean_fragment_size"] = Number(result.mean_fragment_size);
  j["fragment_size_standard_error"] =
      Number(result.fragment_size_standard_error);
  Json cycles = Json::array();
  for (const auto& c : result.cycles) {
    cycles.push_back({{"length", c.length},
                      {"lambda", Number(c.lambda)},
                      {"mean", Number(c.mean)},
                      {"variance", Number(c.variance)},
                      {"standard_error", Number(c.standard_error)},
                      {"z", Number(c.z)},
                      {"tv_distance", Number(c.tv_distance)},
                      {"histogram", c.histogram}});
  }
  j["cycles"] = cycles;
  Json covariances = Json::array();
  for (const auto& c : result.covariances) {
    covariances.push_back({{"lengths", {c.length_a, c.length_b}},
                           {"covariance", Number(c.covariance)},
                           {"standard_error", Number(c.standard_error)},
                           {"z", Number(c.z)}});
  }
  j["covariances"] = covariances;
  Json frequencies = Json::object();
  for (const auto& [code, count] : result.fragment_frequencies) {
    frequencies[code] = count;
  }
  j["fragment_frequencies"] = frequencies;
  const auto& chi = result.chi_square;
  Json expected = Json::array();
  for (double e : chi.expected) expected.push_back(Number(e));
  j["chi_square"] = {{"valid", chi.valid},
                     {"note", chi.note},
                     {"statistic", Number(chi.statistic)},
                     {"degrees_of_freedom", chi.degrees_of_freedom},
                     {"p_value", Number(chi.p_value)},
                     {"categories", chi.categories},
                     {"observed", chi.observed},
                     {"expected", expected}};
  return j;
}

}  // namespace folimits
