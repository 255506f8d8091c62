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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Pass --quick to shrink the Monte Carlo runs for a smoke
// check (the criteria lines then report the reduced scale).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "folimits/canonical.h"
#include "folimits/enumerate.h"
#include "folimits/families.h"
#include "folimits/intervals.h"
#include "folimits/limits.h"
#include "folimits/montecarlo.h"
#include "oracles.h"

namespace folimits {
namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void Require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
  void Note(const std::string& text) {
    detail += (detail.empty() ? "" : "; ") + text;
  }
};

std::string Fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

EnumerationBudget Budget(int d) { return EnumerationBudget::ForUniformity(d); }

Check CriticalConstants() {
  Check c;
  const auto g = SolveC0(2);
  c.Require(g.c0 >= 0.92 && g.c0 <= 0.94, "graph c0 in [0.92, 0.94]");
  c.Require(g.residual < 1e-12, "graph residual < 1e-12");
  const auto h3 = SolveC0(3);
  c.Require(std::abs(h3.ratio - 0.898) <= 1e-3, "d=3 ratio within 0.001 of 0.898");
  for (int d : {4, 5}) {
    const auto h = SolveC0(d);
    c.Require(std::abs(h.ratio - h3.ratio) <= 1e-10,
              "ratio agreement at d=" + std::to_string(d));
    c.Require(h.residual < 1e-12, "residual at d=" + std::to_string(d));
  }
  c.Note("c0(graph)=" + Fmt("%.12g", g.c0) + " residual=" + Fmt("%.2g", g.residual) +
         " r=" + Fmt("%.12g", h3.ratio));
  return c;
}

Check EnumerationCorrectness() {
  Check c;
  std::string counts;
  for (int k = 3; k <= 7; ++k) {
    const auto shapes = EnumerateUnicycles(k);
    const auto classes = oracle::LabeledUnicyclicGraphs(k);
    c.Require(shapes.size() == classes.size(),
              "unlabeled count at size " + std::to_string(k));
    counts += (counts.empty() ? "" : ",") + std::to_string(shapes.size());
  }
  std::string labeled;
  for (int k = 3; k <= 5; ++k) {
    long total = 0;
    for (const auto& [form, cls] : oracle::LabeledUnicyclicGraphs(k)) {
      total += cls.labeled_copies;
    }
    const Rational scaled = Rational(Factorial(k)) * InverseAutSum(k);
    c.Require(scaled == Rational(total),
              "k! * inverse_aut_sum at k=" + std::to_string(k));
    labeled += (labeled.empty() ? "" : ",") + std::to_string(total);
  }
  c.Note("unlabeled [" + counts + "] labeled [" + labeled + "]");
  return c;
}

Check ExactIdentities() {
  Check c;
  int checks = 0;
  const int graph_top = Budget(2).max_size;
  for (int k = 3; k <= graph_top; ++k) {
    c.Require(CheckFamilySum(Family::kCycleWithPath, 2, k, Budget(2)).holds,
              "C family k=" + std::to_string(k));
    ++checks;
    if (k >= 4) {
      c.Require(CheckFamilySum(Family::kTriangleTwoPaths, 2, k, Budget(2)).holds,
                "T0 family k=" + std::to_string(k));
      c.Require(CheckInverseAutLowerBound(k, Budget(2)).holds,
                "inverse-aut bound k=" + std::to_string(k));
      checks += 2;
    }
  }
  for (int d : {3, 4}) {
    const int top = Budget(d).max_size;
    for (int k = 2; k <= top; ++k) {
      for (Family f : FamiliesFor(d)) {
        if (k < FamilyMinSize(f)) continue;
        c.Require(CheckFamilySum(f, d, k, Budget(d)).holds,
                  std::string(FamilyName(f)) + " d=" + std::to_string(d) +
                      " k=" + std::to_string(k));
        ++checks;
      }
    }
    const auto report = VerifyAutBound(d, top, Budget(d));
    c.Require(report.ratio_bound_holds && report.free_vertex_bound_holds &&
                  report.excess_holds,
              "aut bound d=" + std::to_string(d));
    ++checks;
    c.Note("d=" + std::to_string(d) + " max ratio " + ToString(report.max_ratio) +
           " <= " + ToString(report.bound) + " over " +
           std::to_string(report.shapes_checked) + " shapes");
  }
  c.Note(std::to_string(checks) + " exact checks");
  return c;
}

Check SeriesAgreement() {
  Check c;
  double worst = 0.0;
  int points = 0;
  for (int d : {2, 3, 4, 5}) {
    for (double x : {0.05, 0.25, 0.5, 0.75, 0.9}) {
      const auto model = ModelParams::ForUniformity(d, x * std::tgamma(d - 1));
      worst = std::max(worst, std::abs(CycleMass(model) -
                                       oracle::CycleMassSeries(x, d == 2 ? 3 : 2)));
      ++points;
    }
  }
  c.Require(points == 20 && worst < 1e-12, "series agreement within 1e-12");
  for (int d : {2, 3}) {
    const auto model = ModelParams::ForUniformity(d, 0.5);
    const int top = Budget(d).max_size;
    double sum = 0.0;
    for (const auto& shape : *ConnectedUnicycles(d, top, Budget(d))) {
      sum += ComponentLambda(shape, model);
    }
    const double gap = CycleMass(model) - sum;
    const double bound = ComponentTailBound(model, top);
    c.Require(gap >= -1e-15 && gap <= bound,
              "lambda sum within tail bound for " + model.Name());
    c.Note(model.Name() + " f-sum=" + Fmt("%.3g", gap) + " <= " + Fmt("%.3g", bound));
  }
  // Out to size 40 with the closed-form per-size weights.
  const auto model = ModelParams::Graph(0.5);
  double sum = 0.0;
  for (int k = 3; k <= 40; ++k) {
    sum += std::pow(model.s(), k) * oracle::UnicycleWeight(k, 2);
  }
  const double gap = CycleMass(model) - sum;
  const double bound = ComponentTailBound(model, 40);
  c.Require(gap >= 0.0 && gap <= bound, "size-40 truncation within tail bound");
  c.Note("graph to 40: " + Fmt("%.3g", gap) + " <= " + Fmt("%.3g", bound));
  c.Note("max series error " + Fmt("%.2g", worst));
  return c;
}

Check IntervalEngine() {
  Check c;
  const auto high = MakeGapReport(ModelParams::Graph(0.95), Budget(2));
  c.Require(high.intervals.count() == 1 && high.intervals.intervals[0].lo == 0.0 &&
                high.intervals.intervals[0].hi == 1.0 && high.intervals.certified,
            "graph c=0.95 is [0,1] certified");

  const auto model = ModelParams::Graph(0.5);
  const auto half = MakeGapReport(model, Budget(2));
  const double q = AcyclicProbability(model);
  c.Require(std::abs(q - 0.96650) <= 1e-5, "e^-f = 0.96650");
  const auto& iv = half.intervals.intervals;
  c.Require(iv.size() == 2 && iv[0].lo == 0.0 && std::abs(iv[0].hi - (1 - q)) < 1e-12 &&
                std::abs(iv[1].lo - q) < 1e-12 && iv[1].hi == 1.0 &&
                half.intervals.certified,
            "graph c=0.5 is [0,1-e^-f] u [e^-f,1] certified");

  const auto table = SharedFragmentTable(2, 10, Budget(2));
  const double delta = 1e-7;
  std::vector<double> terms;
  double mass = 0.0, rounding = 0.0;
  for (std::size_t i = 0; i < table->size(); ++i) {
    const double p = ShapeProbability(table->Shape(i), model);
    terms.push_back(p);
    mass += p;
    rounding += std::abs(p - std::round(p / delta) * delta);
  }
  const double radius = (1.0 - mass) + rounding + delta;
  const auto runs = oracle::SubsetSumRuns(terms, delta, radius);
  bool match = runs.size() == iv.size();
  for (std::size_t i = 0; match && i < runs.size(); ++i) {
    match = std::abs(runs[i].first - iv[i].lo) <= radius &&
            std::abs(runs[i].second - iv[i].hi) <= radius;
  }
  c.Require(match, "subset-sum oracle agreement");

  const auto hyper = MakeGapReport(ModelParams::Hypergraph(3, 0.95), Budget(3));
  c.Require(hyper.intervals.count() == 1 && hyper.intervals.intervals[0].lo == 0.0 &&
                hyper.intervals.intervals[0].hi == 1.0 && hyper.intervals.certified,
            "d=3 c=0.95 is [0,1] certified");
  c.Note("e^-f=" + Fmt("%.12g", q) + " oracle radius " + Fmt("%.2g", radius));
  return c;
}

Check SweepProperty() {
  Check c;
  for (int d : {2, 3}) {
    const double c0 = SolveC0(d).c0;
    const double top = d == 2 ? 0.99 : 0.98;
    const auto rows = SweepIntervals(d, 0.3, top, 25, Budget(d), 0);
    int below = 0, above = 0;
    for (const auto& row : rows) {
      if (row.c < c0) {
        ++below;
        c.Require(row.interval_count >= 2, "count >= 2 at c=" + Fmt("%.4g", row.c));
      } else {
        ++above;
        c.Require(row.interval_count == 1, "count = 1 at c=" + Fmt("%.4g", row.c));
      }
    }
    c.Note((d == 2 ? std::string("graph ") : std::string("d=3 ")) +
           std::to_string(below) + " below / " + std::to_string(above) + " above c0");
  }
  for (double cv : {0.1, 0.05}) {
    const auto report = MakeGapReport(ModelParams::Graph(cv), Budget(2));
    c.Require(report.intervals.count() >= 2, "gap below c0 at c=" + Fmt("%g", cv));
    c.Note("c=" + Fmt("%g", cv) + ": " + std::to_string(report.intervals.count()) +
           " intervals, " + (report.intervals.certified ? "certified" : "heuristic") +
           " (K*=" + std::to_string(report.k_star) + ")");
  }
  return c;
}

struct MonteCarloRuns {
  SimResult graph;
  SimResult hyper;
};

MonteCarloRuns RunMonteCarlo(bool quick) {
  SampleConfig g;
  g.model = ModelParams::Graph(0.5);
  g.n = quick ? 20000 : 100000;
  g.trials = quick ? 300 : 2000;
  g.max_cycle_len = 4;
  SampleConfig h;
  h.model = ModelParams::Hypergraph(3, 0.5);
  h.n = quick ? 2000 : 10000;
  h.trials = quick ? 300 : 2000;
  h.max_cycle_len = 3;
  h.fragment_max_size = 6;
  return {RunExperiment(g), RunExperiment(h)};
}

Check MonteCarlo(const MonteCarloRuns& runs) {
  Check c;
  const auto& g = runs.graph;
  c.Require(std::abs(g.acyclic_fraction - 0.96650) <= 0.03, "acyclic fraction");
  const CycleStats* tri = nullptr;
  for (const auto& s : g.cycles) {
    if (s.length == 3) tri = &s;
  }
  c.Require(tri != nullptr && std::abs(tri->lambda - 0.125 / 6) < 1e-15 &&
                tri->tv_distance < 0.02,
            "3-cycle TV distance < 0.02");
  const CovarianceStats* cov = nullptr;
  for (const auto& s : g.covariances) {
    if (s.length_a == 3 && s.length_b == 4) cov = &s;
  }
  c.Require(cov != nullptr && std::abs(cov->z) <= 3.0, "3/4-cycle covariance");
  const CycleStats* two = nullptr;
  for (const auto& s : runs.hyper.cycles) {
    if (s.length == 2) two = &s;
  }
  c.Require(two != nullptr && std::abs(two->lambda - 0.0625) < 1e-15 &&
                std::abs(two->mean - 0.0625) <= 3 * two->standard_error,
            "d=3 2-cycle mean within 3 SE of 0.0625");
  c.Note("n=" + std::to_string(g.config.n) + " trials=" + std::to_string(g.trials) +
         " acyclic=" + Fmt("%.4f", g.acyclic_fraction));
  if (tri) c.Note("TV3=" + Fmt("%.2g", tri->tv_distance));
  if (cov) c.Note("cov z=" + Fmt("%.2f", cov->z));
  if (two) c.Note("d=3 mean2=" + Fmt("%.4f", two->mean) + " z=" + Fmt("%.2f", two->z));
  return c;
}

Check FragmentLaw(const MonteCarloRuns& runs) {
  Check c;
  const auto& chi = runs.graph.chi_square;
  c.Require(chi.valid, "chi-square has at least two pooled categories");
  c.Require(chi.p_value > 0.001, "p-value > 0.001");
  c.Note("chi2=" + Fmt("%.3f", chi.statistic) + " df=" +
         std::to_string(chi.degrees_of_freedom) + " p=" + Fmt("%.3f", chi.p_value));
  return c;
}

Check CltApproximation() {
  Check c;
  const auto model = ModelParams::Graph(1.5);
  std::string pairs;
  for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const auto r = FoApproximation(p, 0.02, model);
    const double recomputed = PoissonCdf(CycleLambdaSum(model, r.k), r.a);
    c.Require(std::abs(recomputed - p) < 0.02 && r.certified,
              "p=" + Fmt("%g", p));
    pairs += (pairs.empty() ? "" : " ") + Fmt("%g", p) + "->(k=" +
             std::to_string(r.k) + ",a=" + std::to_string(r.a) + ")";
  }
  c.Note(pairs);
  return c;
}

}  // namespace
}  // namespace folimits

int main(int argc, char** argv) {
  using namespace folimits;
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::map<int, std::function<Check()>> criteria;
  MonteCarloRuns runs;
  bool mc_done = false;
  auto mc = [&]() -> const MonteCarloRuns& {
    if (!mc_done) {
      runs = RunMonteCarlo(quick);
      mc_done = true;
    }
    return runs;
  };
  criteria[1] = CriticalConstants;
  criteria[2] = EnumerationCorrectness;
  criteria[3] = ExactIdentities;
  criteria[4] = SeriesAgreement;
  criteria[5] = IntervalEngine;
  criteria[6] = SweepProperty;
  criteria[7] = [&] { return MonteCarlo(mc()); };
  criteria[8] = [&] { return FragmentLaw(mc()); };
  criteria[9] = CltApproximation;

  const char* names[] = {"",
                         "critical constants",
                         "enumeration correctness",
                         "exact identities",
                         "series and closed form",
                         "interval engine",
                         "sweep property",
                         "Monte Carlo validation",
                         "fragment law",
                         "cycle-count approximation"};
  int failures = 0;
  for (auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = run();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (!check.ok) ++failures;
    std::printf("criterion %d %-26s %s (%.1fs) %s\n", id, names[id],
                check.ok ? "PASS" : "FAIL", seconds, check.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
