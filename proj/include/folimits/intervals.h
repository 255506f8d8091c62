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


#ifndef FOLIMITS_INTERVALS_H_
#define FOLIMITS_INTERVALS_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "folimits/enumerate.h"
#include "folimits/exact.h"
#include "folimits/model.h"

namespace folimits {

// Endpoints closer than this are merged.
inline constexpr double kMergeTolerance = 1e-12;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Sorted, disjoint closed intervals inside [0, 1].
struct IntervalSet {
  std::vector<Interval> intervals;
  bool certified = true;
  // Hausdorff-distance bound between this set and the true closure; zero up
  // to rounding for certified sets.
  double uncertainty = 0.0;

  std::size_t count() const { return intervals.size(); }
  double TotalLength() const;
  bool Contains(double value, double tolerance = kMergeTolerance) const;
  // Open gaps between consecutive intervals.
  std::vector<Interval> Gaps() const;
};

// Merges overlapping or touching (within kMergeTolerance) intervals.
std::vector<Interval> MergeIntervals(std::vector<Interval> intervals);

struct Term {
  std::size_t shape = 0;  // index into the fragment table
  std::string code;
  int size = 0;
  Rational weight;  // (d-2)!^|H| / aut(H)
  double p = 0.0;
  int k = 0;  // least k with e^{-f} s^{k-1} F >= p > e^{-f} s^k F
};

struct TermTable {
  ModelParams model = ModelParams::Graph(0.5);
  double acyclic = 1.0;       // e^{-f}
  double bound_factor = 1.0;  // F = 1 (graph) or ((d-2)/(d-1))^2
  int k_star = 0;             // certification index
  int k_effective = 0;        // min(k_star, max_size_reached + 1)
  double threshold = 0.0;     // e^{-f} s^{k_effective - 1} F
  std::vector<Term> head;     // nonincreasing p
  double tail_mass = 0.0;     // 1 - sum of head
  bool certified = false;
  int max_size_reached = 0;
  double enumerated_mass = 0.0;  // sum of p over every enumerated shape
  double uncertainty = 0.0;
  std::shared_ptr<const FragmentTable> fragments;

  double HeadMass() const;
};

// Least integer exceeding 1/s + 7/2 (graphs) or least K with
// (K - 4)/2 >= 1/s (hypergraphs).
int CertificationIndex(const ModelParams& model);

// Fragment shapes up to max_size, memoised per (d, max_size).
std::shared_ptr<const FragmentTable> SharedFragmentTable(
    int d, int max_size, const EnumerationBudget& budget);

// Throws SupercriticalError unless x < 1. A budget below k_star - 1 yields
// a heuristic table rather than an error.
TermTable BuildTermTable(const ModelParams& model,
                         const EnumerationBudget& budget);

struct KakeyaSplit {
  std::vector<std::size_t> violations;  // head indices with p_i > rest
  std::size_t certified_tail_start = 0;
};

KakeyaSplit SplitKakeya(const TermTable& table);

// Closure of the subsums: [0, T] grown by every head term in increasing
// order as S <- S u (S + p).
IntervalSet SubsumIntervals(const TermTable& table);

// Same construction for an explicit head and tail mass.
std::vector<Interval> SubsumIntervals(const std::vector<double>& head,
                                      double tail_mass);

struct GapReport {
  ModelParams model = ModelParams::Graph(0.5);
  IntervalSet intervals;
  std::vector<Interval> gaps;
  bool below_c0 = false;
  // (1 - e^{-f}, e^{-f}) when c < c0.
  std::optional<Interval> theoretical_gap;
  // c < c0: some gap contains the theoretical gap. c >= c0: no gaps.
  bool consistent = false;
  int k_star = 0;
  int max_size_reached = 0;
  std::size_t head_size = 0;
  std::size_t violations = 0;
};

GapReport MakeGapReport(const ModelParams& model,
                        const EnumerationBudget& budget);

struct SweepRow {
  double c = 0.0;
  std::size_t interval_count = 0;
  bool certified = false;
  std::vector<Interval> gaps;
  int k_star = 0;
  int max_size_reached = 0;
  double uncertainty = 0.0;
};

// `steps` evenly spaced values from c_from to c_to inclusive; one row when
// c_from == c_to. Rows are computed on up to `threads` threads (0 = all
// hardware threads) and returned in order of c.
std::vector<SweepRow> SweepIntervals(int d, double c_from, double c_to,
                                     int steps, const EnumerationBudget& budget,
                                     unsigned threads = 0);

// Header `c,interval_count,certified,gaps`; gaps as `a1:b1|a2:b2`.
std::string SweepCsv(const std::vector<SweepRow>& rows);

}  // namespace folimits

#endif  // FOLIMITS_INTERVALS_H_
