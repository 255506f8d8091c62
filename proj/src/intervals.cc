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


#include "folimits/intervals.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "folimits/errors.h"
#include "folimits/limits.h"
#include "folimits/parallel.h"
#include "folimits/report.h"

namespace folimits {
namespace {

constexpr int kMaxCertificationIndex = 1000000;
// Endpoints this close to 0 or 1 are snapped; covers the rounding in 1 - T.
constexpr double kSnapTolerance = 1e-9;

Rational BoundFactor(int d) {
  if (d == 2) return 1;
  const Rational r(d - 2, d - 1);
  return r * r;
}

int KIndex(int size, const Rational& weight, const Rational& factor,
           double log_s) {
  if (weight == factor) return size + 1;
  const double t = std::log(ToDouble(weight / factor)) / log_s;
  return static_cast<int>(std::floor(size + t)) + 1;
}

IntervalSet Snap(std::vector<Interval> merged) {
  IntervalSet set;
  for (auto& iv : merged) {
    iv.lo = std::clamp(iv.lo, 0.0, 1.0);
    iv.hi = std::clamp(iv.hi, 0.0, 1.0);
  }
  if (!merged.empty()) {
    if (merged.front().lo < kSnapTolerance) merged.front().lo = 0.0;
    if (merged.back().hi > 1.0 - kSnapTolerance) merged.back().hi = 1.0;
  }
  set.intervals = std::move(merged);
  return set;
}

}  // namespace

double IntervalSet::TotalLength() const {
  double total = 0.0;
  for (const auto& iv : intervals) total += iv.hi - iv.lo;
  return total;
}

bool IntervalSet::Contains(double value, double tolerance) const {
  for (const auto& iv : intervals) {
    if (value >= iv.lo - tolerance && value <= iv.hi + tolerance) return true;
  }
  return false;
}

std::vector<Interval> IntervalSet::Gaps() const {
  std::vector<Interval> gaps;
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    gaps.push_back({intervals[i - 1].hi, intervals[i].lo});
  }
  return gaps;
}

std::vector<Interval> MergeIntervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<Interval> merged;
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi + kMergeTolerance) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

double TermTable::HeadMass() const {
  double total = 0.0;
  for (auto it = head.rbegin(); it != head.rend(); ++it) total += it->p;
  return total;
}

int CertificationIndex(const ModelParams& model) {
  const double inv_s = 1.0 / model.s();
  double k;
  if (model.is_graph()) {
    k = std::floor(inv_s + 3.5) + 1.0;
  } else {
    k = std::ceil(2.0 * inv_s + 4.0);
  }
  if (!(k < kMaxCertificationIndex)) return kMaxCertificationIndex;
  return static_cast<int>(k);
}

std::shared_ptr<const FragmentTable> SharedFragmentTable(
    int d, int max_size, const EnumerationBudget& budget) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const FragmentTable>>
      store;
  budget.Check(max_size, "fragment");
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = store[{d, max_size}];
  if (!slot) {
    slot = std::make_shared<const FragmentTable>(
        EnumerateFragmentShapes(d, max_size, budget));
  }
  return slot;
}

TermTable BuildTermTable(const ModelParams& model,
                         const EnumerationBudget& budget) {
  model.RequireSubcritical("term table");
  if (!(model.c() > 0.0)) throw DomainError("term table needs c > 0");
  const int d = model.uniformity();
  TermTable table;
  table.model = model;
  table.acyclic = AcyclicProbability(model);
  const Rational factor = BoundFactor(d);
  table.bound_factor = ToDouble(factor);
  table.k_star = CertificationIndex(model);

  const int needed = table.k_star - 1;
  const int reached = std::min(needed, budget.max_size);
  table.max_size_reached = reached;
  table.certified = reached >= needed;
  table.k_effective = std::min(table.k_star, reached + 1);
  const double s = model.s();
  const double log_s = std::log(s);
  table.threshold = table.acyclic * std::pow(s, table.k_effective - 1) *
                    table.bound_factor;

  table.fragments = SharedFragmentTable(d, reached, budget);
  const FragmentTable& fragments = *table.fragments;
  long double enumerated = 0.0L;
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    const auto& entry = fragments.entries()[i];
    Rational weight = fragments.WeightedInverseAut(i);
    const double p =
        table.acyclic * std::pow(s, entry.size) * ToDouble(weight);
    enumerated += p;
    const int k = KIndex(entry.size, weight, factor, log_s);
    if (k < table.k_effective) {
      table.head.push_back(
          {i, fragments.Code(i), entry.size, std::move(weight), p, k});
    }
  }
  std::stable_sort(table.head.begin(), table.head.end(),
                   [](const Term& a, const Term& b) { return a.p > b.p; });
  table.enumerated_mass = static_cast<double>(enumerated);
  table.tail_mass = std::max(0.0, 1.0 - table.HeadMass());
  table.uncertainty =
      table.certified
          ? 0.0
          : std::max(std::max(0.0, 1.0 - table.enumerated_mass),
                     table.threshold);
  return table;
}

KakeyaSplit SplitKakeya(const TermTable& table) {
  KakeyaSplit split;
  double rest = table.tail_mass;
  for (std::size_t i = table.head.size(); i-- > 0;) {
    if (table.head[i].p > rest + kMergeTolerance) split.violations.push_back(i);
    rest += table.head[i].p;
  }
  std::reverse(split.violations.begin(), split.violations.end());
  split.certified_tail_start = table.head.size();
  return split;
}

std::vector<Interval> SubsumIntervals(const std::vector<double>& head,
                                      double tail_mass) {
  std::vector<double> terms = head;
  std::sort(terms.begin(), terms.end());
  std::vector<Interval> set = {{0.0, tail_mass}};
  for (double p : terms) {
    std::vector<Interval> grown = set;
    grown.reserve(2 * set.size());
    for (const auto& iv : set) grown.push_back({iv.lo + p, iv.hi + p});
    set = MergeIntervals(std::move(grown));
  }
  return set;
}

IntervalSet SubsumIntervals(const TermTable& table) {
  std::vector<double> head;
  head.reserve(table.head.size());
  for (const auto& term : table.head) head.push_back(term.p);
  IntervalSet set = Snap(SubsumIntervals(head, table.tail_mass));
  set.certified = table.certified;
  set.uncertainty = table.uncertainty;
  return set;
}

GapReport MakeGapReport(const ModelParams& model,
                        const EnumerationBudget& budget) {
  const TermTable table = BuildTermTable(model, budget);
  GapReport report;
  report.model = model;
  report.intervals = SubsumIntervals(table);
  report.gaps = report.intervals.Gaps();
  report.k_star = table.k_star;
  report.max_size_reached = table.max_size_reached;
  report.head_size = table.head.size();
  report.violations = SplitKakeya(table).violations.size();
  report.below_c0 = model.c() < SolveC0(model.uniformity()).c0;
  if (report.below_c0) {
    const Interval gap = {1.0 - table.acyclic, table.acyclic};
    report.theoretical_gap = gap;
    report.consistent = std::any_of(
        report.gaps.begin(), report.gaps.end(), [&](const Interval& g) {
          return g.lo <= gap.lo + kSnapTolerance &&
                 g.hi >= gap.hi - kSnapTolerance;
        });
  } else {
    report.consistent = report.gaps.empty();
  }
  return report;
}

std::vector<SweepRow> SweepIntervals(int d, double c_from, double c_to,
                                     int steps, const EnumerationBudget& budget,
                                     unsigned threads) {
  if (steps < 1) throw DomainError("sweep needs at least one step");
  const ModelParams probe = ModelParams::ForUniformity(d, 0.0);
  const double critical = probe.critical_c();
  for (double c : {c_from, c_to}) {
    if (!(c > 0.0 && c < critical)) {
      throw DomainError("sweep range must lie in (0, " +
                        FormatSig(critical) + ")");
    }
  }
  std::vector<double> cs;
  if (c_from == c_to || steps == 1) {
    cs.push_back(c_from);
  } else {
    for (int i = 0; i < steps; ++i) {
      cs.push_back(c_from + (c_to - c_from) * i / (steps - 1));
    }
  }
  std::vector<SweepRow> rows(cs.size());
  ParallelFor(cs.size(), threads, [&](std::size_t i) {
    const GapReport report =
        MakeGapReport(ModelParams::ForUniformity(d, cs[i]), budget);
    SweepRow& row = rows[i];
    row.c = cs[i];
    row.interval_count = report.intervals.count();
    row.certified = report.intervals.certified;
    row.gaps = report.gaps;
    row.k_star = report.k_star;
    row.max_size_reached = report.max_size_reached;
    row.uncertainty = report.intervals.uncertainty;
  });
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "c,interval_count,certified,gaps\n";
  for (const auto& row : rows) {
    out << FormatSig(row.c) << ',' << row.interval_count << ','
        << (row.certified ? "true" : "false") << ',';
    for (std::size_t i = 0; i < row.gaps.size(); ++i) {
      if (i > 0) out << '|';
      out << FormatSig(row.gaps[i].lo) << ':' << FormatSig(row.gaps[i].hi);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace folimits
