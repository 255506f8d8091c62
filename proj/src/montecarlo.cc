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


#include "folimits/montecarlo.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/random/binomial_distribution.hpp>

#include "folimits/canonical.h"
#include "folimits/enumerate.h"
#include "folimits/errors.h"
#include "folimits/intervals.h"
#include "folimits/limits.h"
#include "folimits/parallel.h"
#include "folimits/philox.h"

namespace folimits {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(long n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

void SampleGraph(const SampleConfig& config, PhiloxEngine& rng,
                 EdgeList& out) {
  const long n = config.n;
  const double p = config.model.c() / static_cast<double>(n);
  if (p <= 0.0) return;
  if (p >= 1.0) {
    for (long v = 1; v < n; ++v) {
      for (long w = 0; w < v; ++w) {
        out.vertices.push_back(static_cast<int>(w));
        out.vertices.push_back(static_cast<int>(v));
      }
    }
    return;
  }
  // Batagelj-Brandes: skip a geometric number of pairs (w, v), w < v.
  const double log_q = std::log1p(-p);
  long v = 1;
  double w = -1.0;
  while (v < n) {
    const double skip = std::floor(std::log(rng.UniformOpenClosed()) / log_q);
    w += 1.0 + skip;
    while (w >= static_cast<double>(v) && v < n) {
      w -= static_cast<double>(v);
      ++v;
    }
    if (v < n) {
      out.vertices.push_back(static_cast<int>(w));
      out.vertices.push_back(static_cast<int>(v));
    }
  }
}

void SampleHypergraph(const SampleConfig& config, PhiloxEngine& rng,
                      EdgeList& out) {
  const int d = config.model.uniformity();
  const long n = config.n;
  double candidates = 1.0;
  for (int i = 0; i < d; ++i) candidates = candidates * (n - i) / (i + 1);
  if (candidates > 0x1.0p62) {
    throw DomainError("C(n, d) is too large to sample");
  }
  const double p =
      config.model.c() / std::pow(static_cast<double>(n), d - 1);
  if (p <= 0.0) return;
  const long long total = std::llround(candidates);
  boost::random::binomial_distribution<long long, double> count_dist(
      total, std::min(1.0, p));
  const long long m = count_dist(rng);
  std::set<std::vector<int>> seen;
  std::vector<int> edge(d);
  while (static_cast<long long>(seen.size()) < m) {
    for (int i = 0; i < d; ++i) {
      bool fresh;
      do {
        edge[i] = static_cast<int>(rng.Below(static_cast<std::uint64_t>(n)));
        fresh = std::find(edge.begin(), edge.begin() + i, edge[i]) ==
                edge.begin() + i;
      } while (!fresh);
    }
    std::sort(edge.begin(), edge.end());
    if (seen.insert(edge).second) {
      out.vertices.insert(out.vertices.end(), edge.begin(), edge.end());
    }
  }
}

// Standard deviation of the mean for samples `values`.
double MeanStandardError(const std::vector<double>& values, double mean) {
  const std::size_t t = values.size();
  if (t < 2) return 0.0;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(t - 1) / static_cast<double>(t));
}

double Mean(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double total = 0.0;
  for (double v : values) total += v;
  return total / static_cast<double>(values.size());
}

double PoissonTotalVariation(const std::vector<long>& histogram, int trials,
                             double lambda) {
  double l1 = 0.0;
  double covered = 0.0;
  for (std::size_t j = 0; j < histogram.size(); ++j) {
    const double pmf = PoissonPmf(lambda, static_cast<long>(j));
    covered += pmf;
    l1 += std::fabs(static_cast<double>(histogram[j]) / trials - pmf);
  }
  l1 += std::max(0.0, 1.0 - covered);
  return std::clamp(0.5 * l1, 0.0, 1.0);
}

ChiSquareStats FragmentChiSquare(const SampleConfig& config,
                                 const std::map<std::string, long>& observed,
                                 int trials) {
  ChiSquareStats stats;
  const ModelParams& model = config.model;
  if (!model.subcritical() || !(model.c() > 0.0)) {
    stats.note = "fragment law needs 0 < c/(d-2)! < 1";
    return stats;
  }
  const int d = model.uniformity();
  const EnumerationBudget budget = EnumerationBudget::ForUniformity(d);
  const int max_size = std::min(config.fragment_max_size, budget.max_size);
  const auto table = SharedFragmentTable(d, max_size, budget);

  struct Category {
    std::string code;
    long observed;
    double expected;
  };
  std::vector<Category> kept;
  for (std::size_t i = 0; i < table->size(); ++i) {
    const double expected =
        trials * ShapeProbability(model, table->entries()[i].size,
                                  table->WeightedInverseAut(i));
    if (expected < 5.0) continue;
    const std::string code = table->Code(i);
    auto it = observed.find(code);
    kept.push_back({code, it == observed.end() ? 0 : it->second, expected});
  }
  auto pool_expected = [&] {
    double total = trials;
    for (const auto& c : kept) total -= c.expected;
    return total;
  };
  // Fold the smallest kept categories into the pool until it reaches 5.
  std::sort(kept.begin(), kept.end(), [](const Category& a, const Category& b) {
    return a.expected > b.expected ||
           (a.expected == b.expected && a.code < b.code);
  });
  while (!kept.empty() && pool_expected() > 1e-9 && pool_expected() < 5.0) {
    kept.pop_back();
  }
  long kept_observed = 0;
  for (const auto& c : kept) {
    stats.categories.push_back(c.code);
    stats.observed.push_back(c.observed);
    stats.expected.push_back(c.expected);
    kept_observed += c.observed;
  }
  const double rest = pool_expected();
  if (rest > 1e-9) {
    stats.categories.push_back("other");
    stats.observed.push_back(trials - kept_observed);
    stats.expected.push_back(rest);
  }
  if (stats.categories.size() < 2) {
    stats.note = "fewer than two categories with expected count >= 5";
    return stats;
  }
  for (std::size_t i = 0; i < stats.categories.size(); ++i) {
    const double diff = stats.observed[i] - stats.expected[i];
    stats.statistic += diff * diff / stats.expected[i];
  }
  stats.degrees_of_freedom = static_cast<int>(stats.categories.size()) - 1;
  stats.p_value = boost::math::gamma_q(0.5 * stats.degrees_of_freedom,
                                       0.5 * stats.statistic);
  stats.valid = true;
  return stats;
}

}  // namespace

void SampleConfig::Validate() const {
  const int d = model.uniformity();
  if (n < d) throw DomainError("n must be at least d");
  if (n > std::numeric_limits<int>::max()) throw DomainError("n is too large");
  if (trials < 1) throw DomainError("trials must be at least 1");
  const int cap = d == 2 ? kMaxCycleLengthGraph : kMaxCycleLengthHyper;
  if (max_cycle_len > cap) {
    throw BudgetError("cycle length cap is " + std::to_string(cap) +
                      " for " + model.Name());
  }
  if (fragment_max_size < 0) {
    throw DomainError("fragment size cap must be nonnegative");
  }
}

EdgeList SampleModel(const SampleConfig& config, std::uint64_t trial) {
  EdgeList out;
  out.uniformity = config.model.uniformity();
  out.n = config.n;
  PhiloxEngine rng(config.master_seed, trial);
  if (config.model.is_graph()) {
    SampleGraph(config, rng, out);
  } else {
    SampleHypergraph(config, rng, out);
  }
  return out;
}

ComponentCensus ClassifyComponents(const EdgeList& edges) {
  const int d = edges.uniformity;
  DisjointSets sets(edges.n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto edge = edges.edge(e);
    for (int i = 1; i < d; ++i) sets.Union(edge[0], edge[i]);
  }
  ComponentCensus census;
  census.component_of.assign(edges.n, -1);
  std::vector<int> index_of_root(edges.n, -1);
  for (int v = 0; v < edges.n; ++v) {
    const int root = sets.Find(v);
    if (index_of_root[root] < 0) {
      index_of_root[root] = static_cast<int>(census.components.size());
      census.components.push_back({v, 0, 0});
    }
    const int index = index_of_root[root];
    census.component_of[v] = index;
    ++census.components[index].vertices;
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    ++census.components[census.component_of[edges.edge(e)[0]]].edges;
  }
  for (const auto& component : census.components) {
    const long excess = component.excess(d);
    if (excess < 0) {
      ++census.trees;
    } else if (excess == 0) {
      ++census.unicyclic;
    } else {
      ++census.complex;
    }
  }
  return census;
}

FragmentShape ExtractFragmentShape(const EdgeList& edges) {
  return ExtractFragmentShape(edges, ClassifyComponents(edges));
}

FragmentShape ExtractFragmentShape(const EdgeList& edges,
                                   const ComponentCensus& census) {
  const int d = edges.uniformity;
  std::vector<int> slot(census.components.size(), -1);
  std::vector<std::vector<LabeledEdge>> groups;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto edge = edges.edge(e);
    const int component = census.component_of[edge[0]];
    if (census.components[component].excess(d) != 0) continue;
    if (slot[component] < 0) {
      slot[component] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[component]].emplace_back(edge.begin(), edge.end());
  }
  std::vector<UnicycleShape> components;
  components.reserve(groups.size());
  for (const auto& group : groups) {
    components.push_back(CanonicalUnicycle(d, group));
  }
  return FragmentShape::FromComponents(d, std::move(components));
}

std::vector<long> CountShortCycles(const EdgeList& edges, int max_len) {
  return CountShortCycles(edges, max_len, ClassifyComponents(edges));
}

std::vector<long> CountShortCycles(const EdgeList& edges, int max_len,
                                   const ComponentCensus& census) {
  const int d = edges.uniformity;
  const int cap = d == 2 ? kMaxCycleLengthGraph : kMaxCycleLengthHyper;
  if (max_len > cap) {
    throw BudgetError("cycle length cap is " + std::to_string(cap));
  }
  const int min_len = d == 2 ? 3 : 2;
  std::vector<long> counts(std::max(max_len + 1, 0), 0);
  if (max_len < min_len) return counts;

  // Only components with a cycle matter.
  std::vector<int> active;
  std::unordered_map<int, std::vector<int>> incident;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto edge = edges.edge(e);
    if (census.components[census.component_of[edge[0]]].excess(d) < 0) {
      continue;
    }
    active.push_back(static_cast<int>(e));
    for (int v : edge) incident[v].push_back(static_cast<int>(e));
  }

  std::vector<int> path;   // edges e_0 .. e_{l-1}
  std::vector<int> links;  // v_0 (closing vertex), v_1, ...
  std::vector<int> scratch;
  auto closes_unicycle = [&](int length) {
    scratch.clear();
    for (int e : path) {
      const auto edge = edges.edge(e);
      scratch.insert(scratch.end(), edge.begin(), edge.end());
    }
    std::sort(scratch.begin(), scratch.end());
    const auto distinct =
        std::unique(scratch.begin(), scratch.end()) - scratch.begin();
    return distinct == static_cast<long>(d - 1) * length;
  };
  // At edge `e` (the `length`-th of the path) entered through `u`.
  auto extend = [&](auto&& self, int e, int u, int length) -> void {
    for (int w : edges.edge(e)) {
      if (w == u) continue;
      if (w == links[0]) {
        if (length >= min_len && closes_unicycle(length)) ++counts[length];
        continue;
      }
      if (length == max_len) continue;
      if (std::find(links.begin(), links.end(), w) != links.end()) continue;
      links.push_back(w);
      for (int f : incident[w]) {
        if (f <= path[0]) continue;
        if (std::find(path.begin(), path.end(), f) != path.end()) continue;
        path.push_back(f);
        self(self, f, w, length + 1);
        path.pop_back();
      }
      links.pop_back();
    }
  };
  for (int e0 : active) {
    for (int v0 : edges.edge(e0)) {
      path.assign(1, e0);
      links.assign(1, v0);
      extend(extend, e0, v0, 1);
    }
  }
  // Every cycle is traced once in each direction.
  for (long& count : counts) count /= 2;
  return counts;
}

TrialRecord RunTrial(const SampleConfig& config, std::uint64_t trial) {
  const EdgeList edges = SampleModel(config, trial);
  const ComponentCensus census = ClassifyComponents(edges);
  const FragmentShape fragment = ExtractFragmentShape(edges, census);
  TrialRecord record;
  record.trial = trial;
  record.edges = static_cast<long>(edges.size());
  record.unicyclic_components = census.unicyclic;
  record.complex_components = census.complex;
  record.acyclic = census.unicyclic == 0 && census.complex == 0;
  record.fragment_size = fragment.size;
  record.fragment_code = fragment.code;
  record.cycles = CountShortCycles(edges, config.max_cycle_len, census);
  return record;
}

SimResult RunExperiment(const SampleConfig& config) {
  config.Validate();
  const int trials = config.trials;
  std::vector<TrialRecord> records(trials);
  ParallelFor(static_cast<std::size_t>(trials), config.threads,
              [&](std::size_t i) { records[i] = RunTrial(config, i); });

  SimResult result;
  result.config = config;
  result.trials = trials;
  const ModelParams& model = config.model;

  std::vector<double> fragment_sizes;
  long acyclic = 0;
  long with_complex = 0;
  double edge_total = 0.0;
  for (const auto& record : records) {
    edge_total += static_cast<double>(record.edges);
    acyclic += record.acyclic;
    with_complex += record.complex_components > 0;
    fragment_sizes.push_back(record.fragment_size);
    ++result.fragment_frequencies[record.fragment_code];
  }
  result.mean_edges = edge_total / trials;
  result.acyclic_fraction = static_cast<double>(acyclic) / trials;
  result.complex_incidence = static_cast<double>(with_complex) / trials;
  result.mean_fragment_size = Mean(fragment_sizes);
  result.fragment_size_standard_error =
      MeanStandardError(fragment_sizes, result.mean_fragment_size);
  if (model.subcritical()) {
    const double expected = AcyclicProbability(model);
    result.acyclic_expected = expected;
    const double se = std::sqrt(expected * (1.0 - expected) / trials);
    result.acyclic_z = se > 0.0 ? (result.acyclic_fraction - expected) / se
                                : 0.0;
  }

  const int min_len = model.min_cycle_length();
  std::vector<std::vector<double>> by_length;
  for (int k = min_len; k <= config.max_cycle_len; ++k) {
    CycleStats stats;
    stats.length = k;
    stats.lambda = CycleLambda(model, k);
    std::vector<double> values;
    for (const auto& record : records) {
      const long count = record.cycles[k];
      values.push_back(static_cast<double>(count));
      if (static_cast<std::size_t>(count) >= stats.histogram.size()) {
        stats.histogram.resize(count + 1, 0);
      }
      ++stats.histogram[count];
    }
    stats.mean = Mean(values);
    if (trials > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
      stats.variance = ss / (trials - 1);
    }
    stats.standard_error = std::sqrt(stats.lambda / trials);
    stats.z = stats.standard_error > 0.0
                  ? (stats.mean - stats.lambda) / stats.standard_error
                  : 0.0;
    stats.tv_distance =
        PoissonTotalVariation(stats.histogram, trials, stats.lambda);
    result.cycles.push_back(std::move(stats));
    by_length.push_back(std::move(values));
  }
  for (std::size_t a = 0; a < by_length.size(); ++a) {
    for (std::size_t b = a + 1; b < by_length.size(); ++b) {
      CovarianceStats cov;
      cov.length_a = min_len + static_cast<int>(a);
      cov.length_b = min_len + static_cast<int>(b);
      const double mean_a = result.cycles[a].mean;
      const double mean_b = result.cycles[b].mean;
      std::vector<double> products;
      for (int t = 0; t < trials; ++t) {
        products.push_back((by_length[a][t] - mean_a) *
                           (by_length[b][t] - mean_b));
      }
      const double mean_product = Mean(products);
      cov.covariance =
          trials > 1 ? mean_product * trials / (trials - 1) : 0.0;
      // Under independence Var(cov) ~ Var(X) Var(Y) / T; the plug-in
      // variance of the products collapses when joint events are rare.
      cov.standard_error = std::sqrt(result.cycles[a].variance *
                                     result.cycles[b].variance / trials);
      cov.z = cov.standard_error > 0.0 ? cov.covariance / cov.standard_error
                                       : 0.0;
      result.covariances.push_back(cov);
    }
  }
  result.chi_square =
      FragmentChiSquare(config, result.fragment_frequencies, trials);
  if (config.keep_trials) result.trial_records = std::move(records);
  return result;
}

std::string TrialCsv(const SimResult& result) {
  std::ostringstream out;
  const int min_len = result.config.model.min_cycle_length();
  out << "trial,edges,acyclic,unicyclic,complex,fragment_size,fragment_code";
  for (int k = min_len; k <= result.config.max_cycle_len; ++k) {
    out << ",cycles_" << k;
  }
  out << '\n';
  for (const auto& record : result.trial_records) {
    out << record.trial << ',' << record.edges << ','
        << (record.acyclic ? 1 : 0) << ',' << record.unicyclic_components
        << ',' << record.complex_components << ',' << record.fragment_size
        << ',' << record.fragment_code;
    for (int k = min_len; k <= result.config.max_cycle_len; ++k) {
      out << ',' << record.cycles[k];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace folimits
