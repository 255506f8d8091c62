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


#ifndef FOLIMITS_MONTECARLO_H_
#define FOLIMITS_MONTECARLO_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folimits/model.h"
#include "folimits/shapes.h"

namespace folimits {

// Edges of a d-uniform hypergraph on vertices 0..n-1, stored flat with
// stride d.
struct EdgeList {
  int uniformity = 2;
  long n = 0;
  std::vector<int> vertices;

  std::size_t size() const { return vertices.size() / uniformity; }
  std::span<const int> edge(std::size_t i) const {
    return {vertices.data() + i * uniformity,
            static_cast<std::size_t>(uniformity)};
  }
};

struct SampleConfig {
  ModelParams model = ModelParams::Graph(0.5);
  long n = 100000;
  int trials = 2000;
  std::uint64_t master_seed = 1;
  int max_cycle_len = 4;
  unsigned threads = 0;  // 0 = all hardware threads
  // Largest enumerated fragment size used for the chi-square categories.
  int fragment_max_size = 8;
  bool keep_trials = false;

  // Throws DomainError on n < d, trials < 1 or a bad cycle cap.
  void Validate() const;
};

// Graphs: every pair independently with p = c/n by geometric skipping.
// Hypergraphs: Binomial(C(n, d), c/n^{d-1}) edges, then that many distinct
// uniform d-sets. Deterministic in (master_seed, trial).
EdgeList SampleModel(const SampleConfig& config, std::uint64_t trial);

struct ComponentInfo {
  int root = 0;
  long vertices = 0;
  long edges = 0;
  long excess(int d) const { return (d - 1) * edges - vertices; }
};

struct ComponentCensus {
  long trees = 0;
  long unicyclic = 0;
  long complex = 0;
  std::vector<ComponentInfo> components;
  std::vector<int> component_of;  // vertex -> index into components
};

// Union-find pass; excess -1 is a tree, 0 unicyclic, > 0 complex.
ComponentCensus ClassifyComponents(const EdgeList& edges);

// The multiset of unicyclic components, canonicalised.
FragmentShape ExtractFragmentShape(const EdgeList& edges);
FragmentShape ExtractFragmentShape(const EdgeList& edges,
                                   const ComponentCensus& census);

inline constexpr int kMaxCycleLengthGraph = 8;
inline constexpr int kMaxCycleLengthHyper = 5;

// counts[k] is the number of k-cycles (cycles that are unicycles on their
// own) for min_cycle_length <= k <= max_len; lower entries are zero.
// Throws BudgetError above the cap for the uniformity.
std::vector<long> CountShortCycles(const EdgeList& edges, int max_len);
std::vector<long> CountShortCycles(const EdgeList& edges, int max_len,
                                   const ComponentCensus& census);

struct TrialRecord {
  std::uint64_t trial = 0;
  long edges = 0;
  bool acyclic = false;
  long unicyclic_components = 0;
  long complex_components = 0;
  int fragment_size = 0;
  std::string fragment_code;
  std::vector<long> cycles;  // indexed by length
};

TrialRecord RunTrial(const SampleConfig& config, std::uint64_t trial);

struct CycleStats {
  int length = 0;
  double lambda = 0.0;  // x^k / (2k)
  double mean = 0.0;
  double variance = 0.0;
  double standard_error = 0.0;  // sqrt(lambda / trials)
  double z = 0.0;
  std::vector<long> histogram;  // trials with j cycles
  double tv_distance = 0.0;     // against Poisson(lambda)
};

struct CovarianceStats {
  int length_a = 0;
  int length_b = 0;
  double covariance = 0.0;
  double standard_error = 0.0;  // sqrt(Var a * Var b / trials)
  double z = 0.0;
};

struct ChiSquareStats {
  bool valid = false;  // false when fewer than two pooled categories
  std::string note;
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 0.0;
  std::vector<std::string> categories;  // codes, "other" for the pool
  std::vector<long> observed;
  std::vector<double> expected;
};

struct SimResult {
  SampleConfig config;
  int trials = 0;
  double mean_edges = 0.0;
  double acyclic_fraction = 0.0;
  std::optional<double> acyclic_expected;  // e^{-f} when subcritical
  double acyclic_z = 0.0;
  double complex_incidence = 0.0;  // trials with a complex component
  double mean_fragment_size = 0.0;
  double fragment_size_standard_error = 0.0;
  std::vector<CycleStats> cycles;
  std::vector<CovarianceStats> covariances;
  std::map<std::string, long> fragment_frequencies;
  ChiSquareStats chi_square;
  std::vector<TrialRecord> trial_records;  // only with keep_trials
};

// Runs every trial (in parallel) and aggregates in trial order, so the
// result does not depend on the thread count.
SimResult RunExperiment(const SampleConfig& config);

// `trial,edges,acyclic,unicyclic,complex,fragment_size,fragment_code,
// cycles_<k>...`
std::string TrialCsv(const SimResult& result);

}  // namespace folimits

#endif  // FOLIMITS_MONTECARLO_H_
