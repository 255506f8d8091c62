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

#ifndef FOLIMITS_ENUMERATE_H_
#define FOLIMITS_ENUMERATE_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "folimits/exact.h"
#include "folimits/shapes.h"

namespace folimits {

// Hard cap on enumerated shape sizes. Requests above the cap fail with
// BudgetError instead of being truncated.
struct EnumerationBudget {
  int max_size = 16;

  // 16 for graphs, 10 for d = 3, 6 for d = 4 and 5 beyond.
  static EnumerationBudget ForUniformity(int d);

  void Check(int requested, const char* what) const;
};

// Rooted trees with 1..max_size vertices; element i holds the trees with
// i + 1 vertices, ordered by code.
std::vector<std::vector<RootedTreeCode>> EnumerateRootedTrees(
    int max_size, const EnumerationBudget& budget = {});

// Vertex-rooted d-uniform trees with 0..max_edges edges; element i holds the
// trees with i edges, ordered by code.
std::vector<std::vector<HyperTreeCode>> EnumerateHyperTrees(
    int d, int max_edges, const EnumerationBudget& budget);

// Connected unicyclic graphs with `size` edges, ordered by code.
std::vector<UnicycleShape> EnumerateUnicycles(
    int size, const EnumerationBudget& budget = {});

// Connected d-uniform unicycles with `size` edges, ordered by code.
std::vector<HyperUnicycleShape> EnumerateHyperUnicycles(
    int d, int size, const EnumerationBudget& budget);

// Every connected unicycle of uniformity d (2 = graphs) with at most
// `max_size` edges, ordered by (size, code). Results are memoised per d and
// shared; the returned table is immutable.
std::shared_ptr<const std::vector<UnicycleShape>> ConnectedUnicycles(
    int d, int max_size, const EnumerationBudget& budget);

// Multisets of connected unicycles with total size <= max_size, the empty
// multiset included, ordered by (size, code).
class FragmentTable {
 public:
  struct Entry {
    std::vector<int> parts;  // nondecreasing indices into components()
    int size = 0;
    BigInt aut = 1;
  };

  // `components` must list every connected unicycle up to `max_size`.
  FragmentTable(int d, int max_size,
                std::shared_ptr<const std::vector<UnicycleShape>> components);

  int uniformity() const { return d_; }
  int max_size() const { return max_size_; }
  const std::vector<UnicycleShape>& components() const { return *components_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::string Code(std::size_t i) const;
  FragmentShape Shape(std::size_t i) const;
  Rational WeightedInverseAut(std::size_t i) const;

 private:
  int d_;
  int max_size_;
  std::shared_ptr<const std::vector<UnicycleShape>> components_;
  std::vector<Entry> entries_;
};

FragmentTable EnumerateFragmentShapes(int d, int max_size,
                                      const EnumerationBudget& budget);

// Sum of 1/aut(H) over connected unicyclic graphs with `size` edges.
Rational InverseAutSum(int size, const EnumerationBudget& budget = {});

// Sum of (d-2)!^k / aut(H) over connected d-uniform unicycles with k edges.
Rational WeightedInverseAutSum(int d, int size,
                               const EnumerationBudget& budget);

}  // namespace folimits

#endif  // FOLIMITS_ENUMERATE_H_
