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

#ifndef FOLIMITS_CATALOG_H_
#define FOLIMITS_CATALOG_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "folimits/exact.h"

namespace folimits {

// Building blocks of d-uniform unicycles, indexed by integer ids.
//
//  * tree:   a vertex-rooted tree, i.e. a multiset of branches;
//  * branch: an edge hanging below the root, i.e. a multiset of exactly d-1
//            trees rooted at its other vertices;
//  * bundle: the d-2 non-cycle vertices of a cycle edge, i.e. a multiset of
//            exactly d-2 trees.
//
// Sizes are edge counts. Ids of each kind are grouped by nondecreasing size.
// For d = 2 a branch wraps a single child and the only bundle is empty, which
// reduces trees to ordinary rooted trees with AHU codes.
class ShapeCatalog {
 public:
  struct Node {
    int edges = 0;
    std::vector<int> parts;  // nonincreasing ids of the parts
    BigInt aut = 1;
    std::string code;
  };

  explicit ShapeCatalog(int d);

  int uniformity() const { return d_; }
  int built_edges() const { return built_; }

  // Ensures every tree, branch and bundle with at most `max_edges` edges is
  // present.
  void Grow(int max_edges);

  const std::vector<Node>& trees() const { return trees_; }
  const std::vector<Node>& branches() const { return branches_; }
  const std::vector<Node>& bundles() const { return bundles_; }

  // Ids [first, last) of the trees (bundles) with exactly `edges` edges.
  std::pair<int, int> TreeRange(int edges) const;
  std::pair<int, int> BundleRange(int edges) const;

 private:
  void AddLevel(int edges);

  int d_;
  int built_ = -1;
  std::vector<Node> trees_, branches_, bundles_;
  // start_[e] is the first id with size e; one extra sentinel entry.
  std::vector<int> tree_start_, branch_start_, bundle_start_;
};

// Calls `emit` with every nonincreasing id sequence drawn from `pool` whose
// sizes sum to `total`. With `count` >= 0 the sequence has exactly that many
// entries; with `count` < 0 any length is allowed (pool sizes must then be
// positive). `start` maps a size to the first pool id of that size and has
// one sentinel entry past the largest size.
void ForEachMultiset(const std::vector<ShapeCatalog::Node>& pool,
                     std::span<const int> start, int count, int total,
                     const std::function<void(const std::vector<int>&)>& emit);

// Aut of a multiset of parts: product over groups of equal parts of
// aut(part)^m * m!.
BigInt MultisetAut(std::span<const int> ids,
                   const std::vector<ShapeCatalog::Node>& pool);

// Aut of a multiset given by (code, aut) pairs; equal codes are identical.
BigInt MultisetAut(std::vector<std::pair<std::string, BigInt>> parts);

}  // namespace folimits

#endif  // FOLIMITS_CATALOG_H_
