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

#include "folimits/catalog.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "folimits/codes.h"
#include "folimits/errors.h"

namespace folimits {
namespace {

using Node = ShapeCatalog::Node;

void Recurse(const std::vector<Node>& pool, std::span<const int> start,
             int slots_left, int remaining, int max_id, std::vector<int>& ids,
             const std::function<void(const std::vector<int>&)>& emit) {
  if (slots_left == 0 || (slots_left < 0 && remaining == 0)) {
    if (remaining == 0) emit(ids);
    return;
  }
  const int largest = static_cast<int>(start.size()) - 2;
  const int cap = std::min(remaining, largest);
  int hi = std::min(max_id, start[cap + 1] - 1);
  for (int id = hi; id >= 0; --id) {
    const int size = pool[id].edges;
    if (slots_left > 0 && size * slots_left < remaining) break;
    if (slots_left < 0 && size == 0) break;
    ids.push_back(id);
    Recurse(pool, start, slots_left < 0 ? -1 : slots_left - 1,
            remaining - size, id, ids, emit);
    ids.pop_back();
  }
}

std::vector<std::string> PartCodes(std::span<const int> ids,
                                   const std::vector<Node>& pool) {
  std::vector<std::string> codes;
  codes.reserve(ids.size());
  for (int id : ids) codes.push_back(pool[id].code);
  return codes;
}

}  // namespace

void ForEachMultiset(const std::vector<Node>& pool, std::span<const int> start,
                     int count, int total,
                     const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> ids;
  if (start.size() < 2) {
    if (count == 0 && total == 0) emit(ids);
    if (count < 0 && total == 0) emit(ids);
    return;
  }
  Recurse(pool, start, count, total, static_cast<int>(pool.size()) - 1, ids,
          emit);
}

BigInt MultisetAut(std::span<const int> ids, const std::vector<Node>& pool) {
  BigInt aut = 1;
  std::size_t i = 0;
  while (i < ids.size()) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    const int mult = static_cast<int>(j - i);
    aut *= IntPow(pool[ids[i]].aut, mult) * Factorial(mult);
    i = j;
  }
  return aut;
}

BigInt MultisetAut(std::vector<std::pair<std::string, BigInt>> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  BigInt aut = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j].first == parts[i].first) ++j;
    const int mult = static_cast<int>(j - i);
    aut *= IntPow(parts[i].second, mult) * Factorial(mult);
    i = j;
  }
  return aut;
}

ShapeCatalog::ShapeCatalog(int d) : d_(d) {
  if (d < 2) throw DomainError("uniformity must be at least 2");
  tree_start_ = {0};
  branch_start_ = {0};
  bundle_start_ = {0};
}

std::pair<int, int> ShapeCatalog::TreeRange(int edges) const {
  if (edges < 0 || edges > built_) throw DomainError("tree size not built");
  return {tree_start_[edges], tree_start_[edges + 1]};
}

std::pair<int, int> ShapeCatalog::BundleRange(int edges) const {
  if (edges < 0 || edges > built_) throw DomainError("bundle size not built");
  return {bundle_start_[edges], bundle_start_[edges + 1]};
}

void ShapeCatalog::Grow(int max_edges) {
  for (int e = built_ + 1; e <= max_edges; ++e) AddLevel(e);
}

void ShapeCatalog::AddLevel(int e) {
  // Branches with e edges: d-1 trees with e-1 edges in total.
  if (e >= 1) {
    ForEachMultiset(trees_, tree_start_, d_ - 1, e - 1,
                    [&](const std::vector<int>& ids) {
                      Node node;
                      node.edges = e;
                      node.parts = ids;
                      node.aut = MultisetAut(ids, trees_);
                      node.code = BranchCode(d_, PartCodes(ids, trees_));
                      branches_.push_back(std::move(node));
                    });
  }
  branch_start_.push_back(static_cast<int>(branches_.size()));

  // Trees with e edges: any multiset of branches with e edges in total.
  ForEachMultiset(branches_, branch_start_, -1, e,
                  [&](const std::vector<int>& ids) {
                    Node node;
                    node.edges = e;
                    node.parts = ids;
                    node.aut = MultisetAut(ids, branches_);
                    node.code = TreeCode(PartCodes(ids, branches_));
                    trees_.push_back(std::move(node));
                  });
  tree_start_.push_back(static_cast<int>(trees_.size()));

  // Bundles with e edges: d-2 trees with e edges in total.
  ForEachMultiset(trees_, tree_start_, d_ - 2, e,
                  [&](const std::vector<int>& ids) {
                    Node node;
                    node.edges = e;
                    node.parts = ids;
                    node.aut = MultisetAut(ids, trees_);
                    node.code = BundleCode(d_, PartCodes(ids, trees_));
                    bundles_.push_back(std::move(node));
                  });
  bundle_start_.push_back(static_cast<int>(bundles_.size()));
  built_ = e;
}

}  // namespace folimits
