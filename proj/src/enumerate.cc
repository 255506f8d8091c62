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

#include "folimits/enumerate.h"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "folimits/catalog.h"
#include "folimits/codes.h"
#include "folimits/errors.h"
#include "folimits/necklace.h"

namespace folimits {
namespace {

// Catalog plus the unicycles found so far for one uniformity.
struct Store {
  explicit Store(int d) : catalog(d) {}

  std::mutex mu;
  ShapeCatalog catalog;
  std::vector<std::vector<UnicycleShape>> by_size;
  std::map<int, std::shared_ptr<const std::vector<UnicycleShape>>> upto;
};

Store& StoreFor(int d) {
  static std::mutex registry_mu;
  static std::map<int, std::unique_ptr<Store>> registry;
  std::lock_guard<std::mutex> lock(registry_mu);
  auto& slot = registry[d];
  if (!slot) slot = std::make_unique<Store>(d);
  return *slot;
}

bool ByCode(const UnicycleShape& a, const UnicycleShape& b) {
  return a.code < b.code;
}

class UnicycleGenerator {
 public:
  UnicycleGenerator(const ShapeCatalog& catalog, int size)
      : catalog_(catalog), size_(size) {}

  std::vector<UnicycleShape> Run() {
    const int min_len = catalog_.uniformity() == 2 ? 3 : 2;
    for (int len = min_len; len <= size_; ++len) {
      len_ = len;
      tokens_.assign(2 * len, 0);
      Place(0, size_);
    }
    std::sort(out_.begin(), out_.end(), ByCode);
    return std::move(out_);
  }

 private:
  // Fills link `pos` (tree at tokens_[2 pos], bundle at tokens_[2 pos + 1]).
  void Place(int pos, int remaining) {
    if (pos == len_) {
      if (remaining == 0) Emit();
      return;
    }
    const int links_left = len_ - pos;
    const int spare = remaining - links_left;  // edges for attachments
    if (spare < 0) return;
    for (int tree_edges = 0; tree_edges <= spare; ++tree_edges) {
      const auto [t_first, t_last] = catalog_.TreeRange(tree_edges);
      const int min_bundle = pos + 1 == len_ ? spare - tree_edges : 0;
      for (int tree = t_first; tree < t_last; ++tree) {
        // The least vertex token leads the canonical form.
        if (pos > 0 && tree < tokens_[0]) continue;
        tokens_[2 * pos] = tree;
        for (int bundle_edges = min_bundle;
             bundle_edges <= spare - tree_edges; ++bundle_edges) {
          const auto [b_first, b_last] = catalog_.BundleRange(bundle_edges);
          for (int bundle = b_first; bundle < b_last; ++bundle) {
            tokens_[2 * pos + 1] = bundle;
            Place(pos + 1, remaining - 1 - tree_edges - bundle_edges);
          }
        }
      }
    }
  }

  void Emit() {
    int stabilizer = 0;
    if (!IsCanonicalNecklace<int>(tokens_, &stabilizer)) return;
    const auto& trees = catalog_.trees();
    const auto& bundles = catalog_.bundles();
    BigInt aut = stabilizer;
    std::vector<std::string> strings(tokens_.size());
    for (int i = 0; i < len_; ++i) {
      const auto& tree = trees[tokens_[2 * i]];
      const auto& bundle = bundles[tokens_[2 * i + 1]];
      aut *= tree.aut * bundle.aut;
      strings[2 * i] = tree.code;
      strings[2 * i + 1] = bundle.code;
    }
    auto form = CanonicalNecklace<std::string>(strings);
    UnicycleShape shape;
    shape.uniformity = catalog_.uniformity();
    shape.cycle_length = len_;
    shape.size = size_;
    shape.aut = std::move(aut);
    shape.code = UnicycleCode(form.tokens);
    for (int i = 0; i < len_; ++i) {
      shape.vertex_attachments.push_back(std::move(form.tokens[2 * i]));
      shape.edge_attachments.push_back(std::move(form.tokens[2 * i + 1]));
    }
    out_.push_back(std::move(shape));
  }

  const ShapeCatalog& catalog_;
  const int size_;
  int len_ = 0;
  std::vector<int> tokens_;
  std::vector<UnicycleShape> out_;
};

// Callers hold store.mu.
const std::vector<UnicycleShape>& SizeLocked(Store& store, int size) {
  if (static_cast<int>(store.by_size.size()) <= size) {
    store.by_size.resize(size + 1);
  }
  auto& bucket = store.by_size[size];
  const int min_len = store.catalog.uniformity() == 2 ? 3 : 2;
  if (bucket.empty() && size >= min_len) {
    store.catalog.Grow(size);
    bucket = UnicycleGenerator(store.catalog, size).Run();
  }
  return bucket;
}

void CheckUniformity(int d) {
  if (d < 2) throw DomainError("uniformity must be at least 2");
}

}  // namespace

EnumerationBudget EnumerationBudget::ForUniformity(int d) {
  EnumerationBudget budget;
  if (d == 2) budget.max_size = 16;
  else if (d == 3) budget.max_size = 10;
  else if (d == 4) budget.max_size = 6;
  else budget.max_size = 5;
  return budget;
}

void EnumerationBudget::Check(int requested, const char* what) const {
  if (requested > max_size) {
    throw BudgetError(std::string(what) + " size " + std::to_string(requested) +
                      " exceeds the enumeration budget " +
                      std::to_string(max_size));
  }
}

std::vector<std::vector<RootedTreeCode>> EnumerateRootedTrees(
    int max_size, const EnumerationBudget& budget) {
  if (max_size < 1) throw DomainError("rooted trees need max_size >= 1");
  budget.Check(max_size, "rooted tree");
  Store& store = StoreFor(2);
  std::lock_guard<std::mutex> lock(store.mu);
  store.catalog.Grow(max_size - 1);
  std::vector<std::vector<RootedTreeCode>> out(max_size);
  for (int e = 0; e < max_size; ++e) {
    const auto [first, last] = store.catalog.TreeRange(e);
    for (int id = first; id < last; ++id) {
      const auto& node = store.catalog.trees()[id];
      out[e].push_back({node.code, e + 1, node.aut});
    }
    std::sort(out[e].begin(), out[e].end(),
              [](const auto& a, const auto& b) { return a.code < b.code; });
  }
  return out;
}

std::vector<std::vector<HyperTreeCode>> EnumerateHyperTrees(
    int d, int max_edges, const EnumerationBudget& budget) {
  if (d < 3) throw DomainError("hypergraph uniformity must be at least 3");
  if (max_edges < 0) throw DomainError("max_edges must be nonnegative");
  budget.Check(max_edges, "hypertree");
  Store& store = StoreFor(d);
  std::lock_guard<std::mutex> lock(store.mu);
  store.catalog.Grow(max_edges);
  std::vector<std::vector<HyperTreeCode>> out(max_edges + 1);
  for (int e = 0; e <= max_edges; ++e) {
    const auto [first, last] = store.catalog.TreeRange(e);
    for (int id = first; id < last; ++id) {
      const auto& node = store.catalog.trees()[id];
      out[e].push_back({d, node.code, e, node.aut});
    }
    std::sort(out[e].begin(), out[e].end(),
              [](const auto& a, const auto& b) { return a.code < b.code; });
  }
  return out;
}

std::vector<UnicycleShape> EnumerateUnicycles(int size,
                                              const EnumerationBudget& budget) {
  if (size < 3) throw DomainError("unicyclic graphs have at least 3 edges");
  budget.Check(size, "unicycle");
  Store& store = StoreFor(2);
  std::lock_guard<std::mutex> lock(store.mu);
  return SizeLocked(store, size);
}

std::vector<HyperUnicycleShape> EnumerateHyperUnicycles(
    int d, int size, const EnumerationBudget& budget) {
  if (d < 3) throw DomainError("hypergraph uniformity must be at least 3");
  if (size < 2) throw DomainError("hypergraph unicycles have at least 2 edges");
  budget.Check(size, "hypergraph unicycle");
  Store& store = StoreFor(d);
  std::lock_guard<std::mutex> lock(store.mu);
  return SizeLocked(store, size);
}

std::shared_ptr<const std::vector<UnicycleShape>> ConnectedUnicycles(
    int d, int max_size, const EnumerationBudget& budget) {
  CheckUniformity(d);
  budget.Check(max_size, "unicycle");
  Store& store = StoreFor(d);
  std::lock_guard<std::mutex> lock(store.mu);
  auto it = store.upto.find(max_size);
  if (it != store.upto.end()) return it->second;
  auto all = std::make_shared<std::vector<UnicycleShape>>();
  for (int k = 0; k <= max_size; ++k) {
    const auto& bucket = SizeLocked(store, k);
    all->insert(all->end(), bucket.begin(), bucket.end());
  }
  std::shared_ptr<const std::vector<UnicycleShape>> frozen = std::move(all);
  store.upto.emplace(max_size, frozen);
  return frozen;
}

FragmentTable::FragmentTable(
    int d, int max_size,
    std::shared_ptr<const std::vector<UnicycleShape>> components)
    : d_(d), max_size_(max_size), components_(std::move(components)) {
  const auto& comps = *components_;
  // Nondecreasing index sequences; index order is (size, code) so equal
  // parts are adjacent.
  std::vector<int> parts;
  std::vector<std::pair<std::string, Entry>> keyed;
  auto emit = [&](int size) {
    Entry entry;
    entry.parts = parts;
    entry.size = size;
    std::size_t i = 0;
    while (i < parts.size()) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      const int mult = static_cast<int>(j - i);
      entry.aut *= IntPow(comps[parts[i]].aut, mult) * Factorial(mult);
      i = j;
    }
    entries_.push_back(std::move(entry));
  };
  auto recurse = [&](auto&& self, int first, int size) -> void {
    emit(size);
    for (int i = first; i < static_cast<int>(comps.size()); ++i) {
      if (size + comps[i].size > max_size_) break;
      parts.push_back(i);
      self(self, i, size + comps[i].size);
      parts.pop_back();
    }
  };
  recurse(recurse, 0, 0);

  std::vector<std::string> codes(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) codes[i] = Code(i);
  std::vector<std::size_t> order(entries_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (entries_[a].size != entries_[b].size) {
      return entries_[a].size < entries_[b].size;
    }
    return codes[a] < codes[b];
  });
  std::vector<Entry> sorted;
  sorted.reserve(entries_.size());
  for (std::size_t i : order) sorted.push_back(std::move(entries_[i]));
  entries_ = std::move(sorted);
}

std::string FragmentTable::Code(std::size_t i) const {
  std::vector<std::string> codes;
  for (int part : entries_[i].parts) codes.push_back((*components_)[part].code);
  return FragmentCode(std::move(codes));
}

FragmentShape FragmentTable::Shape(std::size_t i) const {
  std::vector<UnicycleShape> comps;
  for (int part : entries_[i].parts) comps.push_back((*components_)[part]);
  return FragmentShape::FromComponents(d_, std::move(comps));
}

Rational FragmentTable::WeightedInverseAut(std::size_t i) const {
  return folimits::WeightedInverseAut(d_, entries_[i].size, entries_[i].aut);
}

FragmentTable EnumerateFragmentShapes(int d, int max_size,
                                      const EnumerationBudget& budget) {
  if (max_size < 0) throw DomainError("max_size must be nonnegative");
  return FragmentTable(d, max_size, ConnectedUnicycles(d, max_size, budget));
}

Rational InverseAutSum(int size, const EnumerationBudget& budget) {
  Rational sum = 0;
  for (const auto& shape : EnumerateUnicycles(size, budget)) {
    sum += Rational(BigInt(1), shape.aut);
  }
  return sum;
}

Rational WeightedInverseAutSum(int d, int size,
                               const EnumerationBudget& budget) {
  if (d == 2) return InverseAutSum(size, budget);
  Rational sum = 0;
  for (const auto& shape : EnumerateHyperUnicycles(d, size, budget)) {
    sum += shape.WeightedInverseAut();
  }
  return sum;
}

}  // namespace folimits
