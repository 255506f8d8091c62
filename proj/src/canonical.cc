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

#include "folimits/canonical.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "folimits/catalog.h"
#include "folimits/codes.h"
#include "folimits/errors.h"
#include "folimits/necklace.h"

namespace folimits {
namespace {

struct Encoded {
  std::string code;
  BigInt aut;
};

class UnicycleEncoder {
 public:
  UnicycleEncoder(int d, std::span<const LabeledEdge> edges) : d_(d) {
    if (d < 2) throw DomainError("uniformity must be at least 2");
    if (edges.empty()) throw ClassificationError("empty edge set");
    Relabel(edges);
  }

  UnicycleShape Encode() {
    CheckConnectedUnicycle();
    FindCycle();
    std::vector<std::string> tokens;
    BigInt aut = 1;
    for (std::size_t i = 0; i < cycle_vertices_.size(); ++i) {
      const int v = cycle_vertices_[i];
      const int e = cycle_edges_[i];
      const int next = cycle_vertices_[(i + 1) % cycle_vertices_.size()];
      Encoded tree = Rooted(v, -1);
      std::vector<std::pair<std::string, BigInt>> bundle;
      for (int u : edges_[e]) {
        if (u == v || u == next) continue;
        Encoded t = Rooted(u, e);
        bundle.emplace_back(std::move(t.code), std::move(t.aut));
      }
      std::vector<std::string> bundle_codes;
      for (const auto& [code, part_aut] : bundle) bundle_codes.push_back(code);
      aut *= tree.aut * MultisetAut(bundle);
      tokens.push_back(std::move(tree.code));
      tokens.push_back(BundleCode(d_, std::move(bundle_codes)));
    }
    auto form = CanonicalNecklace<std::string>(tokens);
    UnicycleShape shape;
    shape.uniformity = d_;
    shape.cycle_length = static_cast<int>(cycle_edges_.size());
    shape.size = static_cast<int>(edges_.size());
    shape.aut = aut * form.stabilizer;
    shape.code = UnicycleCode(form.tokens);
    for (int i = 0; i < shape.cycle_length; ++i) {
      shape.vertex_attachments.push_back(std::move(form.tokens[2 * i]));
      shape.edge_attachments.push_back(std::move(form.tokens[2 * i + 1]));
    }
    return shape;
  }

 private:
  void Relabel(std::span<const LabeledEdge> edges) {
    std::unordered_map<int, int> index;
    std::set<std::vector<int>> seen;
    for (const auto& edge : edges) {
      if (static_cast<int>(edge.size()) != d_) {
        throw ClassificationError("edge with " + std::to_string(edge.size()) +
                                  " vertices in a " + std::to_string(d_) +
                                  "-uniform input");
      }
      std::vector<int> mapped;
      for (int label : edge) {
        auto [it, inserted] = index.emplace(label, num_vertices_);
        if (inserted) ++num_vertices_;
        mapped.push_back(it->second);
      }
      std::sort(mapped.begin(), mapped.end());
      if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) {
        throw ClassificationError("edge repeats a vertex");
      }
      if (!seen.insert(mapped).second) {
        throw ClassificationError("repeated edge");
      }
      edges_.push_back(std::move(mapped));
    }
    incident_.assign(num_vertices_, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      for (int v : edges_[e]) incident_[v].push_back(e);
    }
  }

  void CheckConnectedUnicycle() const {
    std::vector<bool> seen(num_vertices_, false);
    std::deque<int> queue = {0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int e : incident_[v]) {
        for (int u : edges_[e]) {
          if (!seen[u]) {
            seen[u] = true;
            ++reached;
            queue.push_back(u);
          }
        }
      }
    }
    if (reached != num_vertices_) {
      throw ClassificationError("input is disconnected");
    }
    const long excess =
        static_cast<long>(d_ - 1) * static_cast<long>(edges_.size()) -
        num_vertices_;
    if (excess != 0) {
      throw ClassificationError("input has excess " + std::to_string(excess) +
                                ", a unicycle has excess 0");
    }
  }

  // Peels leaf edges (at most one vertex shared with other edges) until the
  // cycle is left, then orders it as V_0 E_0 V_1 E_1 ...
  void FindCycle() {
    const int m = static_cast<int>(edges_.size());
    std::vector<int> degree(num_vertices_);
    for (int v = 0; v < num_vertices_; ++v) degree[v] = incident_[v].size();
    in_cycle_.assign(m, true);
    auto is_leaf = [&](int e) {
      int shared = 0;
      for (int v : edges_[e]) shared += degree[v] >= 2;
      return shared <= 1;
    };
    std::deque<int> queue;
    for (int e = 0; e < m; ++e) {
      if (is_leaf(e)) queue.push_back(e);
    }
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      if (!in_cycle_[e] || !is_leaf(e)) continue;
      in_cycle_[e] = false;
      for (int v : edges_[e]) {
        if (--degree[v] == 1) {
          for (int f : incident_[v]) {
            if (in_cycle_[f]) queue.push_back(f);
          }
        }
      }
    }
    int start = -1;
    for (int e = 0; e < m; ++e) {
      if (!in_cycle_[e]) continue;
      if (SharedVertices(e, degree).size() != 2) {
        throw ClassificationError("core is not a cycle");
      }
      if (start < 0) start = e;
    }
    if (start < 0) throw ClassificationError("no cycle found");

    int edge = start;
    int vertex = SharedVertices(start, degree)[0];
    do {
      cycle_vertices_.push_back(vertex);
      cycle_edges_.push_back(edge);
      const auto shared = SharedVertices(edge, degree);
      const int next_vertex = shared[0] == vertex ? shared[1] : shared[0];
      int next_edge = -1;
      for (int f : incident_[next_vertex]) {
        if (in_cycle_[f] && f != edge) next_edge = f;
      }
      vertex = next_vertex;
      edge = next_edge;
    } while (edge != start && edge >= 0 &&
             cycle_edges_.size() <= edges_.size());
    if (edge != start || vertex != cycle_vertices_[0]) {
      throw ClassificationError("cycle walk did not close");
    }
    const int min_len = d_ == 2 ? 3 : 2;
    if (static_cast<int>(cycle_edges_.size()) < min_len) {
      throw ClassificationError("cycle shorter than the minimum length");
    }
  }

  std::vector<int> SharedVertices(int e, const std::vector<int>& degree) const {
    std::vector<int> shared;
    for (int v : edges_[e]) {
      if (degree[v] >= 2) shared.push_back(v);
    }
    return shared;
  }

  // Tree hanging below `v`, ignoring `parent` and every cycle edge.
  Encoded Rooted(int v, int parent) const {
    std::vector<std::pair<std::string, BigInt>> branches;
    for (int e : incident_[v]) {
      if (e == parent || in_cycle_[e]) continue;
      std::vector<std::pair<std::string, BigInt>> children;
      for (int u : edges_[e]) {
        if (u == v) continue;
        Encoded child = Rooted(u, e);
        children.emplace_back(std::move(child.code), std::move(child.aut));
      }
      std::vector<std::string> child_codes;
      for (const auto& [code, aut] : children) child_codes.push_back(code);
      std::string code = BranchCode(d_, std::move(child_codes));
      branches.emplace_back(std::move(code), MultisetAut(std::move(children)));
    }
    std::vector<std::string> branch_codes;
    for (const auto& [code, aut] : branches) branch_codes.push_back(code);
    return {TreeCode(std::move(branch_codes)), MultisetAut(std::move(branches))};
  }

  const int d_;
  int num_vertices_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<bool> in_cycle_;
  std::vector<int> cycle_vertices_;
  std::vector<int> cycle_edges_;
};

// Builds labeled edges from tree / bundle codes.
class Realizer {
 public:
  explicit Realizer(int d) : d_(d) {}

  int NewVertex() { return next_++; }
  std::vector<LabeledEdge>& edges() { return edges_; }

  // `code` is a tree code "(" branch* ")" rooted at `root`.
  void Tree(const std::string& code, std::size_t& pos, int root) {
    Expect(code, pos, '(');
    while (code.at(pos) != ')') Branch(code, pos, root);
    ++pos;
  }

  // "{" tree^{d-2} "}" for the non-cycle vertices of a cycle edge; returns
  // the new vertices.
  std::vector<int> Bundle(const std::string& code) {
    std::vector<int> vertices;
    if (d_ == 2) return vertices;
    std::size_t pos = 0;
    Expect(code, pos, '{');
    while (code.at(pos) != '}') {
      const int v = NewVertex();
      vertices.push_back(v);
      Tree(code, pos, v);
    }
    if (static_cast<int>(vertices.size()) != d_ - 2) {
      throw DomainError("bundle with the wrong number of trees: " + code);
    }
    return vertices;
  }

 private:
  void Branch(const std::string& code, std::size_t& pos, int root) {
    LabeledEdge edge = {root};
    if (d_ == 2) {
      const int child = NewVertex();
      edge.push_back(child);
      edges_.push_back(edge);
      Tree(code, pos, child);
      return;
    }
    Expect(code, pos, '[');
    std::vector<std::pair<int, std::size_t>> children;
    while (code.at(pos) != ']') {
      const int child = NewVertex();
      edge.push_back(child);
      children.emplace_back(child, pos);
      SkipToken(code, pos);
    }
    ++pos;
    if (static_cast<int>(edge.size()) != d_) {
      throw DomainError("branch with the wrong number of children: " + code);
    }
    edges_.push_back(edge);
    for (auto [child, child_pos] : children) Tree(code, child_pos, child);
  }

  static void Expect(const std::string& code, std::size_t& pos, char ch) {
    if (pos >= code.size() || code[pos] != ch) {
      throw DomainError(std::string("malformed shape code, expected '") + ch +
                        "': " + code);
    }
    ++pos;
  }

  static void SkipToken(const std::string& code, std::size_t& pos) {
    int depth = 0;
    do {
      const char ch = code.at(pos++);
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      else --depth;
    } while (depth > 0);
  }

  const int d_;
  int next_ = 0;
  std::vector<LabeledEdge> edges_;
};

}  // namespace

std::vector<LabeledEdge> RealizeUnicycle(int d, const std::string& code) {
  const auto tokens = SplitUnicycleCode(d, code);
  const int len = static_cast<int>(tokens.size() / 2);
  if (len < (d == 2 ? 3 : 2)) throw DomainError("cycle too short: " + code);
  Realizer realizer(d);
  std::vector<int> shared(len);
  for (int i = 0; i < len; ++i) shared[i] = realizer.NewVertex();
  for (int i = 0; i < len; ++i) {
    std::size_t pos = 0;
    realizer.Tree(tokens[2 * i], pos, shared[i]);
    LabeledEdge edge = {shared[i], shared[(i + 1) % len]};
    for (int v : realizer.Bundle(tokens[2 * i + 1])) edge.push_back(v);
    realizer.edges().push_back(std::move(edge));
  }
  return std::move(realizer.edges());
}

std::vector<int> FreeVertexCounts(std::span<const LabeledEdge> edges) {
  std::unordered_map<int, int> degree;
  for (const auto& edge : edges) {
    for (int v : edge) ++degree[v];
  }
  std::vector<int> free;
  free.reserve(edges.size());
  for (const auto& edge : edges) {
    int count = 0;
    for (int v : edge) count += degree[v] == 1;
    free.push_back(count);
  }
  return free;
}

UnicycleShape CanonicalUnicycle(int d, std::span<const LabeledEdge> edges) {
  return UnicycleEncoder(d, edges).Encode();
}

UnicycleShape CanonicalUnicycle(std::span<const std::pair<int, int>> edges) {
  std::vector<LabeledEdge> labeled;
  labeled.reserve(edges.size());
  for (const auto& [a, b] : edges) labeled.push_back({a, b});
  return CanonicalUnicycle(2, labeled);
}

}  // namespace folimits
