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


#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

namespace oracle {
namespace {

// Partition as a cell index per vertex; cells are numbered in an
// isomorphism-invariant order.
std::vector<int> Refine(const ColoredGraph& g, std::vector<int> cells) {
  for (;;) {
    const int num_cells = *std::max_element(cells.begin(), cells.end()) + 1;
    std::vector<std::vector<int>> signature(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> counts(num_cells, 0);
      for (int u = 0; u < g.n; ++u) {
        if (g.adj[v][u]) ++counts[cells[u]];
      }
      signature[v] = {cells[v]};
      signature[v].insert(signature[v].end(), counts.begin(), counts.end());
    }
    std::vector<std::vector<int>> distinct(signature);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v) {
      next[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
          distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == num_cells) return next;
    cells = std::move(next);
  }
}

void Search(const ColoredGraph& g, const std::vector<int>& cells,
            Canon& best) {
  const int num_cells = *std::max_element(cells.begin(), cells.end()) + 1;
  if (num_cells == g.n) {
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[cells[v]] = v;
    std::string form;
    for (int i = 0; i < g.n; ++i) form += std::to_string(g.color[order[i]]) + ",";
    for (int i = 0; i < g.n; ++i) {
      for (int j = 0; j < g.n; ++j) form += g.adj[order[i]][order[j]] ? '1' : '0';
    }
    if (best.automorphisms == 0 || form < best.form) {
      best.form = form;
      best.automorphisms = 1;
    } else if (form == best.form) {
      ++best.automorphisms;
    }
    return;
  }
  // First cell with more than one vertex.
  std::vector<int> size(num_cells, 0);
  for (int c : cells) ++size[c];
  int target = 0;
  while (size[target] == 1) ++target;
  for (int v = 0; v < g.n; ++v) {
    if (cells[v] != target) continue;
    std::vector<int> split(g.n);
    for (int u = 0; u < g.n; ++u) {
      split[u] = 2 * cells[u] + (cells[u] == target && u != v ? 1 : 0);
    }
    // Renumber to 0..m-1 keeping order.
    std::vector<int> ids(split);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int& c : split) {
      c = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), c) -
                           ids.begin());
    }
    Search(g, Refine(g, split), best);
  }
}

bool Connected(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& e : edges) {
    for (std::size_t i = 1; i < e.size(); ++i) parent[find(e[0])] = find(e[i]);
  }
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

std::string Ahu(int v, int parent, const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> children;
  for (int u : adj[v]) {
    if (u != parent) children.push_back(Ahu(u, v, adj));
  }
  std::sort(children.begin(), children.end());
  std::string out = "0";
  for (const auto& c : children) out += c;
  return out + "1";
}

}  // namespace

Canon Canonical(const ColoredGraph& g) {
  std::vector<int> colors(g.color);
  std::vector<int> ids(colors);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int& c : colors) {
    c = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), c) -
                         ids.begin());
  }
  Canon best;
  Search(g, Refine(g, colors), best);
  return best;
}

ColoredGraph IncidenceGraph(int num_vertices,
                            const std::vector<std::vector<int>>& edges) {
  ColoredGraph g;
  g.n = num_vertices + static_cast<int>(edges.size());
  g.adj.assign(g.n, std::vector<char>(g.n, 0));
  g.color.assign(g.n, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int node = num_vertices + static_cast<int>(e);
    g.color[node] = 1;
    for (int v : edges[e]) g.adj[node][v] = g.adj[v][node] = 1;
  }
  return g;
}

std::vector<long> RootedTreeCounts(int max_n) {
  std::vector<long> counts;
  for (int n = 1; n <= max_n; ++n) {
    std::set<std::string> seen;
    if (n == 1) {
      counts.push_back(1);
      continue;
    }
    std::vector<int> seq(n - 2, 0);
    for (;;) {
      // Decode the Pruefer sequence.
      std::vector<int> degree(n, 1);
      for (int x : seq) ++degree[x];
      std::vector<std::vector<int>> adj(n);
      for (int x : seq) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        adj[leaf].push_back(x);
        adj[x].push_back(leaf);
        --degree[leaf];
        --degree[x];
      }
      int u = -1;
      for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) {
          if (u < 0) {
            u = v;
          } else {
            adj[u].push_back(v);
            adj[v].push_back(u);
          }
        }
      }
      for (int root = 0; root < n; ++root) seen.insert(Ahu(root, -1, adj));
      int i = 0;
      while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
      if (i == n - 2) break;
    }
    counts.push_back(static_cast<long>(seen.size()));
  }
  return counts;
}

std::map<std::string, LabeledClass> LabeledUnicyclicGraphs(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  }
  const int m = static_cast<int>(pairs.size());
  std::map<std::string, LabeledClass> classes;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > m) return classes;
  for (;;) {
    std::vector<std::vector<int>> edges;
    for (int i : pick) edges.push_back({pairs[i].first, pairs[i].second});
    if (Connected(k, edges)) {
      ColoredGraph g;
      g.n = k;
      g.adj.assign(k, std::vector<char>(k, 0));
      g.color.assign(k, 0);
      for (const auto& e : edges) g.adj[e[0]][e[1]] = g.adj[e[1]][e[0]] = 1;
      const Canon canon = Canonical(g);
      LabeledClass& entry = classes[canon.form];
      if (entry.labeled_copies++ == 0) {
        entry.representative = edges;
        entry.automorphisms = canon.automorphisms;
      }
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return classes;
}

std::vector<HyperClass> HyperUnicycles(int d, int k) {
  struct State {
    std::vector<std::vector<int>> edges;
    int num_vertices;
  };
  std::vector<State> level = {{{std::vector<int>(d)}, d}};
  std::iota(level[0].edges[0].begin(), level[0].edges[0].end(), 0);
  for (int size = 2; size <= k; ++size) {
    std::map<std::string, State> next;
    for (const State& state : level) {
      const int excess = (d - 1) * static_cast<int>(state.edges.size()) -
                         state.num_vertices;
      for (int shared = 1; shared <= 2; ++shared) {
        if (excess + shared - 1 > 0) continue;
        // Every `shared`-subset of existing vertices.
        std::vector<int> choice(shared);
        std::iota(choice.begin(), choice.end(), 0);
        const int n = state.num_vertices;
        if (shared > n) continue;
        for (;;) {
          std::vector<int> edge(choice);
          for (int j = 0; j < d - shared; ++j) edge.push_back(n + j);
          State grown{state.edges, n + d - shared};
          grown.edges.push_back(edge);
          const Canon canon =
              Canonical(IncidenceGraph(grown.num_vertices, grown.edges));
          next.emplace(canon.form, std::move(grown));
          int i = shared - 1;
          while (i >= 0 && choice[i] == n - shared + i) --i;
          if (i < 0) break;
          ++choice[i];
          for (int j = i + 1; j < shared; ++j) choice[j] = choice[j - 1] + 1;
        }
      }
    }
    level.clear();
    for (auto& [form, state] : next) level.push_back(std::move(state));
  }
  std::vector<HyperClass> out;
  for (const State& state : level) {
    if ((d - 1) * static_cast<int>(state.edges.size()) != state.num_vertices) {
      continue;
    }
    HyperClass c;
    c.edges = state.edges;
    c.num_vertices = state.num_vertices;
    c.automorphisms =
        Canonical(IncidenceGraph(state.num_vertices, state.edges))
            .automorphisms;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::pair<double, double>> SubsetSumRuns(
    const std::vector<double>& terms, double delta, double radius) {
  const std::size_t cells = static_cast<std::size_t>(std::ceil(1.0 / delta)) + 1;
  const std::size_t words = (cells + 63) / 64;
  std::vector<std::uint64_t> bits(words, 0);
  bits[0] = 1;
  for (double p : terms) {
    const std::size_t shift = static_cast<std::size_t>(std::llround(p / delta));
    if (shift == 0 || shift >= cells) continue;
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    for (std::size_t w = words; w-- > word_shift;) {
      std::uint64_t v = bits[w - word_shift] << bit_shift;
      if (bit_shift && w > word_shift) {
        v |= bits[w - word_shift - 1] >> (64 - bit_shift);
      }
      bits[w] |= v;
    }
  }
  std::vector<std::pair<double, double>> runs;
  for (std::size_t i = 0; i < cells; ++i) {
    if (!((bits[i / 64] >> (i % 64)) & 1)) continue;
    const double lo = std::max(0.0, i * delta - radius);
    const double hi = std::min(1.0, i * delta + radius);
    if (!runs.empty() && lo <= runs.back().second) {
      runs.back().second = std::max(runs.back().second, hi);
    } else {
      runs.emplace_back(lo, hi);
    }
  }
  return runs;
}

double CycleMassSeries(double x, int first) {
  double total = 0.0;
  for (int k = first; k < 100000; ++k) {
    const double term = std::pow(x, k) / (2.0 * k);
    total += term;
    if (term < 1e-20) break;
  }
  return total;
}

double UnicycleWeight(int k, int d) {
  double sum = 0.0;
  double term = 1.0;  // k^j / j!
  for (int j = 0; j <= k - 3; ++j) {
    sum += term;
    term *= static_cast<double>(k) / (j + 1);
  }
  double weight = sum / (2.0 * k);
  if (d >= 3) {
    weight += std::exp((k - 3) * std::log(static_cast<double>(k)) -
                       std::lgamma(k - 1.0)) /
              2.0;
  }
  return weight;
}

}  // namespace oracle
