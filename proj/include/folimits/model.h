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

#ifndef FOLIMITS_MODEL_H_
#define FOLIMITS_MODEL_H_

#include <string>

namespace folimits {

enum class ModelKind { kGraph, kHypergraph };

// The sparse random model G(n, c/n) or G^d(n, c/n^{d-1}).
//
// Graphs are handled as the uniformity-2 case throughout the library: the
// normalised density is x = c/(d-2)! (= c for graphs), the shortest cycle
// has 3 edges for graphs and 2 for hypergraphs, and a fragment H carries the
// weight s^|H| (d-2)!^|H| / aut(H) with s = x e^{-x}.
class ModelParams {
 public:
  static ModelParams Graph(double c);
  static ModelParams Hypergraph(int d, double c);
  // d == 2 selects the graph model.
  static ModelParams ForUniformity(int d, double c);

  ModelKind kind() const { return d_ == 2 ? ModelKind::kGraph : ModelKind::kHypergraph; }
  bool is_graph() const { return d_ == 2; }
  int uniformity() const { return d_; }
  double c() const { return c_; }

  // (d-2)!, the density at which the giant component appears.
  double critical_c() const { return critical_c_; }
  double x() const { return c_ / critical_c_; }
  double s() const;
  int min_cycle_length() const { return d_ == 2 ? 3 : 2; }
  bool subcritical() const { return x() < 1.0; }

  ModelParams WithC(double c) const { return ForUniformity(d_, c); }

  // Throws SupercriticalError naming `operation` unless x < 1.
  void RequireSubcritical(const char* operation) const;

  // "graph" or "hyper(d=3)".
  std::string Name() const;

 private:
  ModelParams(int d, double c);

  int d_;
  double c_;
  double critical_c_;
};

}  // namespace folimits

#endif  // FOLIMITS_MODEL_H_
