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

#ifndef FOLIMITS_SHAPES_H_
#define FOLIMITS_SHAPES_H_

#include <string>
#include <vector>

#include "folimits/exact.h"

namespace folimits {

// Unlabeled rooted tree of a graph. `size` counts vertices.
struct RootedTreeCode {
  std::string code;
  int size = 1;
  BigInt aut = 1;
};

// Unlabeled vertex-rooted tree of a d-uniform hypergraph.
struct HyperTreeCode {
  int uniformity = 3;
  std::string code;
  int edge_count = 0;
  BigInt aut = 1;

  int vertex_count() const { return 1 + (uniformity - 1) * edge_count; }
  // (d-1)|E| - |V|; always -1 for a tree.
  int excess() const { return (uniformity - 1) * edge_count - vertex_count(); }
};

// Connected unlabeled unicycle: a cycle with rooted trees attached.
//
// `vertex_attachments[i]` is the tree hanging off the i-th cycle vertex and
// `edge_attachments[i]` the bundle of trees on the remaining d-2 vertices of
// the cycle edge after it (empty strings for graphs), both in the canonical
// rotation. `size` counts edges.
struct UnicycleShape {
  int uniformity = 2;
  int cycle_length = 0;
  std::vector<std::string> vertex_attachments;
  std::vector<std::string> edge_attachments;
  std::string code;
  int size = 0;
  BigInt aut = 1;

  int vertex_count() const { return (uniformity - 1) * size; }
  int excess() const { return (uniformity - 1) * size - vertex_count(); }
  // (d-2)!^|H| / aut(H); equals 1/aut(H) for graphs.
  Rational WeightedInverseAut() const;
};

using HyperUnicycleShape = UnicycleShape;

// Multiset of connected unicycles.
struct FragmentShape {
  int uniformity = 2;
  std::vector<UnicycleShape> components;  // sorted by code
  int size = 0;
  BigInt aut = 1;
  std::string code;

  // Sorts the components and derives size, aut and code.
  static FragmentShape FromComponents(int d,
                                      std::vector<UnicycleShape> components);
  static FragmentShape Empty(int d) { return FromComponents(d, {}); }

  bool empty() const { return components.empty(); }
  Rational WeightedInverseAut() const;
};

using HyperFragmentShape = FragmentShape;

// (d-2)!^size / aut.
Rational WeightedInverseAut(int d, int size, const BigInt& aut);

}  // namespace folimits

#endif  // FOLIMITS_SHAPES_H_
