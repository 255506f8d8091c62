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

#ifndef FOLIMITS_CANONICAL_H_
#define FOLIMITS_CANONICAL_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folimits/shapes.h"

namespace folimits {

// A labeled edge of a d-uniform hypergraph (d = 2 for graphs).
using LabeledEdge = std::vector<int>;

// Canonical shape of a labeled connected unicycle.
//
// Leaves are peeled until only the cycle remains, the trees hanging off each
// cycle vertex and each cycle edge are AHU-encoded, and the cyclic sequence
// is minimised over rotations and reflections. Isomorphic inputs give equal
// codes; the shape carries its exact automorphism count.
//
// Throws ClassificationError when the input is not a connected d-uniform
// hypergraph of excess 0 (or has repeated edges).
UnicycleShape CanonicalUnicycle(int d, std::span<const LabeledEdge> edges);

// Graph convenience overload.
UnicycleShape CanonicalUnicycle(std::span<const std::pair<int, int>> edges);

// A labeled hypergraph on vertices 0..n-1 realising a unicycle code; the
// inverse of CanonicalUnicycle up to relabeling.
std::vector<LabeledEdge> RealizeUnicycle(int d, const std::string& code);

// Number of vertices of each edge that lie in no other edge.
std::vector<int> FreeVertexCounts(std::span<const LabeledEdge> edges);

}  // namespace folimits

#endif  // FOLIMITS_CANONICAL_H_
