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

#ifndef FOLIMITS_NECKLACE_H_
#define FOLIMITS_NECKLACE_H_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace folimits {

// A cycle of length L is written as the alternating sequence
//   V_0 E_0 V_1 E_1 ... V_{L-1} E_{L-1}
// where V_i describes what hangs off the i-th cycle vertex and E_i what
// hangs off the other vertices of the cycle edge joining V_i and V_{i+1}.
// The symmetries of the cycle are the 2L dihedral maps of this length-2L
// sequence that send vertex slots to vertex slots: the even rotations and the
// reflections j -> (r - j) mod 2L with r even.
template <typename Token>
struct NecklaceForm {
  std::vector<Token> tokens;  // lexicographically least image
  int stabilizer = 0;         // dihedral maps fixing the input sequence
};

namespace internal {

// Writes the image of `tokens` under dihedral map `g` into `out`.
// g < n/2 are rotations by 2g, the rest reflections through 2(g - n/2).
template <typename Token>
void ApplyDihedral(std::span<const Token> tokens, std::size_t g,
                   std::vector<Token>& out) {
  const std::size_t n = tokens.size();
  const std::size_t half = n / 2;
  out.resize(n);
  if (g < half) {
    const std::size_t shift = 2 * g;
    for (std::size_t j = 0; j < n; ++j) out[j] = tokens[(j + shift) % n];
  } else {
    const std::size_t r = 2 * (g - half);
    for (std::size_t j = 0; j < n; ++j) out[j] = tokens[(r + n - j) % n];
  }
}

}  // namespace internal

template <typename Token>
NecklaceForm<Token> CanonicalNecklace(std::span<const Token> tokens) {
  NecklaceForm<Token> form;
  form.tokens.assign(tokens.begin(), tokens.end());
  const std::size_t group_order = tokens.size();  // 2L
  std::vector<Token> image;
  for (std::size_t g = 0; g < group_order; ++g) {
    internal::ApplyDihedral(tokens, g, image);
    if (std::equal(image.begin(), image.end(), tokens.begin())) {
      ++form.stabilizer;
    }
    if (image < form.tokens) form.tokens = image;
  }
  return form;
}

// True when `tokens` is its own least image; fills the stabilizer size.
template <typename Token>
bool IsCanonicalNecklace(std::span<const Token> tokens, int* stabilizer) {
  const std::size_t group_order = tokens.size();
  std::vector<Token> image;
  int fixed = 0;
  for (std::size_t g = 0; g < group_order; ++g) {
    internal::ApplyDihedral(tokens, g, image);
    const auto cmp = std::lexicographical_compare_three_way(
        image.begin(), image.end(), tokens.begin(), tokens.end());
    if (cmp < 0) return false;
    if (cmp == 0) ++fixed;
  }
  if (stabilizer != nullptr) *stabilizer = fixed;
  return true;
}

}  // namespace folimits

#endif  // FOLIMITS_NECKLACE_H_
