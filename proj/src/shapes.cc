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

#include "folimits/shapes.h"

#include <algorithm>
#include <utility>

#include "folimits/catalog.h"
#include "folimits/codes.h"

namespace folimits {

Rational WeightedInverseAut(int d, int size, const BigInt& aut) {
  return Rational(IntPow(Factorial(d - 2), size), aut);
}

Rational UnicycleShape::WeightedInverseAut() const {
  return folimits::WeightedInverseAut(uniformity, size, aut);
}

FragmentShape FragmentShape::FromComponents(
    int d, std::vector<UnicycleShape> components) {
  std::sort(components.begin(), components.end(),
            [](const UnicycleShape& a, const UnicycleShape& b) {
              return a.code < b.code;
            });
  FragmentShape shape;
  shape.uniformity = d;
  std::vector<std::pair<std::string, BigInt>> parts;
  std::vector<std::string> codes;
  for (const auto& c : components) {
    shape.size += c.size;
    parts.emplace_back(c.code, c.aut);
    codes.push_back(c.code);
  }
  shape.aut = MultisetAut(std::move(parts));
  shape.code = FragmentCode(std::move(codes));
  shape.components = std::move(components);
  return shape;
}

Rational FragmentShape::WeightedInverseAut() const {
  return folimits::WeightedInverseAut(uniformity, size, aut);
}

}  // namespace folimits
