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

#include "folimits/model.h"

#include <cmath>
#include <string>

#include "folimits/errors.h"

namespace folimits {

ModelParams::ModelParams(int d, double c) : d_(d), c_(c), critical_c_(1.0) {
  if (d < 2) throw DomainError("uniformity must be at least 2");
  if (d > 20) throw DomainError("uniformity above 20 is not supported");
  if (!std::isfinite(c) || c < 0.0) {
    throw DomainError("edge density c must be finite and nonnegative");
  }
  for (int i = 2; i <= d - 2; ++i) critical_c_ *= i;
}

ModelParams ModelParams::Graph(double c) { return ModelParams(2, c); }

ModelParams ModelParams::Hypergraph(int d, double c) {
  if (d < 3) throw DomainError("hypergraph uniformity must be at least 3");
  return ModelParams(d, c);
}

ModelParams ModelParams::ForUniformity(int d, double c) {
  return ModelParams(d, c);
}

double ModelParams::s() const {
  const double xv = x();
  return xv * std::exp(-xv);
}

void ModelParams::RequireSubcritical(const char* operation) const {
  if (!subcritical()) {
    throw SupercriticalError(std::string(operation) +
                             " requires c/(d-2)! < 1, got c = " +
                             std::to_string(c_) + " for " + Name());
  }
}

std::string ModelParams::Name() const {
  if (d_ == 2) return "graph";
  return "hyper(d=" + std::to_string(d_) + ")";
}

}  // namespace folimits
