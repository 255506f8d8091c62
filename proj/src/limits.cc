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


#include "folimits/limits.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "folimits/errors.h"

namespace folimits {
namespace {

// Neumaier compensated sum.
class Accumulator {
 public:
  void Add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double CycleMassOfRatio(double x, bool graph) {
  const double f = -0.5 * std::log1p(-x) - 0.5 * x;
  return graph ? f - 0.25 * x * x : f;
}

}  // namespace

double CycleMass(const ModelParams& model) {
  model.RequireSubcritical("f");
  return CycleMassOfRatio(model.x(), model.is_graph());
}

double AcyclicProbability(const ModelParams& model) {
  return std::exp(-CycleMass(model));
}

C0Result SolveC0(int d) {
  const bool graph = d == 2;
  const ModelParams probe = ModelParams::ForUniformity(d, 0.0);
  double lo = 0.0;
  double hi = 1.0;
  C0Result result;
  result.uniformity = d;
  // e^{-f(x)} - 1/2 decreases from 1/2 at x = 0 to -1/2 as x -> 1.
  while (hi - lo > 0.0 && result.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++result.iterations;
    if (std::exp(-CycleMassOfRatio(mid, graph)) > 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double lo_res = std::fabs(std::exp(-CycleMassOfRatio(lo, graph)) - 0.5);
  const double hi_res = std::fabs(std::exp(-CycleMassOfRatio(hi, graph)) - 0.5);
  result.ratio = lo_res <= hi_res ? lo : hi;
  result.residual = std::min(lo_res, hi_res);
  result.c0 = result.ratio * probe.critical_c();
  return result;
}

double CycleLambda(const ModelParams& model, int k) {
  if (k < model.min_cycle_length()) {
    throw DomainError("cycle length " + std::to_string(k) +
                      " is below the minimum " +
                      std::to_string(model.min_cycle_length()));
  }
  return std::pow(model.x(), k) / (2.0 * k);
}

double CycleLambdaSum(const ModelParams& model, int k) {
  Accumulator acc;
  for (int i = model.min_cycle_length(); i <= k; ++i) {
    acc.Add(CycleLambda(model, i));
  }
  return acc.value();
}

double ShapeProbability(const ModelParams& model, int size,
                        const Rational& weighted_inverse_aut) {
  return AcyclicProbability(model) * std::pow(model.s(), size) *
         ToDouble(weighted_inverse_aut);
}

double ShapeProbability(const FragmentShape& shape, const ModelParams& model) {
  if (shape.uniformity != model.uniformity()) {
    throw DomainError("shape and model have different uniformity");
  }
  return ShapeProbability(model, shape.size, shape.WeightedInverseAut());
}

double ComponentLambda(const UnicycleShape& shape, const ModelParams& model) {
  if (shape.uniformity != model.uniformity()) {
    throw DomainError("shape and model have different uniformity");
  }
  return std::pow(model.s(), shape.size) * ToDouble(shape.WeightedInverseAut());
}

double ComponentTailBound(const ModelParams& model, int max_size) {
  model.RequireSubcritical("component tail bound");
  const double x = model.x();
  const double q = x * std::exp(1.0 - x);
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return std::exp(x / 2.0) * std::pow(q, max_size + 1) / (1.0 - q);
}

double PoissonPmf(double lambda, long j) {
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw DomainError("Poisson mean must be finite and nonnegative");
  }
  if (j < 0) return 0.0;
  if (lambda == 0.0) return j == 0 ? 1.0 : 0.0;
  return std::exp(-lambda + j * std::log(lambda) - std::lgamma(j + 1.0));
}

double PoissonCdf(double lambda, long a) {
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw DomainError("Poisson mean must be finite and nonnegative");
  }
  if (a < 0) return 0.0;
  if (lambda == 0.0) return 1.0;
  // Terms beyond lambda + 40 sqrt(lambda) + 50 are below double precision.
  const double far = lambda + 40.0 * std::sqrt(lambda) + 50.0;
  if (static_cast<double>(a) > far) return 1.0;
  Accumulator acc;
  for (long j = 0; j <= a; ++j) acc.Add(PoissonPmf(lambda, j));
  return std::min(1.0, acc.value());
}

double NormalCdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double NormalQuantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal quantile needs p in (0, 1)");
  }
  double lo = -40.0;
  double hi = 40.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (NormalCdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ApproxResult FoApproximation(double p, double eps, const ModelParams& model,
                             int k_cap) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0, 1)");
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (model.x() < 1.0) {
    throw DomainError("the cycle-count approximation needs c >= (d-2)!, got " +
                      model.Name() + " c = " + std::to_string(model.c()));
  }
  if (k_cap < model.min_cycle_length()) {
    throw DomainError("k cap is below the minimum cycle length");
  }
  const double z = NormalQuantile(p);
  ApproxResult best;
  best.error = std::numeric_limits<double>::infinity();
  Accumulator mu;
  for (int k = model.min_cycle_length(); k <= k_cap; ++k) {
    mu.Add(CycleLambda(model, k));
    const double m = mu.value();
    if (!std::isfinite(m)) break;
    const double sd = std::sqrt(m);
    const long center = std::max(0L, std::lround(m + z * sd));
    const long width = static_cast<long>(std::ceil(3.0 * sd)) + 2;
    for (long a = std::max(0L, center - width); a <= center + width; ++a) {
      const double cdf = PoissonCdf(m, a);
      const double err = std::fabs(cdf - p);
      if (err < best.error) {
        best = {k, a, m, cdf, err, false};
      }
    }
    if (best.error < eps) {
      best.certified = true;
      return best;
    }
  }
  return best;
}

}  // namespace folimits
