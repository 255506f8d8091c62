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


#ifndef FOLIMITS_LIMITS_H_
#define FOLIMITS_LIMITS_H_

#include "folimits/exact.h"
#include "folimits/model.h"
#include "folimits/shapes.h"

namespace folimits {

// Limiting expected number of cycles of all lengths,
//   f = sum_{k >= min_cycle_length} x^k / (2k).
// Throws SupercriticalError unless x < 1.
double CycleMass(const ModelParams& model);

// Limiting probability that the random (hyper)graph has no cycle, e^{-f}.
double AcyclicProbability(const ModelParams& model);

struct C0Result {
  int uniformity = 2;
  double c0 = 0.0;        // root of AcyclicProbability(c) = 1/2
  double ratio = 0.0;     // c0 / (d-2)!
  double residual = 0.0;  // |e^{-f(c0)} - 1/2|
  int iterations = 0;
};

// Bisection on (0, (d-2)!).
C0Result SolveC0(int d);

// Poisson mean x^k / (2k) of the number of k-cycles. Throws DomainError if
// k is below the minimum cycle length.
double CycleLambda(const ModelParams& model, int k);

// Sum of CycleLambda over min_cycle_length..k.
double CycleLambdaSum(const ModelParams& model, int k);

// Limiting probability that the fragment is isomorphic to a shape of the
// given size and weight (d-2)!^size / aut:  e^{-f} s^size weight.
double ShapeProbability(const ModelParams& model, int size,
                        const Rational& weighted_inverse_aut);
double ShapeProbability(const FragmentShape& shape, const ModelParams& model);

// Poisson mean (c e^{-x})^|H| / aut(H) of the number of components
// isomorphic to a connected unicycle H. Valid for every c >= 0.
double ComponentLambda(const UnicycleShape& shape, const ModelParams& model);

// Upper bound on the expected number of unicyclic components with more
// than `max_size` edges: sum_{k > max_size} (x e^{1-x})^k e^{x/2}.
double ComponentTailBound(const ModelParams& model, int max_size);

// P(Po(lambda) <= a), summed in log space with compensation.
double PoissonCdf(double lambda, long a);
double PoissonPmf(double lambda, long j);

double NormalCdf(double z);
// Bisection on NormalCdf to about 1e-12; p in (0, 1).
double NormalQuantile(double p);

struct ApproxResult {
  int k = 0;             // longest cycle length counted
  long a = 0;            // at most a cycles of length <= k
  double mu = 0.0;       // CycleLambdaSum(model, k)
  double achieved = 0.0;  // PoissonCdf(mu, a)
  double error = 0.0;    // |achieved - p|
  bool certified = false;
};

// Finds (k, a) with |P(Po(mu_k) <= a) - p| < eps for a model with
// x >= 1. For each k from the minimum cycle length the scan starts at
// a = round(mu_k + Phi^{-1}(p) sqrt(mu_k)) and widens locally. Past `k_cap`
// the best pair seen is returned with certified = false.
ApproxResult FoApproximation(double p, double eps, const ModelParams& model,
                             int k_cap = 4096);

}  // namespace folimits

#endif  // FOLIMITS_LIMITS_H_
