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


#include <cmath>

#include <gtest/gtest.h>

#include "folimits/enumerate.h"
#include "folimits/errors.h"
#include "folimits/limits.h"
#include "folimits/model.h"
#include "oracles.h"

namespace folimits {
namespace {

TEST(CycleMass, MatchesSeriesOnGrid) {
  int points = 0;
  for (int d : {2, 3, 4, 5}) {
    for (double x : {0.05, 0.25, 0.5, 0.75, 0.9}) {
      const auto model = ModelParams::ForUniformity(d, x * std::tgamma(d - 1));
      const double series = oracle::CycleMassSeries(x, d == 2 ? 3 : 2);
      EXPECT_NEAR(CycleMass(model), series, 1e-12) << model.Name() << " x=" << x;
      ++points;
    }
  }
  EXPECT_EQ(points, 20);
}

TEST(CycleMass, KnownValues) {
  EXPECT_NEAR(CycleMass(ModelParams::Graph(0.5)), 0.0340736, 1e-7);
  EXPECT_NEAR(CycleMass(ModelParams::Hypergraph(3, 0.5)),
              0.5 * std::log(2.0) - 0.25, 1e-15);
  EXPECT_NEAR(CycleMass(ModelParams::Graph(1e-9)), 0.0, 1e-20);
  EXPECT_THROW(CycleMass(ModelParams::Graph(1.0)), SupercriticalError);
  EXPECT_THROW(CycleMass(ModelParams::Hypergraph(3, 1.2)), SupercriticalError);
}

TEST(AcyclicProbability, KnownValues) {
  EXPECT_NEAR(AcyclicProbability(ModelParams::Graph(0.5)), 0.96650, 1e-5);
  EXPECT_NEAR(AcyclicProbability(ModelParams::Hypergraph(3, 0.5)),
              std::exp(0.25) * std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(AcyclicProbability(ModelParams::Graph(1e-9)), 1.0, 1e-15);
  EXPECT_NEAR(AcyclicProbability(ModelParams::Hypergraph(4, 1e-9)), 1.0, 1e-15);
}

TEST(SolveC0, GraphAndHypergraph) {
  const auto g = SolveC0(2);
  EXPECT_GE(g.c0, 0.92);
  EXPECT_LE(g.c0, 0.94);
  EXPECT_LT(g.residual, 1e-12);
  const double r3 = SolveC0(3).ratio;
  EXPECT_NEAR(r3, 0.898, 1e-3);
  for (int d : {4, 5}) {
    const auto h = SolveC0(d);
    EXPECT_NEAR(h.ratio, r3, 1e-10) << "d=" << d;
    EXPECT_NEAR(h.c0, r3 * std::tgamma(d - 1), 1e-9);
    EXPECT_LT(h.residual, 1e-12);
  }
  EXPECT_THROW(SolveC0(1), DomainError);
}

TEST(CycleLambda, Values) {
  EXPECT_NEAR(CycleLambda(ModelParams::Graph(1.0), 3), 1.0 / 6, 1e-15);
  EXPECT_NEAR(CycleLambda(ModelParams::Hypergraph(3, 0.5), 2), 0.0625, 1e-15);
  EXPECT_NEAR(CycleLambda(ModelParams::Graph(1e-6), 5), 0.0, 1e-25);
  EXPECT_THROW(CycleLambda(ModelParams::Graph(0.5), 2), DomainError);
  EXPECT_THROW(CycleLambda(ModelParams::Hypergraph(3, 0.5), 1), DomainError);
  EXPECT_NEAR(CycleLambdaSum(ModelParams::Graph(0.5), 200),
              CycleMass(ModelParams::Graph(0.5)), 1e-15);
}

TEST(ShapeProbability, GraphTriangleAndPairs) {
  const auto model = ModelParams::Graph(0.5);
  const double s = 0.5 * std::exp(-0.5);
  EXPECT_NEAR(model.s(), 0.303265, 1e-6);
  const auto tri = EnumerateUnicycles(3)[0];
  const auto one = FragmentShape::FromComponents(2, {tri});
  EXPECT_NEAR(ShapeProbability(one, model), 0.96650 * std::pow(0.303265, 3) / 6,
              1e-6);
  EXPECT_NEAR(ShapeProbability(one, model), 0.004493, 1e-6);
  const auto two = FragmentShape::FromComponents(2, {tri, tri});
  EXPECT_NEAR(ShapeProbability(two, model),
              AcyclicProbability(model) * std::pow(s, 6) / 72, 1e-18);
  EXPECT_DOUBLE_EQ(ShapeProbability(FragmentShape::Empty(2), model),
                   AcyclicProbability(model));
}

TEST(ComponentLambda, Values) {
  const auto model = ModelParams::Graph(0.5);
  const double s = model.s();
  const auto tri = EnumerateUnicycles(3)[0];
  EXPECT_NEAR(ComponentLambda(tri, model), 0.0046485, 1e-7);
  for (const auto& shape : EnumerateUnicycles(4)) {
    if (shape.cycle_length == 4) {
      EXPECT_NEAR(ComponentLambda(shape, model), std::pow(s, 4) / 8, 1e-16);
    }
  }
  // Valid beyond the threshold too.
  EXPECT_GT(ComponentLambda(tri, ModelParams::Graph(2.0)), 0.0);
}

// Summing lambda_H over enumerated connected shapes approaches f; the gap is
// at most the tail bound.
TEST(ComponentLambda, SumApproachesCycleMass) {
  struct Case {
    int d;
    int max_size;
  };
  for (Case cs : {Case{2, 16}, Case{3, 10}, Case{4, 6}}) {
    const auto model = ModelParams::ForUniformity(cs.d, 0.5 * std::tgamma(cs.d - 1));
    double sum = 0.0;
    const auto shapes = ConnectedUnicycles(
        cs.d, cs.max_size, EnumerationBudget::ForUniformity(cs.d));
    for (const auto& shape : *shapes) sum += ComponentLambda(shape, model);
    const double f = CycleMass(model);
    const double tail = ComponentTailBound(model, cs.max_size);
    EXPECT_LE(sum, f + 1e-15) << model.Name();
    EXPECT_LE(f - sum, tail) << model.Name();
  }
}

// The same via the closed-form weights out to size 40.
TEST(ComponentLambda, LongTruncation) {
  const auto model = ModelParams::Graph(0.5);
  const double s = model.s();
  double sum = 0.0;
  for (int k = 3; k <= 40; ++k) sum += std::pow(s, k) * oracle::UnicycleWeight(k, 2);
  const double gap = CycleMass(model) - sum;
  EXPECT_GE(gap, 0.0);
  EXPECT_LE(gap, ComponentTailBound(model, 40));
  EXPECT_LT(gap, 1e-4);
}

TEST(Poisson, Values) {
  EXPECT_NEAR(PoissonCdf(2.0, 0), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(PoissonCdf(1.0, 1), 2.0 * std::exp(-1.0), 1e-15);
  EXPECT_EQ(PoissonCdf(0.0, 0), 1.0);
  EXPECT_EQ(PoissonCdf(0.0, 7), 1.0);
  double previous = 0.0;
  for (long a = 0; a < 200; ++a) {
    const double cdf = PoissonCdf(50.0, a);
    EXPECT_GE(cdf, previous);
    previous = cdf;
  }
  EXPECT_NEAR(previous, 1.0, 1e-13);
  EXPECT_NEAR(PoissonPmf(3.0, 2), 4.5 * std::exp(-3.0), 1e-15);
}

TEST(Normal, QuantileInvertsCdf) {
  for (double p : {0.001, 0.1, 0.25, 0.5, 0.75, 0.9, 0.999}) {
    EXPECT_NEAR(NormalCdf(NormalQuantile(p)), p, 1e-11);
  }
  EXPECT_NEAR(NormalQuantile(0.975), 1.959963985, 1e-8);
}

TEST(FoApproximation, MedianAtOneAndAHalf) {
  const auto model = ModelParams::Graph(1.5);
  const auto r = FoApproximation(0.5, 0.05, model);
  EXPECT_TRUE(r.certified);
  EXPECT_LT(std::abs(PoissonCdf(CycleLambdaSum(model, r.k), r.a) - 0.5), 0.05);
}

TEST(FoApproximation, RightTail) {
  const auto model = ModelParams::Graph(2.0);
  const auto r = FoApproximation(0.99, 0.01, model);
  EXPECT_TRUE(r.certified);
  EXPECT_GT(static_cast<double>(r.a), r.mu);
  EXPECT_LT(std::abs(PoissonCdf(r.mu, r.a) - 0.99), 0.01);
}

TEST(FoApproximation, Grid) {
  const auto model = ModelParams::Graph(1.5);
  for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const auto r = FoApproximation(p, 0.02, model);
    EXPECT_TRUE(r.certified) << p;
    EXPECT_DOUBLE_EQ(r.mu, CycleLambdaSum(model, r.k));
    EXPECT_LT(std::abs(PoissonCdf(r.mu, r.a) - p), 0.02) << p;
  }
}

TEST(FoApproximation, Errors) {
  EXPECT_THROW(FoApproximation(0.5, 0.05, ModelParams::Graph(0.5)), DomainError);
  EXPECT_THROW(FoApproximation(1.5, 0.05, ModelParams::Graph(1.5)), DomainError);
  EXPECT_THROW(FoApproximation(0.5, 0.0, ModelParams::Graph(1.5)), DomainError);
}

TEST(ModelParams, Validation) {
  EXPECT_THROW(ModelParams::Graph(-1.0), DomainError);
  EXPECT_THROW(ModelParams::Hypergraph(2, 0.5), DomainError);
  EXPECT_EQ(ModelParams::Hypergraph(4, 1.0).x(), 0.5);
  EXPECT_EQ(ModelParams::Graph(0.5).min_cycle_length(), 3);
  EXPECT_EQ(ModelParams::Hypergraph(3, 0.5).min_cycle_length(), 2);
}

}  // namespace
}  // namespace folimits
