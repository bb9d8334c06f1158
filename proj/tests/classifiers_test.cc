// Copyright 2026 The ampc Authors.
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
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "ampc/classifiers/mlp.h"
#include "ampc/classifiers/random_forest.h"
#include "ampc/core/rng.h"
#include "oracles.h"

namespace ampc {
namespace {

LabelledSet Clusters(RngStream& rng, int n = 50) {
  LabelledSet s;
  for (int i = 0; i < n; ++i) {
    const int z = i % 2;
    s.x.push_back({(z ? 0.9 : 0.1) + rng.Uniform(-0.05, 0.05)});
    s.z.push_back(z);
  }
  return s;
}

LabelledSet Xor(RngStream& rng, int n = 200) {
  LabelledSet s;
  for (int i = 0; i < n; ++i) {
    const double a = rng.Uniform(), b = rng.Uniform();
    s.x.push_back({a, b});
    s.z.push_back((a > 0.5) != (b > 0.5) ? 1 : 0);
  }
  return s;
}

TEST(LabelledSet, Validation) {
  EXPECT_THROW((LabelledSet{{{0.1}}, {}}.Validate()), std::invalid_argument);
  EXPECT_THROW((LabelledSet{{{0.1}, {0.1, 0.2}}, {0, 1}}.Validate()), std::invalid_argument);
  EXPECT_THROW((LabelledSet{{{0.1}}, {2}}.Validate()), std::invalid_argument);
  const LabelledSet ok{{{0.1}, {0.2}, {0.3}}, {0, 1, 1}};
  EXPECT_NO_THROW(ok.Validate());
  EXPECT_EQ(ok.Positives(), 2u);
  EXPECT_TRUE(ok.HasBothClasses());
}

TEST(RandomForest, SingleClassIsConstant) {
  RandomForest rf;
  RngStream rng(1);
  rf.Fit({{{0.1, 0.2}, {0.5, 0.5}, {0.9, 0.3}}, {1, 1, 1}}, rng);
  RngStream q(2);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(rf.PredictProba(std::vector<double>{q.Uniform(), q.Uniform()}), 1.0);
  }
}

TEST(RandomForest, SeparatesClusters) {
  RngStream rng(3);
  const LabelledSet data = Clusters(rng);
  RandomForest rf;
  rf.Fit(data, rng);
  EXPECT_GT(rf.PredictProba(std::vector<double>{0.9}), 0.9);
  EXPECT_LT(rf.PredictProba(std::vector<double>{0.1}), 0.1);
}

TEST(RandomForest, PredictionIsMeanOfTrees) {
  RngStream rng(4);
  const LabelledSet data = Xor(rng, 80);
  RandomForest rf;
  rf.Fit(data, rng);
  ASSERT_EQ(rf.trees().size(), 50u);
  RngStream q(5);
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> x = {q.Uniform(), q.Uniform()};
    double mean = 0.0;
    for (const auto& t : rf.trees()) mean += t.Predict(x);
    EXPECT_NEAR(rf.PredictProba(x), mean / 50.0, 1e-15);
  }
}

TEST(RandomForest, RangeDeterminismAndDepth) {
  RngStream rng(6);
  const LabelledSet data = Xor(rng, 150);
  RandomForest a, b;
  RngStream ra(7), rb(7);
  a.Fit(data, ra);
  b.Fit(data, rb);
  RngStream q(8);
  for (int i = 0; i < 1000; ++i) {
    const std::vector<double> x = {q.Uniform(-0.5, 1.5), q.Uniform(-0.5, 1.5)};
    const double p = a.PredictProba(x);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
    EXPECT_EQ(p, a.PredictProba(x));
    EXPECT_EQ(p, b.PredictProba(x));
  }
  for (const auto& t : a.trees()) EXPECT_LE(t.Depth(), 16);
}

TEST(RandomForest, DuplicatedTrainingSetGivesSimilarPredictions) {
  RngStream rng(9);
  const LabelledSet data = Xor(rng, 200);
  LabelledSet doubled = data;
  doubled.x.insert(doubled.x.end(), data.x.begin(), data.x.end());
  doubled.z.insert(doubled.z.end(), data.z.begin(), data.z.end());
  RandomForest a, b;
  RngStream ra(10), rb(10);
  a.Fit(data, ra);
  b.Fit(doubled, rb);
  double mae = 0.0;
  int n = 0;
  for (double u = 0.05; u < 1.0; u += 0.1) {
    for (double v = 0.05; v < 1.0; v += 0.1, ++n) {
      const std::vector<double> x = {u, v};
      mae += std::abs(a.PredictProba(x) - b.PredictProba(x));
    }
  }
  EXPECT_LT(mae / n, 0.1);
}

TEST(RandomForest, UnfittedThrows) {
  RandomForest rf;
  EXPECT_THROW(rf.PredictProba(std::vector<double>{0.5}), std::logic_error);
}

TEST(Mlp, GradientMatchesFiniteDifferences) {
  RngStream rng(11);
  const LabelledSet data = Xor(rng, 40);
  Mlp mlp;
  mlp.Initialize(2, rng);
  // Move away from the initial point so biases are not all zero.
  for (double& p : mlp.params()) p += 0.05 * rng.Normal();
  std::vector<double> grad;
  mlp.LossAndGradient(data.x, data.z, &grad);
  ASSERT_EQ(grad.size(), mlp.params().size());
  auto loss = [&](const std::vector<double>& p) {
    Mlp copy = mlp;
    copy.params() = p;
    return copy.LossAndGradient(data.x, data.z, nullptr);
  };
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::size_t> slice;
    for (int i = 0; i < 10; ++i) slice.push_back(rng.Index(grad.size()));
    EXPECT_LE(oracles::MaxRelativeGradientError(loss, mlp.params(), grad, slice, 1e-5), 1e-4);
  }
}

TEST(Mlp, GradientVanishesBySymmetry) {
  Mlp mlp;
  RngStream rng(12);
  mlp.Initialize(2, rng);
  std::fill(mlp.params().begin(), mlp.params().end(), 0.0);
  const std::vector<Point> x = {{0.1, 0.2}, {0.7, 0.4}, {0.3, 0.9}, {0.8, 0.8}};
  const std::vector<int> z = {0, 1, 0, 1};
  std::vector<double> grad;
  const double loss = mlp.LossAndGradient(x, z, &grad);
  EXPECT_NEAR(loss, std::log(2.0), 1e-15);
  for (double g : grad) EXPECT_EQ(g, 0.0);
}

TEST(Mlp, GradientVanishesAtPerfectPrediction) {
  Mlp mlp;
  RngStream rng(13);
  mlp.Initialize(3, rng);
  std::fill(mlp.params().begin(), mlp.params().end(), 0.0);
  mlp.params().back() = 30.0;  // output bias: p = sigmoid(30)
  const std::vector<Point> x = {{0.1, 0.2, 0.3}, {0.9, 0.1, 0.5}};
  const std::vector<int> z = {1, 1};
  std::vector<double> grad;
  mlp.LossAndGradient(x, z, &grad);
  double norm = 0.0;
  for (double g : grad) norm += g * g;
  EXPECT_LT(std::sqrt(norm), 1e-6);
}

TEST(Mlp, LearnsXor) {
  RngStream rng(14);
  const LabelledSet data = Xor(rng, 200);
  Mlp mlp;
  mlp.Fit(data, rng);
  int correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    correct += (mlp.PredictProba(data.x[i]) >= 0.5 ? 1 : 0) == data.z[i];
  }
  EXPECT_GE(correct / 200.0, 0.95);
  ASSERT_EQ(mlp.loss_history().size(), 1000u);
  for (double l : mlp.loss_history()) EXPECT_TRUE(std::isfinite(l));
}

TEST(Mlp, DeterministicWeights) {
  RngStream r(15);
  const LabelledSet data = Xor(r, 60);
  MlpOptions opts;
  opts.epochs = 50;
  Mlp a(opts), b(opts);
  RngStream ra(16), rb(16);
  a.Fit(data, ra);
  b.Fit(data, rb);
  EXPECT_EQ(a.params(), b.params());
}

TEST(Mlp, SingleClassIsClassRate) {
  Mlp mlp;
  RngStream rng(17);
  mlp.Fit({{{0.1}, {0.4}}, {0, 0}}, rng);
  EXPECT_EQ(mlp.PredictProba(std::vector<double>{0.7}), 0.0);
}

TEST(Mlp, OutputInUnitInterval) {
  RngStream rng(18);
  MlpOptions opts;
  opts.epochs = 20;
  Mlp mlp(opts);
  mlp.Fit(Xor(rng, 100), rng);
  for (int i = 0; i < 1000; ++i) {
    const double p = mlp.PredictProba(std::vector<double>{rng.Uniform(-5, 5), rng.Uniform(-5, 5)});
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

// The BORE premise: pi(x) / gamma recovers the gamma-relative density ratio.
TEST(DensityRatio, RandomForestRecoversRatio) {
  const oracles::DensityRatioTask task;
  RngStream rng(19);
  const LabelledSet data = task.Sample(rng);
  RandomForestOptions opts;
  opts.min_samples_leaf = 200;  // fully grown trees are too noisy here
  RandomForest rf(opts);
  rf.Fit(data, rng);
  EXPECT_LE(task.MeanAbsError(rf), 0.1);
}

TEST(DensityRatio, MlpRecoversRatio) {
  const oracles::DensityRatioTask task;
  RngStream rng(20);
  const LabelledSet data = task.Sample(rng);
  Mlp mlp;
  mlp.Fit(data, rng);
  EXPECT_LE(task.MeanAbsError(mlp), 0.1);
}

}  // namespace
}  // namespace ampc
