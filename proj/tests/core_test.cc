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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "ampc/core/rng.h"
#include "ampc/core/sampling.h"
#include "ampc/core/types.h"

namespace ampc {
namespace {

TEST(RngStream, SameSeedAndStreamRepeat) {
  RngStream a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RngStream, StreamsAndSplitsDiffer) {
  RngStream a(42, 7), b(42, 8);
  EXPECT_NE(a.NextU64(), b.NextU64());
  const RngStream base(1);
  RngStream s0 = base.Split(0), s1 = base.Split(1), s0_again = base.Split(0);
  const auto v0 = s0.NextU64();
  EXPECT_NE(v0, s1.NextU64());
  EXPECT_EQ(v0, s0_again.NextU64());
}

TEST(RngStream, SplitDoesNotAdvanceParent) {
  RngStream a(3), b(3);
  (void)a.Split(5);
  EXPECT_EQ(a.NextU64(), b.NextU64());
}

TEST(RngStream, UniformHistogramPassesChiSquare) {
  // A single seed fails a 95% test one time in twenty, so check the
  // rejection rate over many independent streams instead.
  constexpr int kBins = 10, kDraws = 10000, kSeeds = 200;
  int rejections = 0;
  for (int seed = 0; seed < kSeeds; ++seed) {
    RngStream rng(2024, seed);
    std::vector<int> counts(kBins, 0);
    for (int i = 0; i < kDraws; ++i) {
      const double u = rng.Uniform();
      ASSERT_GE(u, 0.0);
      ASSERT_LT(u, 1.0);
      ++counts[static_cast<int>(u * kBins)];
    }
    double chi2 = 0.0;
    const double expected = kDraws / static_cast<double>(kBins);
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    if (chi2 >= 16.919) ++rejections;  // 95% point of chi-square with 9 dof
  }
  EXPECT_LE(rejections, kSeeds / 10);
}

TEST(RngStream, NormalMoments) {
  RngStream rng(9);
  constexpr int kN = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double x = rng.Normal();
    sum += x;
    sq += x * x;
  }
  const double mean = sum / kN;
  EXPECT_NEAR(mean, 0.0, 4.0 / std::sqrt(kN));
  EXPECT_NEAR(sq / kN - mean * mean, 1.0, 0.02);
}

TEST(RngStream, IndexCoversRange) {
  RngStream rng(5);
  std::set<std::size_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = rng.Index(7);
    ASSERT_LT(k, 7u);
    seen.insert(k);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(StreamId, DistinctNames) {
  EXPECT_NE(StreamId("evaluate"), StreamId("worst-start"));
  EXPECT_EQ(StreamId("tpe"), StreamId("tpe"));
}

TEST(GammaFromMoments, Examples) {
  const GammaParams a = GammaFromMoments(1.0, 0.1);
  EXPECT_NEAR(a.shape, 100.0, 1e-9);
  EXPECT_NEAR(a.rate, 100.0, 1e-9);
  const GammaParams b = GammaFromMoments(2.0, 1.0);
  EXPECT_DOUBLE_EQ(b.shape, 4.0);
  EXPECT_DOUBLE_EQ(b.rate, 2.0);
}

TEST(GammaFromMoments, RoundTrip) {
  RngStream rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double mu = std::exp(rng.Uniform(std::log(0.01), std::log(100.0)));
    const double sigma = std::exp(rng.Uniform(std::log(0.01), std::log(100.0)));
    const GammaParams p = GammaFromMoments(mu, sigma);
    EXPECT_NEAR(p.shape / p.rate, mu, 1e-12 * mu);
    EXPECT_NEAR(std::sqrt(p.shape) / p.rate, sigma, 1e-12 * sigma);
  }
}

TEST(GammaFromMoments, RejectsNonPositive) {
  EXPECT_THROW(GammaFromMoments(0.0, 1.0), std::domain_error);
  EXPECT_THROW(GammaFromMoments(1.0, -1.0), std::domain_error);
}

TEST(SampleModelParams, MeanWithinThreeStandardErrors) {
  const ModelDistParams psi{{{1.0, 0.1}}};
  RngStream rng(123);
  constexpr int kN = 100000;
  double sum = 0.0;
  for (int i = 0; i < kN; ++i) {
    const auto theta = SampleModelParams(psi, rng);
    ASSERT_EQ(theta.size(), 1u);
    ASSERT_GT(theta[0], 0.0);
    sum += theta[0];
  }
  EXPECT_NEAR(sum / kN, 1.0, 3.0 * 0.1 / std::sqrt(kN));
}

TEST(SampleModelParams, ConcentratesAsSigmaVanishes) {
  const ModelDistParams psi{{{0.7, 1e-6}, {2.0, 1e-6}}};
  RngStream rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto theta = SampleModelParams(psi, rng);
    EXPECT_NEAR(theta[0], 0.7, 1e-4);
    EXPECT_NEAR(theta[1], 2.0, 1e-4);
  }
}

TEST(SampleModelParams, PositiveAndDeterministic) {
  const ModelDistParams psi{{{0.05, 0.5}, {3.0, 2.0}}};
  RngStream a(77), b(77);
  for (int i = 0; i < 1000; ++i) {
    const auto x = SampleModelParams(psi, a);
    const auto y = SampleModelParams(psi, b);
    EXPECT_EQ(x, y);
    for (double v : x) EXPECT_GT(v, 0.0);
  }
}

TEST(EmpiricalQuantile, TopThirtyPercentOfOneToTen) {
  std::vector<double> v(10);
  std::iota(v.begin(), v.end(), 1.0);
  const double tau = EmpiricalQuantile(v, 0.3);
  EXPECT_EQ(AssignLabels(v, tau), (std::vector<int>{0, 0, 0, 0, 0, 0, 0, 1, 1, 1}));
}

TEST(EmpiricalQuantile, ConstantVector) {
  const std::vector<double> v(6, 2.5);
  for (double g : {0.05, 0.3, 0.5, 0.95}) EXPECT_EQ(EmpiricalQuantile(v, g), 2.5);
}

TEST(EmpiricalQuantile, TwoValuesGiveOnePositive) {
  const std::vector<double> v = {1.0, 2.0};
  const auto z = AssignLabels(v, EmpiricalQuantile(v, 0.5));
  EXPECT_EQ(std::accumulate(z.begin(), z.end(), 0), 1);
  EXPECT_EQ(z[1], 1);
}

TEST(EmpiricalQuantile, EmptyThrows) {
  EXPECT_THROW(EmpiricalQuantile(std::vector<double>{}, 0.5), std::domain_error);
}

TEST(EmpiricalQuantile, MonotoneInGamma) {
  RngStream rng(4);
  std::vector<double> v(37);
  for (double& x : v) x = rng.Normal();
  double prev = EmpiricalQuantile(v, 0.01);
  for (double g = 0.02; g < 1.0; g += 0.01) {
    const double tau = EmpiricalQuantile(v, g);
    EXPECT_LE(tau, prev);
    prev = tau;
  }
}

TEST(AssignLabels, Examples) {
  const std::vector<double> v = {1, 2, 3, 4};
  EXPECT_EQ(AssignLabels(v, 3.0), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(AssignLabels(v, 1.0), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(AssignLabels(v, 5.0), (std::vector<int>{0, 0, 0, 0}));
}

TEST(AssignLabels, CountWithinOneOfCeilGammaN) {
  RngStream rng(10);
  for (int n = 2; n <= 60; ++n) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.Uniform();
    for (double g : {0.05, 0.1, 0.25, 0.5, 0.75, 0.95}) {
      const auto z = AssignLabels(v, EmpiricalQuantile(v, g));
      const int pos = std::accumulate(z.begin(), z.end(), 0);
      EXPECT_LE(std::abs(pos - static_cast<int>(std::ceil(g * n))), 1) << n << " " << g;
      EXPECT_GE(pos, 1);
      EXPECT_LE(pos, n - 1);
    }
  }
}

TEST(AssignLabels, BothClassesWithTies) {
  const std::vector<double> v = {1, 1, 1, 1, 2};
  for (double g : {0.05, 0.5, 0.95}) {
    const auto z = AssignLabels(v, EmpiricalQuantile(v, g));
    const int pos = std::accumulate(z.begin(), z.end(), 0);
    EXPECT_GE(pos, 1);
    EXPECT_LE(pos, 4);
  }
}

TEST(SearchSpace, NormalizeRoundTrip) {
  const SearchSpace s({{"lambda", 0.01, 50}, {"l_mu", 0.5, 1.6}});
  const std::vector<double> phys = {10.0, 1.0};
  const Point u = s.Normalize(phys);
  EXPECT_NEAR(u[0], (10.0 - 0.01) / 49.99, 1e-15);
  const auto back = s.Denormalize(u);
  EXPECT_NEAR(back[0], 10.0, 1e-12);
  EXPECT_NEAR(back[1], 1.0, 1e-12);
  EXPECT_EQ(s.IndexOf("l_mu"), 1u);
  EXPECT_FALSE(s.IndexOf("nope").has_value());
  EXPECT_EQ(s.Center(), (Point{0.5, 0.5}));
}

TEST(SearchSpace, RejectsBadBoxes) {
  EXPECT_THROW(SearchSpace({{"a", 1.0, 1.0}}), std::invalid_argument);
  EXPECT_THROW(SearchSpace({{"a", 0.0, 1.0}, {"a", 0.0, 2.0}}), std::invalid_argument);
}

TEST(SearchSpace, InUnitBox) {
  EXPECT_TRUE(SearchSpace::InUnitBox(std::vector<double>{0.0, 1.0, 0.5}));
  EXPECT_FALSE(SearchSpace::InUnitBox(std::vector<double>{-1e-9, 0.5}));
  EXPECT_FALSE(SearchSpace::InUnitBox(std::vector<double>{std::nan(""), 0.5}));
}

TEST(Validation, ControllerAndModelParams) {
  EXPECT_THROW((ControllerConfig{0.0, 1.0}.Validate()), std::invalid_argument);
  EXPECT_THROW((ControllerConfig{1.0, -1.0}.Validate()), std::invalid_argument);
  EXPECT_NO_THROW((ControllerConfig{1.0, 1.0}.Validate()));
  EXPECT_THROW((ModelDistParams{{{1.0, 0.0}}}.Validate()), std::invalid_argument);
  EXPECT_NO_THROW((ModelDistParams{{{1.0, 0.1}}}.Validate()));
}

TEST(Dataset, ArgMaxFirstOnTies) {
  Dataset d;
  d.Append({{0.1}, -3.0, {-3.0}});
  d.Append({{0.2}, 1.0, {1.0}});
  d.Append({{0.3}, 1.0, {1.0}});
  EXPECT_EQ(d.ArgMax(), 1u);
  EXPECT_EQ(d.Values(), (std::vector<double>{-3.0, 1.0, 1.0}));
  EXPECT_EQ(d.Points().size(), 3u);
}

}  // namespace
}  // namespace ampc
