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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "ampc/envs/episode.h"
#include "ampc/harness/config.h"
#include "ampc/harness/experiment.h"

namespace ampc {
namespace {

namespace fs = std::filesystem;

// A pendulum setup small enough to run many times per test.
constexpr const char* kTiny = R"(
[experiment]
env = pendulum
optimizers = random, bore-rf
iterations = 4
episodes = 2
steps = 20
seeds = 0, 1
start_at_worst = true
worst_scan_points = 5

[mppi]
horizon = 5
rollouts = 8

[search]
lambda = 0.01, 50
sigma_eps = 1, 10
l_mu = 0.5, 1.6
l_sigma = 0.001, 0.1
)";

ExperimentConfig Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseConfig(in);
}

fs::path TempDir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ampc_harness_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(Config, ParsesTinyConfig) {
  const ExperimentConfig c = Parse(kTiny);
  EXPECT_EQ(c.env, "pendulum");
  EXPECT_EQ(c.iterations, 4);
  EXPECT_EQ(c.episodes, 2);
  EXPECT_EQ(c.mppi.horizon, 5);
  EXPECT_EQ(c.space.size(), 4u);
  EXPECT_EQ(c.space[0].name, "lambda");
  EXPECT_EQ(c.seeds.size(), 2u);
  EXPECT_EQ(c.optimizers.size(), 2u);
}

TEST(Config, PresetsLoad) {
  for (const char* name : {"pendulum.ini", "planar.ini"}) {
    const ExperimentConfig c = LoadConfig(std::string(AMPC_CONFIG_DIR) + "/" + name);
    EXPECT_NO_THROW(c.Validate()) << name;
  }
}

TEST(Config, RejectsUnknownKeysAndSections) {
  EXPECT_THROW(Parse(std::string(kTiny) + "\n[bogus]\nx = 1\n"), std::invalid_argument);
  EXPECT_THROW(Parse(std::string(kTiny) + "\n[mppi]\nhorizn = 3\n"), std::invalid_argument);
}

TEST(Config, RequiresEveryDimensionExactlyOnce) {
  std::string missing = kTiny;
  missing.replace(missing.find("l_sigma"), std::string("l_sigma = 0.001, 0.1").size(), "");
  EXPECT_THROW(Parse(missing), std::invalid_argument);
  // Fixing it instead is fine; fixing and searching it is not.
  EXPECT_NO_THROW(Parse(missing + "\n[fixed]\nl_sigma = 0.01\n"));
  EXPECT_THROW(Parse(std::string(kTiny) + "\n[fixed]\nl_sigma = 0.01\n"), std::invalid_argument);
}

TEST(Config, RejectsBadValues) {
  std::string bad = kTiny;
  bad.replace(bad.find("iterations = 4"), 14, "iterations = 0");
  EXPECT_THROW(Parse(bad), std::invalid_argument);
  std::string unknown = kTiny;
  unknown.replace(unknown.find("random, bore-rf"), 15, "random, nope");
  EXPECT_THROW(Parse(unknown), std::invalid_argument);
}

TEST(Config, DecodeMapsUnitBoxToPhysical) {
  const ExperimentConfig c = Parse(kTiny);
  const auto env = MakeEnvironment(c);
  const Point lo(4, 0.0), hi(4, 1.0);
  const DecodedPoint a = DecodePoint(c, *env, lo), b = DecodePoint(c, *env, hi);
  EXPECT_DOUBLE_EQ(a.phi.lambda, 0.01);
  EXPECT_DOUBLE_EQ(b.phi.lambda, 50.0);
  EXPECT_DOUBLE_EQ(a.psi.params[0].mu, 0.5);
  EXPECT_DOUBLE_EQ(b.psi.params[0].sigma, 0.1);
}

TEST(AvgCumReward, Examples) {
  const std::vector<double> g{-3.0, -1.0, 2.0};
  EXPECT_DOUBLE_EQ(AvgCumReward(g, 1), -3.0);
  EXPECT_DOUBLE_EQ(AvgCumReward(g, 2), -2.0);
  EXPECT_DOUBLE_EQ(AvgCumReward(g, 3), -2.0 / 3.0);
  EXPECT_THROW(AvgCumReward(g, 0), std::domain_error);
  EXPECT_THROW(AvgCumReward(g, 4), std::domain_error);
}

TEST(HaltonPoint, FirstPoints) {
  EXPECT_EQ(HaltonPoint(1, 2), (Point{0.5, 1.0 / 3.0}));
  EXPECT_EQ(HaltonPoint(2, 2), (Point{0.25, 2.0 / 3.0}));
  EXPECT_DOUBLE_EQ(HaltonPoint(3, 3)[2], 3.0 / 5.0);
}

TEST(EvaluatePoint, SingleEpisodeEqualsEpisodeReturn) {
  ExperimentConfig c = Parse(kTiny);
  c.episodes = 1;
  const auto env = MakeEnvironment(c);
  const Point x{0.2, 0.3, 0.4, 0.5};
  const RngStream rng(5, 9);
  const Evaluation ev = EvaluatePoint(c, *env, x, rng);
  const DecodedPoint d = DecodePoint(c, *env, x);
  const EpisodeResult r = RunEpisode(*env, c.mppi, d.phi, d.psi, c.steps, rng.Split(0));
  EXPECT_EQ(ev.g, r.total_reward);
  ASSERT_EQ(ev.returns.size(), 1u);
  EXPECT_FALSE(ev.retried);
}

TEST(EvaluatePoint, MeanOfEpisodesAndDeterministic) {
  const ExperimentConfig c = Parse(kTiny);
  const auto env = MakeEnvironment(c);
  const Point x{0.1, 0.9, 0.5, 0.5};
  const Evaluation a = EvaluatePoint(c, *env, x, RngStream(1, 2));
  const Evaluation b = EvaluatePoint(c, *env, x, RngStream(1, 2));
  ASSERT_EQ(a.returns.size(), 2u);
  EXPECT_EQ(a.returns, b.returns);
  EXPECT_DOUBLE_EQ(a.g, (a.returns[0] + a.returns[1]) / 2.0);
}

TEST(WorstStart, InBoxDeterministicAndNoBetterThanCentre) {
  const ExperimentConfig c = Parse(kTiny);
  const auto env = MakeEnvironment(c);
  const WorstStart a = FindWorstStart(c, *env, RngStream(3, 0));
  const WorstStart b = FindWorstStart(c, *env, RngStream(3, 0));
  EXPECT_TRUE(SearchSpace::InUnitBox(a.x));
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.g, b.g);
  EXPECT_LE(a.g, a.center_g);
}

TEST(WorstStart, CacheRoundTrips) {
  const ExperimentConfig c = Parse(kTiny);
  const auto env = MakeEnvironment(c);
  const fs::path dir = TempDir("cache");
  const WorstStart fresh = LoadOrFindWorstStart(c, *env, 7, dir.string());
  ASSERT_TRUE(fs::exists(dir / "worst_start_seed7.csv"));
  const WorstStart cached = LoadOrFindWorstStart(c, *env, 7, dir.string());
  EXPECT_EQ(fresh.x, cached.x);
  EXPECT_EQ(fresh.g, cached.g);
  EXPECT_EQ(fresh.returns, cached.returns);
  EXPECT_EQ(fresh.center_g, cached.center_g);

  // A different setup must not reuse the cached point.
  ExperimentConfig other = c;
  other.steps = 21;
  EXPECT_NE(other.Fingerprint(), c.Fingerprint());
  const WorstStart recomputed = LoadOrFindWorstStart(other, *env, 7, dir.string());
  EXPECT_EQ(recomputed.g, FindWorstStart(other, *env, RngStream(7, StreamId("worst-start"))).g);
  fs::remove_all(dir);
}

TEST(RunTune, SingleIterationWritesOneRow) {
  ExperimentConfig c = Parse(kTiny);
  c.iterations = 1;
  const fs::path dir = TempDir("one");
  const RunResult r = RunTune(c, "random", 0, RunOptions{dir.string(), nullptr});
  ASSERT_EQ(r.rows.size(), 1u);
  std::ifstream in(dir / "random_seed0.csv");
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 2);
  EXPECT_EQ(Slurp(dir / "random_seed0.csv").substr(0, CsvHeader(c).size()), CsvHeader(c));
  fs::remove_all(dir);
}

TEST(RunTune, RowsAreConsistent) {
  const ExperimentConfig c = Parse(kTiny);
  const RunResult r = RunTune(c, "bore-rf", 1);
  ASSERT_EQ(r.rows.size(), 4u);
  ASSERT_TRUE(r.start.has_value());
  EXPECT_EQ(r.data.size(), 5u);  // start point + 4 evaluations
  EXPECT_EQ(r.bore.size(), 4u);
  std::vector<double> g;
  double best = r.start->g;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const RunRow& row = r.rows[i];
    EXPECT_EQ(row.iter, static_cast<int>(i) + 1);
    EXPECT_TRUE(SearchSpace::InUnitBox(row.unit));
    g.push_back(row.g);
    best = std::max(best, row.g);
    EXPECT_EQ(row.best_so_far, best);
    EXPECT_NEAR(row.avg_cum_reward, AvgCumReward(g, g.size()), 1e-12);
    EXPECT_EQ(row.physical, c.space.Denormalize(row.unit));
  }
}

TEST(RunTune, RerunIsByteIdentical) {
  const ExperimentConfig c = Parse(kTiny);
  const fs::path a = TempDir("rerun_a"), b = TempDir("rerun_b");
  for (const auto& dir : {a, b}) RunBenchmark(c, RunOptions{dir.string(), nullptr});
  for (const char* f : {"random_seed0.csv", "random_seed1.csv", "bore-rf_seed0.csv",
                        "bore-rf_seed1.csv", "summary.csv"}) {
    ASSERT_TRUE(fs::exists(a / f)) << f;
    EXPECT_EQ(Slurp(a / f), Slurp(b / f)) << f;
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(RunTune, OptimizersShareEvaluationBudgetAndStart) {
  const ExperimentConfig c = Parse(kTiny);
  const RunResult a = RunTune(c, "random", 0), b = RunTune(c, "bore-rf", 0);
  EXPECT_EQ(a.rows.size(), b.rows.size());
  EXPECT_EQ(a.start->x, b.start->x);
  EXPECT_EQ(a.start->g, b.start->g);
}

TEST(Summary, StatisticsAndRoundTrip) {
  const ExperimentConfig c = Parse(kTiny);
  std::map<std::string, std::vector<RunResult>> runs;
  for (std::uint64_t seed : {0u, 1u}) runs["random"].push_back(RunTune(c, "random", seed));
  const auto rows = Summarize(runs);
  ASSERT_EQ(rows.size(), 4u);
  const double m0 = runs["random"][0].rows[3].avg_cum_reward;
  const double m1 = runs["random"][1].rows[3].avg_cum_reward;
  EXPECT_DOUBLE_EQ(rows[3].mean, (m0 + m1) / 2.0);
  EXPECT_NEAR(rows[3].std, std::abs(m0 - m1) / std::sqrt(2.0), 1e-9);
  EXPECT_EQ(rows[3].seeds, 2);

  const fs::path dir = TempDir("summary");
  WriteSummary((dir / "summary.csv").string(), rows);
  const auto back = ReadSummary((dir / "summary.csv").string());
  ASSERT_EQ(back.size(), rows.size());
  EXPECT_EQ(back[3].mean, rows[3].mean);
  EXPECT_EQ(back[3].optimizer, "random");

  const std::string svg = RenderSvg(rows);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("random"), std::string::npos);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace ampc
