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

#ifndef AMPC_HARNESS_EXPERIMENT_H_
#define AMPC_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ampc/core/rng.h"
#include "ampc/core/types.h"
#include "ampc/harness/config.h"
#include "ampc/optimizers/bore.h"

namespace ampc {

struct Evaluation {
  double g = 0.0;
  std::vector<double> returns;
  int collision_steps = 0;
  int episodes_with_collision = 0;
  bool retried = false;
};

// Mean return over n_e episodes at unit-box point `unit`; episode e uses
// rng.Split(e). A failed evaluation (exception or non-finite return) is
// retried once on a fresh stream; a second failure throws.
Evaluation EvaluatePoint(const ExperimentConfig& config, const Environment& env,
                         std::span<const double> unit, const RngStream& rng);

// Mean of the first t entries; throws std::domain_error unless 1 <= t <= size.
double AvgCumReward(std::span<const double> g, std::size_t t);

// Point `index` (>= 1) of the Halton sequence in `dim` dimensions.
Point HaltonPoint(std::uint64_t index, std::size_t dim);

struct WorstStart {
  Point x;  // unit box
  double g = 0.0;
  std::vector<double> returns;
  double center_g = 0.0;  // g of scan point 0 (the box centre)
};

// Scans the box centre plus Halton points (scan point k uses rng.Split(k))
// and returns the point with the lowest g (first on ties).
WorstStart FindWorstStart(const ExperimentConfig& config, const Environment& env,
                          const RngStream& rng);

// FindWorstStart for `seed`, reusing <cache_dir>/worst_start_seed<seed>.csv
// when its config fingerprint matches. An empty cache_dir disables caching.
WorstStart LoadOrFindWorstStart(const ExperimentConfig& config, const Environment& env,
                                std::uint64_t seed, const std::string& cache_dir);

struct RunRow {
  int iter = 0;
  std::uint64_t seed = 0;
  std::string optimizer;
  double g = 0.0;
  double best_so_far = 0.0;
  double avg_cum_reward = 0.0;
  Point unit;
  std::vector<double> physical;
};

struct RunResult {
  std::string optimizer;
  std::uint64_t seed = 0;
  std::vector<RunRow> rows;
  Dataset data;  // includes the start point when start_at_worst is set
  std::optional<WorstStart> start;
  std::vector<Bore::Diagnostics> bore;  // one per iteration for bore-*
  std::vector<Evaluation> evaluations;  // one per iteration
};

struct RunOptions {
  // Directory for <optimizer>_seed<k>.csv and the worst-start cache; empty
  // means nothing is written.
  std::string out_dir;
  std::function<void(const RunRow&)> on_row;
};

// One optimiser, one seed: optional worst start, then n iterations of
// suggest -> evaluate -> observe. Iteration t evaluates on the stream
// (seed, "evaluate").Split(t), shared by all optimisers.
RunResult RunTune(const ExperimentConfig& config, const std::string& optimizer,
                  std::uint64_t seed, const RunOptions& options = {});

// Every configured optimiser and seed, plus summary.csv when out_dir is set.
std::map<std::string, std::vector<RunResult>> RunBenchmark(const ExperimentConfig& config,
                                                          const RunOptions& options = {});

std::string CsvHeader(const ExperimentConfig& config);
std::string CsvRow(const RunRow& row);

struct SummaryRow {
  int iter = 0;
  std::string optimizer;
  double mean = 0.0;  // of avg_cum_reward across seeds
  double std = 0.0;   // sample std, 0 with one seed
  double best_mean = 0.0;
  double best_std = 0.0;
  int seeds = 0;
};

std::vector<SummaryRow> Summarize(const std::map<std::string, std::vector<RunResult>>& runs);
void WriteSummary(const std::string& path, const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> ReadSummary(const std::string& path);

// Line chart of the mean avg_cum_reward per optimiser with +-band*std
// shading.
std::string RenderSvg(const std::vector<SummaryRow>& rows, double band = 1.5);

}  // namespace ampc

#endif  // AMPC_HARNESS_EXPERIMENT_H_
