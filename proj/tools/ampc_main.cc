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

// Command-line front end: tune, benchmark, run-episode and plot.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "ampc/envs/episode.h"
#include "ampc/harness/config.h"
#include "ampc/harness/experiment.h"

namespace {

int Tune(const std::string& config_path, const std::string& optimizer, std::uint64_t seed,
         const std::string& out) {
  ampc::ExperimentConfig config = ampc::LoadConfig(config_path);
  const std::string name = optimizer.empty() ? config.optimizers.front() : optimizer;
  ampc::RunOptions options{out, [](const ampc::RunRow& r) {
                             spdlog::info("iter {:3d}  g {:10.3f}  best {:10.3f}  avg {:10.3f}",
                                          r.iter, r.g, r.best_so_far, r.avg_cum_reward);
                           }};
  const ampc::RunResult result = ampc::RunTune(config, name, seed, options);
  const auto& best = result.rows[std::distance(
      result.rows.begin(),
      std::max_element(result.rows.begin(), result.rows.end(),
                       [](const auto& a, const auto& b) { return a.g < b.g; }))];
  std::cout << "best g " << fmt::format("{:.6g}", best.g) << " at";
  for (std::size_t i = 0; i < config.space.size(); ++i) {
    std::cout << fmt::format(" {}={:.6g}", config.space[i].name, best.physical[i]);
  }
  std::cout << "\n";
  return 0;
}

int Benchmark(const std::string& config_path, const std::string& optimizer,
              std::vector<std::uint64_t> seeds, const std::string& out) {
  ampc::ExperimentConfig config = ampc::LoadConfig(config_path);
  if (!optimizer.empty()) config.optimizers = {optimizer};
  if (!seeds.empty()) config.seeds = std::move(seeds);
  const auto runs = ampc::RunBenchmark(config, {out, nullptr});
  for (const auto& [name, results] : runs) {
    std::cout << name << ":";
    for (const auto& r : results) {
      std::cout << fmt::format(" seed{} best={:.6g} avg={:.6g}", r.seed,
                               r.rows.back().best_so_far, r.rows.back().avg_cum_reward);
    }
    std::cout << "\n";
  }
  if (!out.empty()) {
    std::ofstream(out + "/avg_cum_reward.svg") << ampc::RenderSvg(ampc::Summarize(runs));
  }
  return 0;
}

int RunEpisodeCmd(const std::string& config_path, std::uint64_t seed,
                  const std::vector<double>& values, const std::string& out) {
  const ampc::ExperimentConfig config = ampc::LoadConfig(config_path);
  const auto env = ampc::MakeEnvironment(config);
  ampc::Point unit = config.space.Center();
  if (!values.empty()) {
    if (values.size() != config.space.size()) {
      throw std::invalid_argument(
          fmt::format("--x needs {} values (search-space order)", config.space.size()));
    }
    unit = config.space.Normalize(values);
  }
  const ampc::DecodedPoint d = ampc::DecodePoint(config, *env, unit);
  const ampc::EpisodeResult r = ampc::RunEpisode(
      *env, config.mppi, d.phi, d.psi, config.steps,
      ampc::RngStream(seed, ampc::StreamId("run-episode")), true);
  std::cout << fmt::format("return {:.6g}  collision_steps {}  degenerate_steps {}\n",
                           r.total_reward, r.collision_steps, r.degenerate_steps);
  const ampc::State& last = r.states.back();
  std::cout << "final state";
  for (double v : last) std::cout << fmt::format(" {:.6g}", v);
  std::cout << "\n";
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    std::ofstream trace(out + "/episode.csv");
    trace << "step,reward";
    for (std::size_t i = 0; i < last.size(); ++i) trace << ",s" << i;
    for (std::size_t i = 0; i < r.actions.front().size(); ++i) trace << ",a" << i;
    trace << "\n";
    for (std::size_t k = 0; k < r.actions.size(); ++k) {
      trace << k << fmt::format(",{:.17g}", r.rewards[k]);
      for (double v : r.states[k + 1]) trace << fmt::format(",{:.17g}", v);
      for (double v : r.actions[k]) trace << fmt::format(",{:.17g}", v);
      trace << "\n";
    }
  }
  return 0;
}

int Plot(const std::string& csv, const std::string& out) {
  const std::string input = csv.empty() ? out + "/summary.csv" : csv;
  const std::string output = out.empty() ? "avg_cum_reward.svg" : out + "/avg_cum_reward.svg";
  if (!out.empty()) std::filesystem::create_directories(out);
  std::ofstream(output) << ampc::RenderSvg(ampc::ReadSummary(input));
  std::cout << "wrote " << output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive MPPI tuning by density-ratio Bayesian optimisation"};
  app.require_subcommand(1);
  std::string config, optimizer, out, csv;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<double> values;
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "debug logging");

  auto* tune = app.add_subcommand("tune", "run one optimiser for one seed");
  tune->add_option("--config", config, "INI config")->required()->check(CLI::ExistingFile);
  tune->add_option("--optimizer", optimizer, "optimiser name (default: first in config)");
  tune->add_option("--seed", seed, "seed");
  tune->add_option("--out", out, "output directory for the CSV and worst-start cache");

  auto* bench = app.add_subcommand("benchmark", "all configured optimisers and seeds");
  bench->add_option("--config", config, "INI config")->required()->check(CLI::ExistingFile);
  bench->add_option("--optimizer", optimizer, "restrict to one optimiser");
  bench->add_option("--seed", seeds, "override the seed list");
  bench->add_option("--out", out, "output directory")->required();

  auto* episode = app.add_subcommand("run-episode", "one episode at a given point");
  episode->add_option("--config", config, "INI config")->required()->check(CLI::ExistingFile);
  episode->add_option("--seed", seed, "seed");
  episode->add_option("--x", values, "physical values in search order (default: box centre)")
      ->delimiter(',');
  episode->add_option("--out", out, "write episode.csv trace here");

  auto* plot = app.add_subcommand("plot", "summary.csv -> SVG");
  plot->add_option("--csv", csv, "summary CSV (default: <out>/summary.csv)");
  plot->add_option("--out", out, "output directory");

  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);
  try {
    if (*tune) return Tune(config, optimizer, seed, out);
    if (*bench) return Benchmark(config, optimizer, seeds, out);
    if (*episode) return RunEpisodeCmd(config, seed, values, out);
    if (*plot) return Plot(csv, out);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
