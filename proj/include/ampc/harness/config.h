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

#ifndef AMPC_HARNESS_CONFIG_H_
#define AMPC_HARNESS_CONFIG_H_

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ampc/core/types.h"
#include "ampc/envs/environment.h"
#include "ampc/envs/episode.h"
#include "ampc/envs/pendulum.h"
#include "ampc/envs/planar.h"
#include "ampc/optimizers/factory.h"

namespace ampc {

// One experiment: environment, controller settings, search space and the
// optimiser settings. Loaded from an INI file (see configs/ for the keys).
struct ExperimentConfig {
  std::string env = "pendulum";
  std::vector<std::string> optimizers = {"bore-rf"};
  int iterations = 50;  // n
  int episodes = 10;    // n_e
  int steps = 200;      // n_s
  std::vector<std::uint64_t> seeds = {0, 1, 2};
  bool start_at_worst = true;
  int worst_scan_points = 64;

  MppiSettings mppi;
  SearchSpace space;
  // Values for controller / distribution dimensions that are not searched.
  std::map<std::string, double> fixed;

  OptimizerSettings optimizer;
  PendulumOptions pendulum;
  PlanarOptions planar;

  // Throws std::invalid_argument when a count is < 1, an optimiser name is
  // unknown, or a required dimension is neither searched nor fixed.
  void Validate() const;
  // Stable text digest of everything that affects evaluations.
  std::string Fingerprint() const;
};

ExperimentConfig ParseConfig(std::istream& in);
ExperimentConfig LoadConfig(const std::string& path);

std::unique_ptr<Environment> MakeEnvironment(const ExperimentConfig& config);

// Names of every value a point must provide: lambda, sigma_eps and
// <param>_mu / <param>_sigma for each model parameter of the environment.
std::vector<std::string> RequiredDimensions(const Environment& env);

struct DecodedPoint {
  ControllerConfig phi;
  ModelDistParams psi;
};

// Denormalises a unit-box point and fills the remaining names from `fixed`.
DecodedPoint DecodePoint(const ExperimentConfig& config, const Environment& env,
                         std::span<const double> unit);

}  // namespace ampc

#endif  // AMPC_HARNESS_CONFIG_H_
