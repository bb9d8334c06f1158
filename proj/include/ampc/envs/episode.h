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

#ifndef AMPC_ENVS_EPISODE_H_
#define AMPC_ENVS_EPISODE_H_

#include <vector>

#include "ampc/core/rng.h"
#include "ampc/core/types.h"
#include "ampc/envs/environment.h"

namespace ampc {

struct MppiSettings {
  int horizon = 10;   // T
  int rollouts = 10;  // M
  // Draw one theta per rollout instead of one per control step.
  bool theta_per_rollout = false;
};

struct EpisodeResult {
  double total_reward = 0.0;
  int collision_steps = 0;
  int degenerate_steps = 0;  // MPC steps where every rollout diverged
  // Filled only when recording was requested.
  std::vector<State> states;
  std::vector<Action> actions;
  std::vector<double> rewards;
};

// Runs one closed-loop episode of n_steps: at every control step theta is
// drawn from psi, MPPI plans with it, and the first planned action is
// executed on the true dynamics. Step i uses rng.Split(i).
// Throws std::runtime_error if the true state becomes non-finite.
EpisodeResult RunEpisode(const Environment& env, const MppiSettings& settings,
                         const ControllerConfig& phi, const ModelDistParams& psi,
                         int n_steps, const RngStream& rng, bool record = false);

}  // namespace ampc

#endif  // AMPC_ENVS_EPISODE_H_
