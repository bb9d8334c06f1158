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

#include "ampc/envs/episode.h"

#include <cmath>
#include <stdexcept>

#include "ampc/core/sampling.h"
#include "ampc/mppi/mppi.h"

namespace ampc {

EpisodeResult RunEpisode(const Environment& env, const MppiSettings& settings,
                         const ControllerConfig& phi, const ModelDistParams& psi,
                         int n_steps, const RngStream& rng, bool record) {
  phi.Validate();
  psi.Validate();
  if (psi.params.size() != env.ParamNames().size()) {
    throw std::invalid_argument("RunEpisode: psi does not match environment");
  }

  EpisodeResult result;
  State s = env.InitialState();
  ControlState control = ControlState::Zeros(settings.horizon, env.ActionDim());
  const int n_thetas = settings.theta_per_rollout ? settings.rollouts : 1;
  std::vector<DynamicsParams> thetas(n_thetas);

  if (record) result.states.push_back(s);
  for (int i = 0; i < n_steps; ++i) {
    const RngStream step_rng = rng.Split(static_cast<std::uint64_t>(i));
    RngStream theta_rng = step_rng.Split(0);
    for (auto& theta : thetas) theta = SampleModelParams(psi, theta_rng);

    MpcStepResult step = MpcStep(env, s, control, thetas, phi, settings.rollouts,
                                 step_rng.Split(1));
    control = std::move(step.control);
    if (step.degenerate) ++result.degenerate_steps;

    s = env.Step(s, step.action, env.TrueParams());
    for (double v : s) {
      if (!std::isfinite(v)) throw std::runtime_error("non-finite environment state");
    }
    const double r = env.Reward(s, step.action);
    result.total_reward += r;
    if (env.InCollision(s)) ++result.collision_steps;
    if (record) {
      result.states.push_back(s);
      result.actions.push_back(step.action);
      result.rewards.push_back(r);
    }
  }
  return result;
}

}  // namespace ampc
