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

// Model predictive path integral control: perturbed rollouts, softmin
// weighting and the receding-horizon update of the action sequence.

#ifndef AMPC_MPPI_MPPI_H_
#define AMPC_MPPI_MPPI_H_

#include <span>
#include <vector>

#include "ampc/core/rng.h"
#include "ampc/core/types.h"
#include "ampc/envs/environment.h"

namespace ampc {

// The rolling optimal action sequence {a*_i}, length T.
struct ControlState {
  std::vector<Action> actions;

  static ControlState Zeros(int horizon, int action_dim);
  int horizon() const { return static_cast<int>(actions.size()); }
};

struct RolloutResult {
  double cost = 0.0;                      // C(S), +inf if the rollout diverged
  std::vector<Action> perturbations;      // eps_i, unclamped, T x action_dim
  double control_penalty = 0.0;           // sum_i a*_i . v_i
};

// Simulates v_i = clamp(a*_i + eps_i), eps_i ~ N(0, sigma_eps^2 I), under
// theta. Cost is the terminal cost at s_T plus instant costs of s_1..s_{T-1}.
RolloutResult Rollout(const Environment& env, const State& s0,
                      const ControlState& control, const DynamicsParams& theta,
                      double sigma_eps, RngStream& rng);

// C + (lambda / sigma_eps^2) * penalty: the quantity MPPI exponentiates.
double ExponentArgument(const RolloutResult& r, double lambda, double sigma_eps);

struct RolloutWeights {
  std::vector<double> w;
  // Set when every rollout had infinite cost; w is then uniform.
  bool degenerate = false;
};

// w_j proportional to exp(-(arg_j - min_k arg_k) / lambda), normalised.
RolloutWeights ComputeWeights(std::span<const RolloutResult> results,
                              double lambda, double sigma_eps);

// a*_i += sum_j w_j eps^j_i, clamped to the actuator limits.
ControlState UpdateActions(const Environment& env, const ControlState& control,
                           std::span<const RolloutResult> results,
                           std::span<const double> w);

struct MpcStepResult {
  Action action;         // first action of the updated sequence
  ControlState control;  // updated sequence shifted left, zero-filled
  bool degenerate = false;
};

// One MPPI iteration. `thetas` holds either a single model shared by all
// rollouts or exactly `rollouts` models, one per rollout. Rollout j draws
// from rng.Split(j).
MpcStepResult MpcStep(const Environment& env, const State& s,
                      const ControlState& control,
                      std::span<const DynamicsParams> thetas,
                      const ControllerConfig& phi, int rollouts,
                      const RngStream& rng);

}  // namespace ampc

#endif  // AMPC_MPPI_MPPI_H_
