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

#include "ampc/mppi/mppi.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ampc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool AllFinite(const State& s) {
  for (double v : s) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

ControlState ControlState::Zeros(int horizon, int action_dim) {
  return ControlState{std::vector<Action>(horizon, Action(action_dim, 0.0))};
}

RolloutResult Rollout(const Environment& env, const State& s0,
                      const ControlState& control, const DynamicsParams& theta,
                      double sigma_eps, RngStream& rng) {
  const int horizon = control.horizon();
  if (horizon < 1) throw std::invalid_argument("Rollout: horizon must be >= 1");

  RolloutResult result;
  result.perturbations.reserve(horizon);
  State s = s0;
  bool diverged = false;
  for (int i = 0; i < horizon; ++i) {
    const Action& planned = control.actions[i];
    Action eps(planned.size());
    Action v(planned.size());
    for (std::size_t k = 0; k < planned.size(); ++k) {
      eps[k] = sigma_eps * rng.Normal();
      v[k] = planned[k] + eps[k];
      result.control_penalty += planned[k] * v[k];
    }
    result.perturbations.push_back(std::move(eps));
    if (diverged) continue;  // keep the draw count independent of divergence

    s = env.Step(s, env.ClampAction(std::move(v)), theta);
    if (!AllFinite(s)) {
      diverged = true;
      continue;
    }
    result.cost += i + 1 < horizon ? env.InstantCost(s, theta)
                                   : env.TerminalCost(s, theta);
  }
  if (diverged || !std::isfinite(result.cost)) result.cost = kInf;
  return result;
}

double ExponentArgument(const RolloutResult& r, double lambda, double sigma_eps) {
  return r.cost + (lambda / (sigma_eps * sigma_eps)) * r.control_penalty;
}

RolloutWeights ComputeWeights(std::span<const RolloutResult> results,
                              double lambda, double sigma_eps) {
  if (results.empty()) throw std::invalid_argument("ComputeWeights: no rollouts");
  if (!(lambda > 0.0)) throw std::invalid_argument("ComputeWeights: lambda <= 0");

  std::vector<double> args(results.size());
  double rho = kInf;
  for (std::size_t j = 0; j < results.size(); ++j) {
    double a = ExponentArgument(results[j], lambda, sigma_eps);
    if (std::isnan(a)) a = kInf;
    args[j] = a;
    if (a < rho) rho = a;
  }

  RolloutWeights out;
  out.w.assign(results.size(), 0.0);
  if (!std::isfinite(rho)) {
    out.w.assign(results.size(), 1.0 / static_cast<double>(results.size()));
    out.degenerate = true;
    return out;
  }
  double eta = 0.0;
  for (std::size_t j = 0; j < results.size(); ++j) {
    if (std::isfinite(args[j])) {
      out.w[j] = std::exp(-(args[j] - rho) / lambda);
      eta += out.w[j];
    }
  }
  for (double& w : out.w) w /= eta;
  return out;
}

ControlState UpdateActions(const Environment& env, const ControlState& control,
                           std::span<const RolloutResult> results,
                           std::span<const double> w) {
  if (results.size() != w.size()) {
    throw std::invalid_argument("UpdateActions: weight count mismatch");
  }
  ControlState updated = control;
  for (int i = 0; i < updated.horizon(); ++i) {
    Action& a = updated.actions[i];
    for (std::size_t j = 0; j < results.size(); ++j) {
      if (w[j] == 0.0) continue;
      const Action& eps = results[j].perturbations[i];
      for (std::size_t k = 0; k < a.size(); ++k) a[k] += w[j] * eps[k];
    }
    a = env.ClampAction(std::move(a));
  }
  return updated;
}

MpcStepResult MpcStep(const Environment& env, const State& s,
                      const ControlState& control,
                      std::span<const DynamicsParams> thetas,
                      const ControllerConfig& phi, int rollouts,
                      const RngStream& rng) {
  if (rollouts < 1) throw std::invalid_argument("MpcStep: rollouts must be >= 1");
  if (thetas.size() != 1 && thetas.size() != static_cast<std::size_t>(rollouts)) {
    throw std::invalid_argument("MpcStep: need one theta or one per rollout");
  }
  std::vector<RolloutResult> results;
  results.reserve(rollouts);
  for (int j = 0; j < rollouts; ++j) {
    RngStream rollout_rng = rng.Split(static_cast<std::uint64_t>(j));
    const DynamicsParams& theta = thetas.size() == 1 ? thetas[0] : thetas[j];
    results.push_back(Rollout(env, s, control, theta, phi.sigma_eps, rollout_rng));
  }
  const RolloutWeights weights = ComputeWeights(results, phi.lambda, phi.sigma_eps);
  ControlState updated = UpdateActions(env, control, results, weights.w);

  MpcStepResult out;
  out.action = updated.actions.front();
  out.degenerate = weights.degenerate;
  const int horizon = updated.horizon();
  const int action_dim = static_cast<int>(out.action.size());
  for (int i = 0; i + 1 < horizon; ++i) {
    updated.actions[i] = std::move(updated.actions[i + 1]);
  }
  updated.actions[horizon - 1] = Action(action_dim, 0.0);
  out.control = std::move(updated);
  return out;
}

}  // namespace ampc
