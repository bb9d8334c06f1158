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

#ifndef AMPC_ENVS_PENDULUM_H_
#define AMPC_ENVS_PENDULUM_H_

#include "ampc/envs/environment.h"

namespace ampc {

struct PendulumOptions {
  double dt = 0.05;
  double gravity = 10.0;
  double mass = 1.0;
  double max_speed = 8.0;
  double max_torque = 2.0;
  double true_length = 1.0;
};

// Torque-limited pendulum swing-up. State is (angle from upright, angular
// velocity); the angle is wrapped to (-pi, pi]. theta = {rod length l}.
class Pendulum final : public Environment {
 public:
  explicit Pendulum(PendulumOptions options = {});

  std::string Name() const override { return "pendulum"; }
  int StateDim() const override { return 2; }
  int ActionDim() const override { return 1; }
  std::vector<std::string> ParamNames() const override { return {"l"}; }

  // Hanging down, at rest.
  State InitialState() const override;
  State Step(const State& s, const Action& a,
             const DynamicsParams& theta) const override;
  double InstantCost(const State& s, const DynamicsParams& theta) const override;
  double Reward(const State& s, const Action& a) const override;
  const DynamicsParams& TrueParams() const override { return true_params_; }
  double ActionLimit(int) const override { return options_.max_torque; }

  const PendulumOptions& options() const { return options_; }

 private:
  PendulumOptions options_;
  DynamicsParams true_params_;
};

// Maps an angle to (-pi, pi].
double WrapAngle(double angle);

}  // namespace ampc

#endif  // AMPC_ENVS_PENDULUM_H_
