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

#include "ampc/envs/pendulum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ampc {

double WrapAngle(double angle) {
  constexpr double kPi = std::numbers::pi;
  double wrapped = std::fmod(angle + kPi, 2.0 * kPi);
  if (wrapped < 0.0) wrapped += 2.0 * kPi;
  wrapped -= kPi;
  // fmod maps +pi to -pi; keep the interval half-open at -pi.
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

Pendulum::Pendulum(PendulumOptions options)
    : options_(options), true_params_{options.true_length} {
  if (!(options_.true_length > 0.0)) {
    throw std::invalid_argument("pendulum length must be > 0");
  }
}

State Pendulum::InitialState() const { return {std::numbers::pi, 0.0}; }

State Pendulum::Step(const State& s, const Action& a,
                     const DynamicsParams& theta) const {
  const double l = theta[0];
  const double u = std::clamp(a[0], -options_.max_torque, options_.max_torque);
  const double dt = options_.dt;
  double speed = s[1] + (3.0 * options_.gravity / (2.0 * l)) * std::sin(s[0]) * dt +
                 (3.0 / (options_.mass * l * l)) * u * dt;
  speed = std::clamp(speed, -options_.max_speed, options_.max_speed);
  return {WrapAngle(s[0] + speed * dt), speed};
}

double Pendulum::InstantCost(const State& s, const DynamicsParams&) const {
  return s[0] * s[0] + 0.1 * s[1] * s[1];
}

double Pendulum::Reward(const State& s, const Action& a) const {
  return -(s[0] * s[0] + 0.1 * s[1] * s[1] + 0.001 * a[0] * a[0]);
}

}  // namespace ampc
