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

#include "ampc/envs/planar.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ampc {

bool Box2::ContainsStrictly(double x, double y) const {
  return std::abs(x - center[0]) < half_extents[0] &&
         std::abs(y - center[1]) < half_extents[1];
}

bool Box2::SegmentIntersects(double x0, double y0, double x1, double y1) const {
  // Liang-Barsky clipping against the closed box.
  double t_enter = 0.0;
  double t_exit = 1.0;
  const double p0[2] = {x0, y0};
  const double d[2] = {x1 - x0, y1 - y0};
  for (int i = 0; i < 2; ++i) {
    const double lo = center[i] - half_extents[i];
    const double hi = center[i] + half_extents[i];
    if (d[i] == 0.0) {
      if (p0[i] < lo || p0[i] > hi) return false;
      continue;
    }
    double t0 = (lo - p0[i]) / d[i];
    double t1 = (hi - p0[i]) / d[i];
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
    if (t_enter > t_exit) return false;
  }
  return true;
}

PlanarReach::PlanarReach(PlanarOptions options)
    : options_(options),
      true_params_{options.true_half_extents[0], options.true_half_extents[1]} {
  if (!(true_params_[0] > 0.0) || !(true_params_[1] > 0.0)) {
    throw std::invalid_argument("obstacle half-extents must be > 0");
  }
  if (ObstacleFor(true_params_).ContainsStrictly(options_.start[0],
                                                 options_.start[1])) {
    throw std::invalid_argument("planar start lies inside the obstacle");
  }
}

Box2 PlanarReach::ObstacleFor(const DynamicsParams& theta) const {
  return Box2{options_.obstacle_center, {theta[0], theta[1]}};
}

State PlanarReach::InitialState() const {
  return {options_.start[0], options_.start[1], 0.0, 0.0, 0.0};
}

State PlanarReach::Step(const State& s, const Action& a,
                        const DynamicsParams& theta) const {
  const double dt = options_.dt;
  const double keep = 1.0 - options_.damping * dt;
  const double ax = std::clamp(a[0], -options_.max_force, options_.max_force);
  const double ay = std::clamp(a[1], -options_.max_force, options_.max_force);
  double vx = keep * s[2] + ax * dt;
  double vy = keep * s[3] + ay * dt;
  const double speed = std::hypot(vx, vy);
  if (speed > options_.max_speed) {
    vx *= options_.max_speed / speed;
    vy *= options_.max_speed / speed;
  }
  const double x = s[0] + vx * dt;
  const double y = s[1] + vy * dt;

  const Box2 box = ObstacleFor(theta);
  if (box.ContainsStrictly(s[0], s[1])) {
    // Already inside (only possible for a believed box larger than the one
    // that produced s): move freely so the planner can leave it.
    return {x, y, vx, vy, box.ContainsStrictly(x, y) ? 1.0 : 0.0};
  }
  if (box.SegmentIntersects(s[0], s[1], x, y)) {
    return {s[0], s[1], 0.0, 0.0, 1.0};
  }
  return {x, y, vx, vy, 0.0};
}

double PlanarReach::InstantCost(const State& s,
                                const DynamicsParams& theta) const {
  const double dist = std::hypot(s[0] - options_.goal[0], s[1] - options_.goal[1]);
  const bool hit = s[4] > 0.5 || ObstacleFor(theta).ContainsStrictly(s[0], s[1]);
  return dist + (hit ? options_.collision_penalty : 0.0);
}

bool PlanarReach::InCollision(const State& s) const {
  return s[4] > 0.5 || ObstacleFor(true_params_).ContainsStrictly(s[0], s[1]);
}

double PlanarReach::Reward(const State& s, const Action& a) const {
  const double dist = std::hypot(s[0] - options_.goal[0], s[1] - options_.goal[1]);
  const double effort = a[0] * a[0] + a[1] * a[1];
  return -dist - (InCollision(s) ? options_.collision_penalty : 0.0) -
         0.001 * effort;
}

}  // namespace ampc
