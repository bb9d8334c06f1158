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

#ifndef AMPC_ENVS_PLANAR_H_
#define AMPC_ENVS_PLANAR_H_

#include <array>

#include "ampc/envs/environment.h"

namespace ampc {

struct PlanarOptions {
  double dt = 0.05;
  double damping = 0.1;
  double max_speed = 1.0;
  double max_force = 2.0;
  double collision_penalty = 100.0;
  std::array<double, 2> start = {0.2, 0.6};
  std::array<double, 2> goal = {0.5, 0.1};
  std::array<double, 2> obstacle_center = {0.5, 0.0};
  // True obstacle half-extents (w_x, w_y).
  std::array<double, 2> true_half_extents = {0.15, 0.05};
};

// Axis-aligned box obstacle.
struct Box2 {
  std::array<double, 2> center;
  std::array<double, 2> half_extents;

  bool ContainsStrictly(double x, double y) const;
  // Whether the segment (x0, y0) -> (x1, y1) meets the closed box.
  bool SegmentIntersects(double x0, double y0, double x1, double y1) const;
};

// Point-mass reaching task next to a box obstacle whose half-extents are
// only partially known. State is (x, y, vx, vy, contact), where contact is 1
// when the step that produced the state was blocked by (or ended inside) the
// obstacle used for stepping. theta = {w_x, w_y}.
class PlanarReach final : public Environment {
 public:
  explicit PlanarReach(PlanarOptions options = {});

  std::string Name() const override { return "planar"; }
  int StateDim() const override { return 5; }
  int ActionDim() const override { return 2; }
  std::vector<std::string> ParamNames() const override { return {"wx", "wy"}; }

  State InitialState() const override;

  // Damped point mass with blocking collisions: a step whose segment enters
  // the obstacle leaves the position unchanged and zeroes the velocity.
  State Step(const State& s, const Action& a,
             const DynamicsParams& theta) const override;
  // Distance to goal plus the collision penalty against the believed box.
  double InstantCost(const State& s, const DynamicsParams& theta) const override;
  // Negative distance, collision penalty against the true box, and a small
  // effort term.
  double Reward(const State& s, const Action& a) const override;
  bool InCollision(const State& s) const override;
  const DynamicsParams& TrueParams() const override { return true_params_; }
  double ActionLimit(int) const override { return options_.max_force; }

  const PlanarOptions& options() const { return options_; }
  Box2 ObstacleFor(const DynamicsParams& theta) const;

 private:
  PlanarOptions options_;
  DynamicsParams true_params_;
};

}  // namespace ampc

#endif  // AMPC_ENVS_PLANAR_H_
