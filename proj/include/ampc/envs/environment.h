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

#ifndef AMPC_ENVS_ENVIRONMENT_H_
#define AMPC_ENVS_ENVIRONMENT_H_

#include <string>
#include <vector>

namespace ampc {

using State = std::vector<double>;
using Action = std::vector<double>;
// Physical model parameters theta (rod length, obstacle half-extents, ...).
using DynamicsParams = std::vector<double>;

// Markovian transition contract with theta as an explicit input. Step() is
// deterministic; all randomness lives in action perturbations and in the
// sampling of theta. The environment also carries the true theta, which is
// what the "real" system uses when scoring executed actions.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string Name() const = 0;
  virtual int StateDim() const = 0;
  virtual int ActionDim() const = 0;
  // Names of the theta components, e.g. {"l"} for the pendulum.
  virtual std::vector<std::string> ParamNames() const = 0;

  virtual State InitialState() const = 0;

  virtual State Step(const State& s, const Action& a,
                     const DynamicsParams& theta) const = 0;

  // c(s); theta is the model the planner believes in.
  virtual double InstantCost(const State& s,
                             const DynamicsParams& theta) const = 0;
  // q(s); defaults to the instant cost.
  virtual double TerminalCost(const State& s,
                              const DynamicsParams& theta) const {
    return InstantCost(s, theta);
  }

  // r(s, a) scored against the true model, where s is the state reached by
  // executing a.
  virtual double Reward(const State& s, const Action& a) const = 0;

  // Whether s is in collision with the true environment.
  virtual bool InCollision(const State& /*s*/) const { return false; }

  virtual const DynamicsParams& TrueParams() const = 0;

  virtual double ActionLimit(int i) const = 0;
  Action ClampAction(Action a) const;
};

}  // namespace ampc

#endif  // AMPC_ENVS_ENVIRONMENT_H_
