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

#ifndef AMPC_OPTIMIZERS_OPTIMIZER_H_
#define AMPC_OPTIMIZERS_OPTIMIZER_H_

#include <string>

#include "ampc/core/rng.h"
#include "ampc/core/types.h"

namespace ampc {

// Sequential black-box maximiser over the unit box. The outer loop calls
// Suggest() once per iteration, evaluates the point, appends it to the
// dataset and calls Observe().
class Optimizer {
 public:
  virtual ~Optimizer() = default;

  virtual std::string Name() const = 0;

  // `iteration` is 1-based. The returned point always lies in the unit box.
  virtual Point Suggest(const Dataset& data, int iteration, RngStream& rng) = 0;

  virtual void Observe(const Point& /*x*/, double /*g*/) {}
};

// Uniform point in the d-dimensional unit box.
Point UniformPoint(std::size_t dim, RngStream& rng);

// Budget-matched control baseline.
class RandomSearch final : public Optimizer {
 public:
  explicit RandomSearch(std::size_t dim) : dim_(dim) {}

  std::string Name() const override { return "random"; }
  Point Suggest(const Dataset&, int, RngStream& rng) override {
    return UniformPoint(dim_, rng);
  }

 private:
  std::size_t dim_;
};

// Linear decay gamma_t = gamma_1 - (t - 1) / (n - 1) * (gamma_1 - gamma_n).
class GammaSchedule {
 public:
  // Requires 0 < gamma_n <= gamma_1 < 1 and n >= 1.
  GammaSchedule(double gamma_1, double gamma_n, int n);

  // Throws std::domain_error unless 1 <= t <= n. With n == 1 the schedule
  // is the constant gamma_1.
  double At(int t) const;

  double gamma_1() const { return gamma_1_; }
  double gamma_n() const { return gamma_n_; }
  int n() const { return n_; }

 private:
  double gamma_1_;
  double gamma_n_;
  int n_;
};

}  // namespace ampc

#endif  // AMPC_OPTIMIZERS_OPTIMIZER_H_
