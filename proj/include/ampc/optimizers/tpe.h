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

#ifndef AMPC_OPTIMIZERS_TPE_H_
#define AMPC_OPTIMIZERS_TPE_H_

#include <span>
#include <vector>

#include "ampc/optimizers/optimizer.h"

namespace ampc {

// Product Gaussian kernel density with Scott's-rule bandwidths
// h_i = std_i * n^(-1 / (d + 4)), floored at `bandwidth_floor`. With
// `prior_weight` > 0 the density is mixed with the uniform density on the
// unit box, which gets weight prior_weight / (n + prior_weight). With
// `magic_clip` the floor is raised to 1 / min(100, n + 1) as in hyperopt.
class ParzenEstimator {
 public:
  ParzenEstimator(std::vector<Point> centers, double bandwidth_floor, double prior_weight = 0.0,
                  bool magic_clip = false);

  double LogDensity(std::span<const double> x) const;
  // Draw from the mixture, resampling each kernel coordinate until it lands
  // in [0, 1] (clipped after 100 failed attempts).
  Point SampleInBox(RngStream& rng) const;

  const std::vector<double>& bandwidths() const { return bandwidths_; }
  const std::vector<Point>& centers() const { return centers_; }

 private:
  std::vector<Point> centers_;
  std::vector<double> bandwidths_;
  double prior_weight_;
};

struct TpeOptions {
  double gamma = 0.5;
  int candidates = 64;
  double bandwidth_floor = 1e-3;
  // Weight of the uniform prior component in both densities; stops the good
  // density from collapsing onto a single early point.
  double prior_weight = 1.0;
  // Lower-bound bandwidths by 1 / min(100, n + 1).
  bool magic_clip = true;
};

// Tree-structured Parzen estimator: splits the observations at the top-gamma
// threshold, fits a(x) on the good set and b(x) on the rest, and returns the
// candidate drawn from a(x) that maximises a(x) / b(x).
class Tpe final : public Optimizer {
 public:
  Tpe(std::size_t dim, TpeOptions options = {}) : dim_(dim), options_(options) {}

  std::string Name() const override { return "tpe"; }
  Point Suggest(const Dataset& data, int iteration, RngStream& rng) override;

 private:
  std::size_t dim_;
  TpeOptions options_;
};

}  // namespace ampc

#endif  // AMPC_OPTIMIZERS_TPE_H_
