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

#ifndef AMPC_OPTIMIZERS_CMAES_H_
#define AMPC_OPTIMIZERS_CMAES_H_

#include <deque>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ampc/optimizers/optimizer.h"

namespace ampc {

struct CmaEsOptions {
  int popsize = 2;
  double sigma0 = 0.3;
  // Optional per-dimension initial standard deviations (relative to sigma0);
  // empty means an isotropic start.
  std::vector<double> initial_scales;
};

// Unbounded (mu/mu_w, lambda)-CMA-ES maximiser with cumulative step-size
// adaptation and rank-one plus rank-mu covariance updates.
class CmaEs {
 public:
  CmaEs(Point mean, CmaEsOptions options);

  Point SampleOne(RngStream& rng) const;
  std::vector<Point> Ask(RngStream& rng) const;
  // `xs` are the evaluated points (they may differ from the sampled ones,
  // e.g. after box repair); larger fitness is better.
  void Tell(std::span<const Point> xs, std::span<const double> fitness);

  const Eigen::VectorXd& mean() const { return mean_; }
  double sigma() const { return sigma_; }
  const Eigen::MatrixXd& covariance() const { return cov_; }
  int generation() const { return generation_; }
  int popsize() const { return popsize_; }
  int resets() const { return resets_; }

 private:
  void Decompose();
  void Reset();

  int dim_;
  int popsize_;
  int mu_;
  Eigen::VectorXd weights_;
  double mu_eff_, c_sigma_, d_sigma_, c_c_, c_1_, c_mu_, chi_n_;
  double sigma0_;
  Eigen::MatrixXd cov0_;

  Eigen::VectorXd mean_;
  double sigma_;
  Eigen::MatrixXd cov_;
  Eigen::MatrixXd basis_;   // B
  Eigen::VectorXd scales_;  // D (square roots of the eigenvalues)
  Eigen::VectorXd p_sigma_;
  Eigen::VectorXd p_c_;
  int generation_ = 0;
  int resets_ = 0;
};

struct CmaesOptimizerOptions {
  int popsize = 2;
  double sigma0 = 0.3;
  // When set, sigma0 is in physical units and is divided by each box width.
  bool sigma0_raw_units = false;
  std::vector<double> box_widths;
  int max_resamples = 10;
};

// Box-constrained ask/tell adapter. Candidates outside the unit box are
// resampled up to max_resamples times and then projected. The first
// dataset record (the shared start point) seeds the initial mean.
class CmaesOptimizer final : public Optimizer {
 public:
  CmaesOptimizer(std::size_t dim, CmaesOptimizerOptions options);

  std::string Name() const override { return "cmaes"; }
  Point Suggest(const Dataset& data, int iteration, RngStream& rng) override;
  void Observe(const Point& x, double g) override;

  const CmaEs* engine() const { return engine_ ? &*engine_ : nullptr; }

 private:
  std::size_t dim_;
  CmaesOptimizerOptions options_;
  std::optional<CmaEs> engine_;
  std::deque<Point> pending_;
  std::vector<Point> evaluated_;
  std::vector<double> fitness_;
};

}  // namespace ampc

#endif  // AMPC_OPTIMIZERS_CMAES_H_
