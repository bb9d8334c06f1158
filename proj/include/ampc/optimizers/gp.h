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

#ifndef AMPC_OPTIMIZERS_GP_H_
#define AMPC_OPTIMIZERS_GP_H_

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ampc/optimizers/acquisition.h"
#include "ampc/optimizers/optimizer.h"

namespace ampc {

// Hyper-parameters of the anisotropic squared-exponential kernel
//   k(x, x') = signal_std^2 * exp(-1/2 sum_i ((x_i - x'_i) / l_i)^2)
// plus i.i.d. Gaussian observation noise. signal_std and noise_std are in
// units of the standardised targets.
struct GpHyper {
  double signal_std = 1.0;
  std::vector<double> lengthscales;
  double noise_std = 0.1;

  // Packed as [log signal_std, log l_1..l_d, log noise_std].
  std::vector<double> ToLog() const;
  static GpHyper FromLog(std::span<const double> theta);
};

struct GpOptions {
  int restarts = 8;
  int max_iterations = 100;
  double initial_step = 0.1;
  double jitter = 1e-8;
  double max_jitter = 1e-4;
  // Search bounds, applied in log space.
  double min_lengthscale = 1e-2, max_lengthscale = 10.0;
  double min_signal_std = 0.05, max_signal_std = 20.0;
  double min_noise_std = 1e-6, max_noise_std = 2.0;
  // If set, the noise std is held at this value instead of being fitted.
  std::optional<double> fixed_noise_std;
};

struct GpPrediction {
  double mean;
  double std;  // latent-function posterior std, excludes observation noise
};

class GaussianProcess {
 public:
  explicit GaussianProcess(GpOptions options = {}) : options_(options) {}

  // Maximises the log marginal likelihood over the hyper-parameters with
  // multi-start projected gradient ascent. Throws std::runtime_error if the
  // kernel matrix stays non-PD after jitter escalation.
  void Fit(std::span<const Point> x, std::span<const double> y, RngStream& rng);
  // Conditions on fixed hyper-parameters without optimisation.
  void Condition(std::span<const Point> x, std::span<const double> y, const GpHyper& hyper);

  GpPrediction Predict(std::span<const double> x) const;

  // Log marginal likelihood of the standardised targets at log-packed
  // hyper-parameters `theta`; fills `grad` (same layout) when non-null.
  // Requires SetData() or a prior Fit()/Condition().
  double LogMarginalLikelihood(std::span<const double> theta, std::vector<double>* grad) const;
  void SetData(std::span<const Point> x, std::span<const double> y);

  const GpHyper& hyper() const { return hyper_; }
  double lml() const { return lml_; }
  bool fitted() const { return fitted_; }

 private:
  // Builds K (with jitter) and its Cholesky factor; returns false when no
  // jitter level up to max_jitter makes it PD.
  bool Factor(const GpHyper& h, Eigen::MatrixXd* kf, Eigen::LLT<Eigen::MatrixXd>* llt) const;
  void Project(std::vector<double>* theta) const;

  GpOptions options_;
  Eigen::MatrixXd x_;  // n x d
  Eigen::VectorXd y_;  // standardised
  double y_mean_ = 0.0, y_scale_ = 1.0;
  GpHyper hyper_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::VectorXd alpha_;
  double lml_ = 0.0;
  bool fitted_ = false;
};

// Closed-form E[max(0, f - y_star)] for f ~ N(mean, std^2). Exactly 0 when
// std == 0; never negative.
double ExpectedImprovement(double mean, double std, double y_star);
double UpperConfidenceBound(double mean, double std, double delta);

enum class BoAcquisition { kUcb, kEi };

struct BoOptions {
  BoAcquisition acquisition = BoAcquisition::kUcb;
  double delta = 3.0;
  GpOptions gp;
  AcquisitionOptions maximizer;
};

// GP-based Bayesian optimisation (homoscedastic noise model).
class BayesOpt final : public Optimizer {
 public:
  BayesOpt(std::size_t dim, BoOptions options = {}) : dim_(dim), options_(options) {}

  std::string Name() const override {
    return options_.acquisition == BoAcquisition::kEi ? "bo-ei" : "bo-ucb";
  }
  Point Suggest(const Dataset& data, int iteration, RngStream& rng) override;

  bool last_fallback() const { return last_fallback_; }

 private:
  std::size_t dim_;
  BoOptions options_;
  bool last_fallback_ = false;
};

}  // namespace ampc

#endif  // AMPC_OPTIMIZERS_GP_H_
