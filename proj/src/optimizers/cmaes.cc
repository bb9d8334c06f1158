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

#include "ampc/optimizers/cmaes.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <spdlog/spdlog.h>

namespace ampc {

CmaEs::CmaEs(Point mean, CmaEsOptions options)
    : dim_(static_cast<int>(mean.size())), popsize_(options.popsize) {
  if (dim_ < 1) throw std::invalid_argument("CmaEs: empty mean");
  if (popsize_ < 2) throw std::invalid_argument("CmaEs: popsize must be >= 2");
  if (!(options.sigma0 > 0.0)) throw std::invalid_argument("CmaEs: sigma0 <= 0");

  const double n = dim_;
  mu_ = popsize_ / 2;
  weights_.resize(mu_);
  for (int i = 0; i < mu_; ++i) weights_[i] = std::log(mu_ + 0.5) - std::log(i + 1.0);
  weights_ /= weights_.sum();
  mu_eff_ = 1.0 / weights_.squaredNorm();

  c_sigma_ = (mu_eff_ + 2.0) / (n + mu_eff_ + 5.0);
  d_sigma_ = 1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff_ - 1.0) / (n + 1.0)) - 1.0) +
             c_sigma_;
  c_c_ = (4.0 + mu_eff_ / n) / (n + 4.0 + 2.0 * mu_eff_ / n);
  c_1_ = 2.0 / ((n + 1.3) * (n + 1.3) + mu_eff_);
  c_mu_ = std::min(1.0 - c_1_, 2.0 * (mu_eff_ - 2.0 + 1.0 / mu_eff_) /
                                   ((n + 2.0) * (n + 2.0) + mu_eff_));
  chi_n_ = std::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));

  sigma0_ = options.sigma0;
  cov0_ = Eigen::MatrixXd::Identity(dim_, dim_);
  if (!options.initial_scales.empty()) {
    if (static_cast<int>(options.initial_scales.size()) != dim_) {
      throw std::invalid_argument("CmaEs: initial_scales size mismatch");
    }
    for (int i = 0; i < dim_; ++i) {
      cov0_(i, i) = options.initial_scales[i] * options.initial_scales[i];
    }
  }
  mean_ = Eigen::Map<const Eigen::VectorXd>(mean.data(), dim_);
  Reset();
  resets_ = 0;
}

void CmaEs::Reset() {
  sigma_ = sigma0_;
  cov_ = cov0_;
  p_sigma_ = Eigen::VectorXd::Zero(dim_);
  p_c_ = Eigen::VectorXd::Zero(dim_);
  ++resets_;
  Decompose();
}

void CmaEs::Decompose() {
  Eigen::MatrixXd sym = 0.5 * (cov_ + cov_.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  const Eigen::VectorXd values = eig.eigenvalues();
  const bool finite = sym.allFinite() && values.allFinite() && std::isfinite(sigma_);
  const double max_value = finite ? values.maxCoeff() : 0.0;
  if (!finite || values.minCoeff() <= 1e-20 * max_value || max_value <= 0.0 ||
      sigma_ * std::sqrt(max_value) < 1e-14 || sigma_ * std::sqrt(max_value) > 1e8) {
    if (resets_ > 0 || generation_ > 0) {
      spdlog::warn("CMA-ES covariance degenerated at generation {}; resetting",
                   generation_);
    }
    cov_ = cov0_;
    sigma_ = sigma0_;
    p_sigma_.setZero();
    p_c_.setZero();
    ++resets_;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> fresh(cov_);
    basis_ = fresh.eigenvectors();
    scales_ = fresh.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return;
  }
  cov_ = sym;
  basis_ = eig.eigenvectors();
  scales_ = values.cwiseSqrt();
}

Point CmaEs::SampleOne(RngStream& rng) const {
  Eigen::VectorXd z(dim_);
  for (int i = 0; i < dim_; ++i) z[i] = rng.Normal();
  const Eigen::VectorXd x = mean_ + sigma_ * (basis_ * scales_.cwiseProduct(z));
  return Point(x.data(), x.data() + dim_);
}

std::vector<Point> CmaEs::Ask(RngStream& rng) const {
  std::vector<Point> population;
  population.reserve(popsize_);
  for (int i = 0; i < popsize_; ++i) population.push_back(SampleOne(rng));
  return population;
}

void CmaEs::Tell(std::span<const Point> xs, std::span<const double> fitness) {
  if (xs.size() != fitness.size() || static_cast<int>(xs.size()) != popsize_) {
    throw std::invalid_argument("CmaEs::Tell: expected one fitness per candidate");
  }
  std::vector<int> order(popsize_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    // NaN fitness sorts last.
    const double fa = std::isnan(fitness[a]) ? -HUGE_VAL : fitness[a];
    const double fb = std::isnan(fitness[b]) ? -HUGE_VAL : fitness[b];
    return fa > fb;
  });

  const Eigen::VectorXd old_mean = mean_;
  Eigen::MatrixXd steps(dim_, mu_);
  Eigen::VectorXd y_w = Eigen::VectorXd::Zero(dim_);
  for (int i = 0; i < mu_; ++i) {
    const Point& x = xs[order[i]];
    steps.col(i) = (Eigen::Map<const Eigen::VectorXd>(x.data(), dim_) - old_mean) / sigma_;
    y_w += weights_[i] * steps.col(i);
  }
  mean_ = old_mean + sigma_ * y_w;

  const Eigen::MatrixXd inv_sqrt =
      basis_ * scales_.cwiseInverse().asDiagonal() * basis_.transpose();
  p_sigma_ = (1.0 - c_sigma_) * p_sigma_ +
             std::sqrt(c_sigma_ * (2.0 - c_sigma_) * mu_eff_) * (inv_sqrt * y_w);
  ++generation_;
  const double ps_norm = p_sigma_.norm();
  const double correction = std::sqrt(1.0 - std::pow(1.0 - c_sigma_, 2.0 * generation_));
  const bool h_sigma = ps_norm / correction < (1.4 + 2.0 / (dim_ + 1.0)) * chi_n_;
  p_c_ = (1.0 - c_c_) * p_c_ +
         (h_sigma ? std::sqrt(c_c_ * (2.0 - c_c_) * mu_eff_) : 0.0) * y_w;

  Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i < mu_; ++i) rank_mu += weights_[i] * steps.col(i) * steps.col(i).transpose();
  const double lost = h_sigma ? 0.0 : c_1_ * c_c_ * (2.0 - c_c_);
  cov_ = (1.0 - c_1_ - c_mu_ + lost) * cov_ + c_1_ * (p_c_ * p_c_.transpose()) +
         c_mu_ * rank_mu;
  sigma_ *= std::exp((c_sigma_ / d_sigma_) * (ps_norm / chi_n_ - 1.0));
  Decompose();
}

CmaesOptimizer::CmaesOptimizer(std::size_t dim, CmaesOptimizerOptions options)
    : dim_(dim), options_(std::move(options)) {
  if (options_.sigma0_raw_units && options_.box_widths.size() != dim_) {
    throw std::invalid_argument("CmaesOptimizer: raw-unit sigma0 needs box widths");
  }
}

Point CmaesOptimizer::Suggest(const Dataset& data, int, RngStream& rng) {
  if (!engine_) {
    Point start = data.empty() ? Point(dim_, 0.5) : data[0].x;
    CmaEsOptions cma;
    cma.popsize = options_.popsize;
    if (options_.sigma0_raw_units) {
      cma.sigma0 = 1.0;
      for (double w : options_.box_widths) cma.initial_scales.push_back(options_.sigma0 / w);
    } else {
      cma.sigma0 = options_.sigma0;
    }
    engine_.emplace(std::move(start), std::move(cma));
  }
  if (pending_.empty()) {
    for (int i = 0; i < engine_->popsize(); ++i) {
      Point x = engine_->SampleOne(rng);
      for (int attempt = 0; attempt < options_.max_resamples && !SearchSpace::InUnitBox(x);
           ++attempt) {
        x = engine_->SampleOne(rng);
      }
      for (double& v : x) v = std::clamp(v, 0.0, 1.0);
      pending_.push_back(std::move(x));
    }
  }
  Point next = std::move(pending_.front());
  pending_.pop_front();
  return next;
}

void CmaesOptimizer::Observe(const Point& x, double g) {
  if (!engine_) return;
  evaluated_.push_back(x);
  fitness_.push_back(g);
  if (static_cast<int>(evaluated_.size()) == engine_->popsize()) {
    engine_->Tell(evaluated_, fitness_);
    evaluated_.clear();
    fitness_.clear();
  }
}

}  // namespace ampc
