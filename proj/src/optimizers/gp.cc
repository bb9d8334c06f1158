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

#include "ampc/optimizers/gp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <spdlog/spdlog.h>

namespace ampc {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

std::vector<double> GpHyper::ToLog() const {
  std::vector<double> theta;
  theta.reserve(lengthscales.size() + 2);
  theta.push_back(std::log(signal_std));
  for (double l : lengthscales) theta.push_back(std::log(l));
  theta.push_back(std::log(noise_std));
  return theta;
}

GpHyper GpHyper::FromLog(std::span<const double> theta) {
  if (theta.size() < 3) throw std::invalid_argument("GpHyper: need >= 3 entries");
  GpHyper h;
  h.signal_std = std::exp(theta.front());
  h.lengthscales.clear();
  for (std::size_t i = 1; i + 1 < theta.size(); ++i) h.lengthscales.push_back(std::exp(theta[i]));
  h.noise_std = std::exp(theta.back());
  return h;
}

void GaussianProcess::SetData(std::span<const Point> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw std::invalid_argument("GaussianProcess: x/y size mismatch or empty");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  const Eigen::Index d = static_cast<Eigen::Index>(x.front().size());
  x_.resize(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(x[i].size()) != d) {
      throw std::invalid_argument("GaussianProcess: ragged inputs");
    }
    for (Eigen::Index k = 0; k < d; ++k) x_(i, k) = x[i][k];
  }
  Eigen::VectorXd raw = Eigen::Map<const Eigen::VectorXd>(y.data(), n);
  if (!raw.allFinite()) throw std::invalid_argument("GaussianProcess: non-finite target");
  y_mean_ = raw.mean();
  const double var = n > 1 ? (raw.array() - y_mean_).square().sum() / static_cast<double>(n - 1) : 0.0;
  y_scale_ = var > 0.0 ? std::sqrt(var) : 1.0;
  y_ = (raw.array() - y_mean_) / y_scale_;
}

bool GaussianProcess::Factor(const GpHyper& h, Eigen::MatrixXd* kf,
                             Eigen::LLT<Eigen::MatrixXd>* llt) const {
  const Eigen::Index n = x_.rows();
  const double sf2 = h.signal_std * h.signal_std;
  kf->resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    (*kf)(i, i) = sf2;
    for (Eigen::Index j = 0; j < i; ++j) {
      double r2 = 0.0;
      for (Eigen::Index k = 0; k < x_.cols(); ++k) {
        const double u = (x_(i, k) - x_(j, k)) / h.lengthscales[k];
        r2 += u * u;
      }
      (*kf)(i, j) = (*kf)(j, i) = sf2 * std::exp(-0.5 * r2);
    }
  }
  const double noise2 = h.noise_std * h.noise_std;
  for (double jitter = options_.jitter; jitter <= options_.max_jitter * (1.0 + 1e-12);
       jitter *= 10.0) {
    Eigen::MatrixXd k = *kf;
    k.diagonal().array() += noise2 + jitter;
    llt->compute(k);
    if (llt->info() == Eigen::Success) return true;
  }
  return false;
}

double GaussianProcess::LogMarginalLikelihood(std::span<const double> theta,
                                              std::vector<double>* grad) const {
  const Eigen::Index n = x_.rows();
  const Eigen::Index d = x_.cols();
  if (n == 0) throw std::logic_error("GaussianProcess: no data");
  if (static_cast<Eigen::Index>(theta.size()) != d + 2) {
    throw std::invalid_argument("GaussianProcess: hyper-parameter size mismatch");
  }
  const GpHyper h = GpHyper::FromLog(theta);
  Eigen::MatrixXd kf;
  Eigen::LLT<Eigen::MatrixXd> llt;
  if (!Factor(h, &kf, &llt)) throw std::runtime_error("GaussianProcess: kernel not PD");

  const Eigen::VectorXd alpha = llt.solve(y_);
  const Eigen::MatrixXd l = llt.matrixL();
  const double lml = -0.5 * y_.dot(alpha) - l.diagonal().array().log().sum() -
                     0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
  if (grad != nullptr) {
    // d lml / d theta_j = 1/2 tr((alpha alpha^T - K^-1) dK/dtheta_j)
    const Eigen::MatrixXd w =
        alpha * alpha.transpose() - llt.solve(Eigen::MatrixXd::Identity(n, n));
    grad->assign(theta.size(), 0.0);
    (*grad)[0] = (w.array() * kf.array()).sum();  // dK = 2 Kf, halved
    for (Eigen::Index k = 0; k < d; ++k) {
      const double l2 = h.lengthscales[k] * h.lengthscales[k];
      double s = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          const double diff = x_(i, k) - x_(j, k);
          s += w(i, j) * kf(i, j) * diff * diff / l2;
        }
      }
      (*grad)[k + 1] = 0.5 * s;
    }
    (*grad)[d + 1] = w.trace() * h.noise_std * h.noise_std;
  }
  return lml;
}

void GaussianProcess::Project(std::vector<double>* theta) const {
  auto& t = *theta;
  t.front() = std::clamp(t.front(), std::log(options_.min_signal_std),
                         std::log(options_.max_signal_std));
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    t[i] = std::clamp(t[i], std::log(options_.min_lengthscale), std::log(options_.max_lengthscale));
  }
  if (options_.fixed_noise_std) {
    t.back() = std::log(*options_.fixed_noise_std);
  } else {
    t.back() = std::clamp(t.back(), std::log(options_.min_noise_std),
                          std::log(options_.max_noise_std));
  }
}

void GaussianProcess::Fit(std::span<const Point> x, std::span<const double> y, RngStream& rng) {
  SetData(x, y);
  const std::size_t d = static_cast<std::size_t>(x_.cols());
  auto safe_lml = [&](const std::vector<double>& theta, std::vector<double>* g) {
    try {
      const double v = LogMarginalLikelihood(theta, g);
      return std::isfinite(v) ? v : kNegInf;
    } catch (const std::runtime_error&) {
      return kNegInf;
    }
  };

  std::vector<double> best_theta;
  double best = kNegInf;
  for (int r = 0; r < std::max(1, options_.restarts); ++r) {
    std::vector<double> theta(d + 2);
    if (r == 0) {
      GpHyper h0;
      h0.lengthscales.assign(d, 0.3);
      theta = h0.ToLog();
    } else {
      theta.front() = rng.Uniform(std::log(options_.min_signal_std), std::log(options_.max_signal_std));
      for (std::size_t i = 1; i <= d; ++i) {
        theta[i] = rng.Uniform(std::log(options_.min_lengthscale), std::log(options_.max_lengthscale));
      }
      theta.back() = rng.Uniform(std::log(options_.min_noise_std), std::log(options_.max_noise_std));
    }
    Project(&theta);

    std::vector<double> grad;
    double value = safe_lml(theta, &grad);
    if (value == kNegInf) continue;
    double step = options_.initial_step;
    for (int it = 0; it < options_.max_iterations && step > 1e-10; ++it) {
      if (options_.fixed_noise_std) grad.back() = 0.0;
      double norm = 0.0;
      for (double g : grad) norm += g * g;
      norm = std::sqrt(norm);
      if (norm < 1e-10) break;
      // Normalised direction; the step length adapts by backtracking.
      std::vector<double> trial(theta);
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] += step * grad[i] / norm;
      Project(&trial);
      std::vector<double> trial_grad;
      const double trial_value = safe_lml(trial, &trial_grad);
      if (trial_value > value) {
        const double gain = trial_value - value;
        theta = std::move(trial);
        grad = std::move(trial_grad);
        value = trial_value;
        step *= 1.5;
        if (gain < 1e-9 * std::max(1.0, std::abs(value))) break;
      } else {
        step *= 0.5;
      }
    }
    if (value > best) {
      best = value;
      best_theta = theta;
    }
  }
  if (best_theta.empty()) {
    throw std::runtime_error("GaussianProcess: kernel not PD at any start");
  }
  lml_ = best;
  Condition(x, y, GpHyper::FromLog(best_theta));
}

void GaussianProcess::Condition(std::span<const Point> x, std::span<const double> y,
                                const GpHyper& hyper) {
  SetData(x, y);
  if (hyper.lengthscales.size() != static_cast<std::size_t>(x_.cols())) {
    throw std::invalid_argument("GaussianProcess: lengthscale count mismatch");
  }
  hyper_ = hyper;
  Eigen::MatrixXd kf;
  if (!Factor(hyper_, &kf, &llt_)) throw std::runtime_error("GaussianProcess: kernel not PD");
  alpha_ = llt_.solve(y_);
  fitted_ = true;
}

GpPrediction GaussianProcess::Predict(std::span<const double> x) const {
  if (!fitted_) throw std::logic_error("GaussianProcess: not fitted");
  const Eigen::Index n = x_.rows();
  const double sf2 = hyper_.signal_std * hyper_.signal_std;
  Eigen::VectorXd ks(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double r2 = 0.0;
    for (Eigen::Index k = 0; k < x_.cols(); ++k) {
      const double u = (x[k] - x_(i, k)) / hyper_.lengthscales[k];
      r2 += u * u;
    }
    ks(i) = sf2 * std::exp(-0.5 * r2);
  }
  const Eigen::VectorXd v = llt_.matrixL().solve(ks);
  const double var = std::max(0.0, sf2 - v.squaredNorm());
  return {y_mean_ + y_scale_ * ks.dot(alpha_), y_scale_ * std::sqrt(var)};
}

double ExpectedImprovement(double mean, double std, double y_star) {
  if (!(std > 0.0)) return 0.0;
  const double s = (mean - y_star) / std;
  const double cdf = 0.5 * std::erfc(-s / std::numbers::sqrt2);
  const double pdf = std::exp(-0.5 * s * s) / std::sqrt(2.0 * std::numbers::pi);
  return std::max(0.0, (mean - y_star) * cdf + std * pdf);
}

double UpperConfidenceBound(double mean, double std, double delta) {
  return mean + delta * std;
}

Point BayesOpt::Suggest(const Dataset& data, int iteration, RngStream& rng) {
  last_fallback_ = false;
  RngStream fallback_rng = rng.Split(2);
  if (data.size() < 2) {
    last_fallback_ = true;
    return UniformPoint(dim_, fallback_rng);
  }
  try {
    GaussianProcess gp(options_.gp);
    const std::vector<Point> xs = data.Points();
    const std::vector<double> ys = data.Values();
    RngStream fit_rng = rng.Split(0);
    gp.Fit(xs, ys, fit_rng);
    const double y_star = *std::max_element(ys.begin(), ys.end());
    ScoreFn score;
    if (options_.acquisition == BoAcquisition::kEi) {
      score = [&](std::span<const double> x) {
        const GpPrediction p = gp.Predict(x);
        return ExpectedImprovement(p.mean, p.std, y_star);
      };
    } else {
      score = [&](std::span<const double> x) {
        const GpPrediction p = gp.Predict(x);
        return UpperConfidenceBound(p.mean, p.std, options_.delta);
      };
    }
    RngStream acq_rng = rng.Split(1);
    return MaximizeAcquisition(score, dim_, xs, options_.maximizer, acq_rng).x;
  } catch (const std::exception& e) {
    spdlog::warn("{}: GP fit failed at iteration {} ({}); sampling uniformly", Name(),
                 iteration, e.what());
    last_fallback_ = true;
    return UniformPoint(dim_, fallback_rng);
  }
}

}  // namespace ampc
