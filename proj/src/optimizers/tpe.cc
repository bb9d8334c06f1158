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

#include "ampc/optimizers/tpe.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ampc/core/sampling.h"

namespace ampc {

ParzenEstimator::ParzenEstimator(std::vector<Point> centers, double bandwidth_floor,
                                 double prior_weight, bool magic_clip)
    : centers_(std::move(centers)), prior_weight_(prior_weight) {
  if (centers_.empty()) throw std::invalid_argument("ParzenEstimator: no points");
  if (prior_weight_ < 0.0) throw std::invalid_argument("ParzenEstimator: negative prior weight");
  const std::size_t d = centers_.front().size();
  const double n = static_cast<double>(centers_.size());
  const double factor = std::pow(n, -1.0 / (static_cast<double>(d) + 4.0));
  if (magic_clip) bandwidth_floor = std::max(bandwidth_floor, 1.0 / std::min(100.0, n + 1.0));
  bandwidths_.assign(d, bandwidth_floor);
  for (std::size_t k = 0; k < d; ++k) {
    double std_k = 0.0;
    if (centers_.size() > 1) {
      double mean = 0.0;
      for (const auto& c : centers_) mean += c[k];
      mean /= n;
      double ss = 0.0;
      for (const auto& c : centers_) ss += (c[k] - mean) * (c[k] - mean);
      std_k = std::sqrt(ss / (n - 1.0));
    }
    bandwidths_[k] = std::max(bandwidth_floor, std_k * factor);
  }
}

double ParzenEstimator::LogDensity(std::span<const double> x) const {
  const double log_norm = 0.5 * std::log(2.0 * std::numbers::pi);
  std::vector<double> terms(centers_.size());
  double max_term = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < centers_.size(); ++j) {
    double t = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double u = (x[k] - centers_[j][k]) / bandwidths_[k];
      t += -0.5 * u * u - std::log(bandwidths_[k]) - log_norm;
    }
    terms[j] = t;
    max_term = std::max(max_term, t);
  }
  // The uniform prior has log density 0 on the unit box.
  max_term = std::max(max_term, 0.0);
  double sum = prior_weight_ * std::exp(-max_term);
  for (double t : terms) sum += std::exp(t - max_term);
  return max_term + std::log(sum) -
         std::log(static_cast<double>(centers_.size()) + prior_weight_);
}

Point ParzenEstimator::SampleInBox(RngStream& rng) const {
  const double n = static_cast<double>(centers_.size());
  if (prior_weight_ > 0.0 && rng.Uniform() * (n + prior_weight_) < prior_weight_) {
    Point x(bandwidths_.size());
    for (double& v : x) v = rng.Uniform();
    return x;
  }
  const Point& c = centers_[rng.Index(centers_.size())];
  Point x(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    double v = c[k] + bandwidths_[k] * rng.Normal();
    for (int attempt = 0; attempt < 100 && (v < 0.0 || v > 1.0); ++attempt) {
      v = c[k] + bandwidths_[k] * rng.Normal();
    }
    x[k] = std::clamp(v, 0.0, 1.0);
  }
  return x;
}

Point Tpe::Suggest(const Dataset& data, int, RngStream& rng) {
  if (data.size() < 2) return UniformPoint(dim_, rng);
  const std::vector<double> values = data.Values();
  const std::vector<int> z = AssignLabels(values, EmpiricalQuantile(values, options_.gamma));
  std::vector<Point> good, bad;
  for (std::size_t k = 0; k < data.size(); ++k) {
    (z[k] == 1 ? good : bad).push_back(data[k].x);
  }
  if (good.empty() || bad.empty()) return UniformPoint(dim_, rng);

  const ParzenEstimator a(std::move(good), options_.bandwidth_floor, options_.prior_weight,
                          options_.magic_clip);
  const ParzenEstimator b(std::move(bad), options_.bandwidth_floor, options_.prior_weight,
                          options_.magic_clip);
  Point best;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < std::max(1, options_.candidates); ++i) {
    Point x = a.SampleInBox(rng);
    const double score = a.LogDensity(x) - b.LogDensity(x);
    if (best.empty() || score > best_score) {
      best = std::move(x);
      best_score = score;
    }
  }
  return best;
}

}  // namespace ampc
