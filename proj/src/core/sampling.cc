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

#include "ampc/core/sampling.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ampc {

GammaParams GammaFromMoments(double mu, double sigma) {
  if (!(mu > 0.0) || !(sigma > 0.0)) {
    throw std::domain_error("GammaFromMoments: mu and sigma must be > 0");
  }
  const double var = sigma * sigma;
  return {mu * mu / var, mu / var};
}

std::vector<double> SampleModelParams(const ModelDistParams& psi,
                                      RngStream& rng) {
  std::vector<double> theta;
  theta.reserve(psi.params.size());
  for (const auto& p : psi.params) {
    const GammaParams g = GammaFromMoments(p.mu, p.sigma);
    double value = rng.Gamma(g.shape, g.rate);
    // Extremely small shapes can underflow to zero; keep the support open.
    if (!(value > 0.0)) value = std::numeric_limits<double>::min();
    theta.push_back(value);
  }
  return theta;
}

double EmpiricalQuantile(std::span<const double> values, double gamma) {
  if (values.empty()) {
    throw std::domain_error("EmpiricalQuantile: empty input");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::domain_error("EmpiricalQuantile: gamma must lie in (0, 1)");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = static_cast<double>(sorted.size() - 1) * (1.0 - gamma);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double tau = sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);

  if (tau <= sorted.front() && sorted.back() > sorted.front()) {
    tau = *std::upper_bound(sorted.begin(), sorted.end(), sorted.front());
  }
  return tau;
}

std::vector<int> AssignLabels(std::span<const double> values, double tau) {
  std::vector<int> z(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) z[k] = values[k] >= tau ? 1 : 0;
  return z;
}

}  // namespace ampc
