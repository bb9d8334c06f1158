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

#ifndef AMPC_CORE_SAMPLING_H_
#define AMPC_CORE_SAMPLING_H_

#include <span>
#include <vector>

#include "ampc/core/rng.h"
#include "ampc/core/types.h"

namespace ampc {

// Shape/rate parameters of a gamma distribution.
struct GammaParams {
  double shape;  // alpha
  double rate;   // beta
};

// Moment matching: alpha = mu^2 / sigma^2, beta = mu / sigma^2, so that
// Gamma(alpha, beta) has mean mu and standard deviation sigma.
// Throws std::domain_error unless mu > 0 and sigma > 0.
GammaParams GammaFromMoments(double mu, double sigma);

// Draws theta_j ~ Gamma(GammaFromMoments(mu_j, sigma_j)) independently.
std::vector<double> SampleModelParams(const ModelDistParams& psi,
                                      RngStream& rng);

// Threshold tau such that the values with v >= tau form the top-gamma
// fraction: the empirical (1 - gamma)-quantile with linear interpolation.
// If that threshold would label every value positive although the values
// are not all equal, tau is raised to the second-smallest distinct value so
// both classes are present.
// Throws std::domain_error on empty input or gamma outside (0, 1).
double EmpiricalQuantile(std::span<const double> values, double gamma);

// z_k = 1 iff values_k >= tau.
std::vector<int> AssignLabels(std::span<const double> values, double tau);

}  // namespace ampc

#endif  // AMPC_CORE_SAMPLING_H_
