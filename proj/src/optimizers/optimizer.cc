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

#include "ampc/optimizers/optimizer.h"

#include <stdexcept>

namespace ampc {

Point UniformPoint(std::size_t dim, RngStream& rng) {
  Point x(dim);
  for (auto& v : x) v = rng.Uniform();
  return x;
}

GammaSchedule::GammaSchedule(double gamma_1, double gamma_n, int n)
    : gamma_1_(gamma_1), gamma_n_(gamma_n), n_(n) {
  if (!(gamma_n > 0.0 && gamma_n <= gamma_1 && gamma_1 < 1.0)) {
    throw std::invalid_argument("GammaSchedule: need 0 < gamma_n <= gamma_1 < 1");
  }
  if (n < 1) throw std::invalid_argument("GammaSchedule: n must be >= 1");
}

double GammaSchedule::At(int t) const {
  if (t < 1 || t > n_) throw std::domain_error("GammaSchedule: t out of range");
  if (n_ == 1 || t == 1) return gamma_1_;
  if (t == n_) return gamma_n_;  // exact endpoint, no rounding from the slope
  return gamma_1_ - static_cast<double>(t - 1) / static_cast<double>(n_ - 1) *
                        (gamma_1_ - gamma_n_);
}

}  // namespace ampc
