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

#include "ampc/optimizers/acquisition.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ampc/optimizers/cmaes.h"
#include "ampc/optimizers/optimizer.h"

namespace ampc {
namespace {

// NaN scores never win.
double Sanitize(double s) {
  return std::isnan(s) ? -std::numeric_limits<double>::infinity() : s;
}

void LocalRandomSearch(const ScoreFn& score, const AcquisitionOptions& options,
                       RngStream& rng, AcquisitionResult& best) {
  double step = options.initial_step;
  Point proposal(best.x.size());
  for (int it = 0; it < options.local_iterations; ++it) {
    for (std::size_t k = 0; k < proposal.size(); ++k) {
      proposal[k] = std::clamp(best.x[k] + step * rng.Normal(), 0.0, 1.0);
    }
    const double s = Sanitize(score(proposal));
    if (s > best.score) {
      best.x = proposal;
      best.score = s;
    } else {
      step *= options.shrink;
    }
  }
}

void CmaesRefine(const ScoreFn& score, const AcquisitionOptions& options,
                 RngStream& rng, AcquisitionResult& best) {
  CmaEsOptions cma_options;
  cma_options.popsize = std::max(4, 4 + static_cast<int>(3 * std::log(best.x.size())));
  cma_options.sigma0 = options.initial_step;
  CmaEs cma(best.x, cma_options);
  int evaluations = 0;
  while (evaluations < options.local_iterations) {
    std::vector<Point> population = cma.Ask(rng);
    std::vector<double> fitness(population.size());
    for (std::size_t i = 0; i < population.size(); ++i) {
      for (double& v : population[i]) v = std::clamp(v, 0.0, 1.0);
      fitness[i] = Sanitize(score(population[i]));
      ++evaluations;
      if (fitness[i] > best.score) {
        best.x = population[i];
        best.score = fitness[i];
      }
    }
    cma.Tell(population, fitness);
  }
}

}  // namespace

AcquisitionResult MaximizeAcquisition(const ScoreFn& score, std::size_t dim,
                                      std::span<const Point> incumbents,
                                      const AcquisitionOptions& options,
                                      RngStream& rng) {
  if (dim == 0) throw std::invalid_argument("MaximizeAcquisition: dim == 0");
  if (options.candidates < 1 && (incumbents.empty() || !options.include_incumbents)) {
    throw std::invalid_argument("MaximizeAcquisition: nothing to score");
  }
  AcquisitionResult best{Point(dim, 0.5), -std::numeric_limits<double>::infinity()};
  bool have_best = false;
  auto consider = [&](const Point& x) {
    const double s = Sanitize(score(x));
    if (!have_best || s > best.score) {
      best = {x, s};
      have_best = true;
    }
  };
  for (int i = 0; i < options.candidates; ++i) consider(UniformPoint(dim, rng));
  if (options.include_incumbents) {
    for (const Point& x : incumbents) consider(x);
  }

  if (options.method == AcquisitionMethod::kCmaes) {
    CmaesRefine(score, options, rng, best);
  } else {
    LocalRandomSearch(score, options, rng, best);
  }
  return best;
}

}  // namespace ampc
