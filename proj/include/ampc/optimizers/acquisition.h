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

#ifndef AMPC_OPTIMIZERS_ACQUISITION_H_
#define AMPC_OPTIMIZERS_ACQUISITION_H_

#include <functional>
#include <span>

#include "ampc/core/rng.h"
#include "ampc/core/types.h"

namespace ampc {

using ScoreFn = std::function<double(std::span<const double>)>;

enum class AcquisitionMethod {
  kRandomLocal,  // random probes, then local random search from the best
  kCmaes,        // random probes, then CMA-ES from the best
};

struct AcquisitionOptions {
  int candidates = 1024;
  int local_iterations = 100;
  double initial_step = 0.1;
  double shrink = 0.9;
  AcquisitionMethod method = AcquisitionMethod::kRandomLocal;
  // Score the evaluated points as extra candidates. A piecewise-constant
  // score (random forest) then tends to return an incumbent verbatim, since
  // its all-trees-agree cell is too small for the probes to hit.
  bool include_incumbents = true;
};

struct AcquisitionResult {
  Point x;
  double score;
};

// Scores `candidates` uniform probes followed by the incumbents (when
// enabled), keeps the first best (ties go to the lowest index), then refines
// it. Only strict improvements replace the incumbent best, so the result
// scores at least as high as every probe.
AcquisitionResult MaximizeAcquisition(const ScoreFn& score, std::size_t dim,
                                      std::span<const Point> incumbents,
                                      const AcquisitionOptions& options,
                                      RngStream& rng);

}  // namespace ampc

#endif  // AMPC_OPTIMIZERS_ACQUISITION_H_
