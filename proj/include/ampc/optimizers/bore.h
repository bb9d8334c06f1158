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

#ifndef AMPC_OPTIMIZERS_BORE_H_
#define AMPC_OPTIMIZERS_BORE_H_

#include <memory>

#include "ampc/classifiers/classifier.h"
#include "ampc/classifiers/mlp.h"
#include "ampc/classifiers/random_forest.h"
#include "ampc/optimizers/acquisition.h"
#include "ampc/optimizers/optimizer.h"

namespace ampc {

enum class ClassifierKind { kRandomForest, kMlp };

struct BoreOptions {
  ClassifierKind classifier = ClassifierKind::kRandomForest;
  RandomForestOptions forest;
  MlpOptions mlp;
  AcquisitionOptions acquisition;
};

// Bayesian optimisation by density-ratio estimation. Each iteration labels
// the observed values by the top-gamma_t quantile, retrains a fresh
// classifier on (x, z) and proposes the maximiser of its class-1
// probability, which is proportional to the gamma-relative density ratio.
class Bore final : public Optimizer {
 public:
  struct Diagnostics {
    int iteration = 0;
    double gamma = 0.0;
    double tau = 0.0;
    int observations = 0;
    int positives = 0;
    // Set when the suggestion came from uniform sampling (cold start,
    // single-class labels or classifier failure).
    bool fallback = false;
  };

  Bore(std::size_t dim, GammaSchedule schedule, BoreOptions options = {});

  std::string Name() const override;
  Point Suggest(const Dataset& data, int iteration, RngStream& rng) override;

  const Diagnostics& last() const { return last_; }
  const GammaSchedule& schedule() const { return schedule_; }

 private:
  std::unique_ptr<ProbabilisticClassifier> MakeClassifier() const;

  std::size_t dim_;
  GammaSchedule schedule_;
  BoreOptions options_;
  Diagnostics last_;
};

}  // namespace ampc

#endif  // AMPC_OPTIMIZERS_BORE_H_
