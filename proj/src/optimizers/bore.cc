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

#include "ampc/optimizers/bore.h"

#include <algorithm>
#include <exception>

#include <spdlog/spdlog.h>

#include "ampc/core/sampling.h"

namespace ampc {

Bore::Bore(std::size_t dim, GammaSchedule schedule, BoreOptions options)
    : dim_(dim), schedule_(schedule), options_(std::move(options)) {}

std::string Bore::Name() const {
  return options_.classifier == ClassifierKind::kMlp ? "bore-mlp" : "bore-rf";
}

std::unique_ptr<ProbabilisticClassifier> Bore::MakeClassifier() const {
  if (options_.classifier == ClassifierKind::kMlp) {
    return std::make_unique<Mlp>(options_.mlp);
  }
  return std::make_unique<RandomForest>(options_.forest);
}

Point Bore::Suggest(const Dataset& data, int iteration, RngStream& rng) {
  last_ = Diagnostics{};
  last_.iteration = iteration;
  last_.gamma = schedule_.At(iteration);
  last_.observations = static_cast<int>(data.size());
  RngStream fallback_rng = rng.Split(2);

  if (data.empty()) {
    last_.fallback = true;
    return UniformPoint(dim_, fallback_rng);
  }

  const std::vector<double> values = data.Values();
  last_.tau = EmpiricalQuantile(values, last_.gamma);
  LabelledSet labelled{data.Points(), AssignLabels(values, last_.tau)};
  last_.positives = static_cast<int>(labelled.Positives());
  if (data.size() < 2 || !labelled.HasBothClasses()) {
    last_.fallback = true;
    return UniformPoint(dim_, fallback_rng);
  }

  try {
    std::unique_ptr<ProbabilisticClassifier> classifier = MakeClassifier();
    RngStream fit_rng = rng.Split(0);
    classifier->Fit(labelled, fit_rng);
    RngStream acq_rng = rng.Split(1);
    const AcquisitionResult best = MaximizeAcquisition(
        [&](std::span<const double> x) { return classifier->PredictProba(x); },
        dim_, labelled.x, options_.acquisition, acq_rng);
    return best.x;
  } catch (const std::exception& e) {
    spdlog::warn("{}: classifier failed at iteration {} ({}); sampling uniformly",
                 Name(), iteration, e.what());
    last_.fallback = true;
    return UniformPoint(dim_, fallback_rng);
  }
}

}  // namespace ampc
