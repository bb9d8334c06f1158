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

#include "ampc/optimizers/factory.h"

#include <stdexcept>

namespace ampc {

const std::vector<std::string>& OptimizerNames() {
  static const std::vector<std::string> names = {"bore-rf", "bore-mlp", "bo-ucb", "bo-ei",
                                                 "tpe",     "cmaes",    "random"};
  return names;
}

std::unique_ptr<Optimizer> MakeOptimizer(const std::string& name, std::size_t dim,
                                         const OptimizerSettings& settings) {
  if (name == "bore-rf" || name == "bore-mlp") {
    BoreOptions options = settings.bore;
    options.classifier = name == "bore-mlp" ? ClassifierKind::kMlp : ClassifierKind::kRandomForest;
    return std::make_unique<Bore>(
        dim, GammaSchedule(settings.gamma_1, settings.gamma_n, settings.iterations), options);
  }
  if (name == "bo-ucb" || name == "bo-ei") {
    BoOptions options = settings.bo;
    options.acquisition = name == "bo-ei" ? BoAcquisition::kEi : BoAcquisition::kUcb;
    return std::make_unique<BayesOpt>(dim, options);
  }
  if (name == "tpe") return std::make_unique<Tpe>(dim, settings.tpe);
  if (name == "cmaes") return std::make_unique<CmaesOptimizer>(dim, settings.cmaes);
  if (name == "random") return std::make_unique<RandomSearch>(dim);
  throw std::invalid_argument("unknown optimizer '" + name + "'");
}

}  // namespace ampc
