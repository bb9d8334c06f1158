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

#ifndef AMPC_OPTIMIZERS_FACTORY_H_
#define AMPC_OPTIMIZERS_FACTORY_H_

#include <memory>
#include <string>
#include <vector>

#include "ampc/optimizers/bore.h"
#include "ampc/optimizers/cmaes.h"
#include "ampc/optimizers/gp.h"
#include "ampc/optimizers/optimizer.h"
#include "ampc/optimizers/tpe.h"

namespace ampc {

// Everything any optimiser might need; each one reads only its own part.
struct OptimizerSettings {
  double gamma_1 = 0.5;
  double gamma_n = 0.05;
  int iterations = 50;
  BoreOptions bore;
  BoOptions bo;
  TpeOptions tpe;
  CmaesOptimizerOptions cmaes;
};

// Names: bore-rf, bore-mlp, bo-ucb, bo-ei, tpe, cmaes, random.
const std::vector<std::string>& OptimizerNames();

// Throws std::invalid_argument for unknown names.
std::unique_ptr<Optimizer> MakeOptimizer(const std::string& name, std::size_t dim,
                                         const OptimizerSettings& settings);

}  // namespace ampc

#endif  // AMPC_OPTIMIZERS_FACTORY_H_
