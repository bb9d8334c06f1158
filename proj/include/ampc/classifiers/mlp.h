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

#ifndef AMPC_CLASSIFIERS_MLP_H_
#define AMPC_CLASSIFIERS_MLP_H_

#include <optional>
#include <span>
#include <vector>

#include "ampc/classifiers/classifier.h"

namespace ampc {

struct MlpOptions {
  int hidden = 32;
  int epochs = 1000;
  int batch_size = 32;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Two ReLU hidden layers and a sigmoid output, trained with Adam on the
// mean binary cross-entropy.
//
// Parameters live in one flat vector, laid out as
//   W1 (hidden x d, row-major), b1 (hidden),
//   W2 (hidden x hidden),       b2 (hidden),
//   w3 (hidden),                b3 (1).
class Mlp final : public ProbabilisticClassifier {
 public:
  explicit Mlp(MlpOptions options = {}) : options_(options) {}

  // Re-initialises from scratch on every call: He-style uniform weights
  // U(-sqrt(6 / fan_in), sqrt(6 / fan_in)) for the ReLU layers,
  // U(-sqrt(3 / fan_in), sqrt(3 / fan_in)) for the output layer, zero biases.
  void Initialize(int input_dim, RngStream& rng);

  void Fit(const LabelledSet& data, RngStream& rng) override;
  double PredictProba(std::span<const double> x) const override;
  bool fitted() const override { return fitted_; }

  // Pre-sigmoid output.
  double Logit(std::span<const double> x) const;

  // Mean BCE over the given samples; when grad is non-null it receives the
  // analytic gradient with respect to params().
  double LossAndGradient(std::span<const Point> x, std::span<const int> z,
                         std::vector<double>* grad) const;

  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }
  int input_dim() const { return input_dim_; }
  // Mean training loss per epoch of the last Fit().
  const std::vector<double>& loss_history() const { return loss_history_; }

 private:
  MlpOptions options_;
  int input_dim_ = 0;
  std::vector<double> params_;
  std::vector<double> loss_history_;
  std::optional<double> constant_;
  bool fitted_ = false;
};

}  // namespace ampc

#endif  // AMPC_CLASSIFIERS_MLP_H_
