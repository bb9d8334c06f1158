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

#ifndef AMPC_CLASSIFIERS_RANDOM_FOREST_H_
#define AMPC_CLASSIFIERS_RANDOM_FOREST_H_

#include <optional>
#include <vector>

#include "ampc/classifiers/classifier.h"

namespace ampc {

struct RandomForestOptions {
  int n_trees = 50;
  int max_depth = 16;
  int min_samples_split = 2;
  int min_samples_leaf = 1;
  // Features tried per node; 0 means floor(sqrt(d)), at least 1.
  int max_features = 0;
};

// CART tree grown on a bootstrap resample with Gini impurity. Leaves store
// the positive-class fraction of their training samples.
class DecisionTree {
 public:
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;  // positive fraction
  };

  void Fit(const LabelledSet& data, const std::vector<int>& sample,
           const RandomForestOptions& options, RngStream& rng);
  double Predict(std::span<const double> x) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  int Depth() const;

 private:
  int Grow(const LabelledSet& data, std::vector<int>& idx, int begin, int end,
           int depth, const RandomForestOptions& options, RngStream& rng);

  std::vector<Node> nodes_;
};

class RandomForest final : public ProbabilisticClassifier {
 public:
  explicit RandomForest(RandomForestOptions options = {}) : options_(options) {}

  // Tree t is grown from rng.Split(t).
  void Fit(const LabelledSet& data, RngStream& rng) override;
  // Mean over trees of the leaf positive fractions.
  double PredictProba(std::span<const double> x) const override;
  bool fitted() const override { return fitted_; }

  const std::vector<DecisionTree>& trees() const { return trees_; }
  const RandomForestOptions& options() const { return options_; }

 private:
  RandomForestOptions options_;
  std::vector<DecisionTree> trees_;
  std::optional<double> constant_;
  bool fitted_ = false;
};

}  // namespace ampc

#endif  // AMPC_CLASSIFIERS_RANDOM_FOREST_H_
