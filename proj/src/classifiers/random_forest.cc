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

#include "ampc/classifiers/random_forest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ampc {
namespace {

// n * Gini impurity of a node with n samples, pos of them positive.
double WeightedGini(double n, double pos) {
  if (n <= 0.0) return 0.0;
  const double p = pos / n;
  return n * 2.0 * p * (1.0 - p);
}

}  // namespace

void DecisionTree::Fit(const LabelledSet& data, const std::vector<int>& sample,
                       const RandomForestOptions& options, RngStream& rng) {
  nodes_.clear();
  std::vector<int> idx = sample;
  Grow(data, idx, 0, static_cast<int>(idx.size()), 0, options, rng);
}

int DecisionTree::Grow(const LabelledSet& data, std::vector<int>& idx, int begin,
                       int end, int depth, const RandomForestOptions& options,
                       RngStream& rng) {
  const int n = end - begin;
  int pos = 0;
  for (int i = begin; i < end; ++i) pos += data.z[idx[i]];

  const int node_id = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{});
  nodes_[node_id].value = n > 0 ? static_cast<double>(pos) / n : 0.0;

  if (depth >= options.max_depth || n < options.min_samples_split || pos == 0 ||
      pos == n) {
    return node_id;
  }

  const int d = static_cast<int>(data.x.front().size());
  int max_features = options.max_features > 0
                         ? std::min(options.max_features, d)
                         : std::max(1, static_cast<int>(std::sqrt(static_cast<double>(d))));
  std::vector<int> features(d);
  std::iota(features.begin(), features.end(), 0);
  for (int i = d - 1; i > 0; --i) {
    std::swap(features[i], features[rng.Index(static_cast<std::size_t>(i) + 1)]);
  }

  const double parent = WeightedGini(n, pos);
  double best_impurity = parent;
  int best_feature = -1;
  double best_threshold = 0.0;
  std::vector<std::pair<double, int>> column(n);

  for (int f_rank = 0; f_rank < d; ++f_rank) {
    // Keep drawing features past max_features only while no split was found.
    if (f_rank >= max_features && best_feature >= 0) break;
    const int f = features[f_rank];
    for (int i = 0; i < n; ++i) {
      const int sample = idx[begin + i];
      column[i] = {data.x[sample][f], data.z[sample]};
    }
    std::sort(column.begin(), column.end());
    int left_n = 0;
    int left_pos = 0;
    for (int i = 0; i + 1 < n; ++i) {
      ++left_n;
      left_pos += column[i].second;
      if (column[i].first == column[i + 1].first) continue;
      if (left_n < options.min_samples_leaf || n - left_n < options.min_samples_leaf) {
        continue;
      }
      const double impurity =
          WeightedGini(left_n, left_pos) + WeightedGini(n - left_n, pos - left_pos);
      if (impurity < best_impurity - 1e-12) {
        best_impurity = impurity;
        best_feature = f;
        best_threshold = 0.5 * (column[i].first + column[i + 1].first);
      }
    }
  }
  if (best_feature < 0) return node_id;

  const auto mid = std::stable_partition(
      idx.begin() + begin, idx.begin() + end,
      [&](int s) { return data.x[s][best_feature] <= best_threshold; });
  const int split = static_cast<int>(mid - idx.begin());

  const int left = Grow(data, idx, begin, split, depth + 1, options, rng);
  const int right = Grow(data, idx, split, end, depth + 1, options, rng);
  Node& node = nodes_[node_id];
  node.feature = best_feature;
  node.threshold = best_threshold;
  node.left = left;
  node.right = right;
  return node_id;
}

double DecisionTree::Predict(std::span<const double> x) const {
  int i = 0;
  while (nodes_[i].feature >= 0) {
    i = x[nodes_[i].feature] <= nodes_[i].threshold ? nodes_[i].left : nodes_[i].right;
  }
  return nodes_[i].value;
}

int DecisionTree::Depth() const {
  std::vector<int> depth(nodes_.size(), 0);
  int deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, depth[i]);
    if (nodes_[i].feature >= 0) {
      depth[nodes_[i].left] = depth[i] + 1;
      depth[nodes_[i].right] = depth[i] + 1;
    }
  }
  return deepest;
}

void RandomForest::Fit(const LabelledSet& data, RngStream& rng) {
  data.Validate();
  if (options_.n_trees < 1) throw std::invalid_argument("RandomForest: n_trees < 1");
  trees_.clear();
  constant_.reset();
  fitted_ = true;
  if (!data.HasBothClasses()) {
    constant_ = data.Positives() > 0 ? 1.0 : 0.0;
    return;
  }
  const std::size_t n = data.size();
  trees_.resize(options_.n_trees);
  for (int t = 0; t < options_.n_trees; ++t) {
    RngStream tree_rng = rng.Split(static_cast<std::uint64_t>(t));
    std::vector<int> sample(n);
    for (auto& s : sample) s = static_cast<int>(tree_rng.Index(n));
    trees_[t].Fit(data, sample, options_, tree_rng);
  }
}

double RandomForest::PredictProba(std::span<const double> x) const {
  if (!fitted_) throw std::logic_error("RandomForest: predict before fit");
  if (constant_) return *constant_;
  double sum = 0.0;
  for (const auto& tree : trees_) sum += tree.Predict(x);
  return sum / static_cast<double>(trees_.size());
}

}  // namespace ampc
