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

#ifndef AMPC_CLASSIFIERS_CLASSIFIER_H_
#define AMPC_CLASSIFIERS_CLASSIFIER_H_

#include <span>
#include <vector>

#include "ampc/core/rng.h"
#include "ampc/core/types.h"

namespace ampc {

// Binary-labelled inputs, normalised to the unit box.
struct LabelledSet {
  std::vector<Point> x;
  std::vector<int> z;

  std::size_t size() const { return x.size(); }
  std::size_t Positives() const;
  bool HasBothClasses() const;
  // Throws std::invalid_argument on ragged or mismatched data.
  void Validate() const;
};

// A classifier returning pi(x) = p(z = 1 | x).
class ProbabilisticClassifier {
 public:
  virtual ~ProbabilisticClassifier() = default;

  // Data with a single class yields a constant classifier at that class's
  // empirical rate.
  virtual void Fit(const LabelledSet& data, RngStream& rng) = 0;
  // Output in [0, 1]. Throws std::logic_error before Fit().
  virtual double PredictProba(std::span<const double> x) const = 0;
  virtual bool fitted() const = 0;
};

}  // namespace ampc

#endif  // AMPC_CLASSIFIERS_CLASSIFIER_H_
