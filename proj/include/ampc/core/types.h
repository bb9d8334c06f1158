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

#ifndef AMPC_CORE_TYPES_H_
#define AMPC_CORE_TYPES_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ampc {

// A point of the search box. Optimisers and classifiers always work on
// points normalised to the unit box; SearchSpace converts to physical units.
using Point = std::vector<double>;

struct Dimension {
  std::string name;
  double lower;
  double upper;
};

class SearchSpace {
 public:
  SearchSpace() = default;
  // Throws std::invalid_argument on lower >= upper or duplicate names.
  explicit SearchSpace(std::vector<Dimension> dims);

  std::size_t size() const { return dims_.size(); }
  const std::vector<Dimension>& dims() const { return dims_; }
  const Dimension& operator[](std::size_t i) const { return dims_[i]; }

  std::optional<std::size_t> IndexOf(const std::string& name) const;

  Point Normalize(std::span<const double> physical) const;
  std::vector<double> Denormalize(std::span<const double> unit) const;

  // Unit-box membership (closed box).
  static bool InUnitBox(std::span<const double> unit);
  Point Center() const { return Point(dims_.size(), 0.5); }

 private:
  std::vector<Dimension> dims_;
};

// MPPI hyper-parameters (phi).
struct ControllerConfig {
  double lambda = 1.0;     // temperature
  double sigma_eps = 1.0;  // control noise std, action units

  void Validate() const;
};

// Mean and standard deviation of one model parameter's distribution.
struct ParamMoments {
  double mu;
  double sigma;
};

// Distribution parameters (psi), one entry per model parameter theta_j.
struct ModelDistParams {
  std::vector<ParamMoments> params;

  void Validate() const;
};

struct EvalRecord {
  Point x;  // unit-box coordinates, SearchSpace order
  double g = 0.0;
  std::vector<double> episode_returns;
};

// Append-only history of evaluations.
class Dataset {
 public:
  void Append(EvalRecord record) { records_.push_back(std::move(record)); }

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const std::vector<EvalRecord>& records() const { return records_; }
  const EvalRecord& operator[](std::size_t i) const { return records_[i]; }

  std::vector<double> Values() const;
  std::vector<Point> Points() const;
  // Index of the record with maximum g (first on ties). Requires non-empty.
  std::size_t ArgMax() const;

 private:
  std::vector<EvalRecord> records_;
};

}  // namespace ampc

#endif  // AMPC_CORE_TYPES_H_
