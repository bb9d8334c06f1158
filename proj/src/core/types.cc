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

#include "ampc/core/types.h"

#include <set>
#include <stdexcept>

namespace ampc {

SearchSpace::SearchSpace(std::vector<Dimension> dims) : dims_(std::move(dims)) {
  std::set<std::string> names;
  for (const auto& d : dims_) {
    if (!(d.lower < d.upper)) {
      throw std::invalid_argument("search dimension '" + d.name +
                                  "' needs lower < upper");
    }
    if (!names.insert(d.name).second) {
      throw std::invalid_argument("duplicate search dimension '" + d.name +
                                  "'");
    }
  }
}

std::optional<std::size_t> SearchSpace::IndexOf(const std::string& name) const {
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i].name == name) return i;
  }
  return std::nullopt;
}

Point SearchSpace::Normalize(std::span<const double> physical) const {
  if (physical.size() != dims_.size()) {
    throw std::invalid_argument("Normalize: dimension mismatch");
  }
  Point unit(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    unit[i] = (physical[i] - dims_[i].lower) / (dims_[i].upper - dims_[i].lower);
  }
  return unit;
}

std::vector<double> SearchSpace::Denormalize(std::span<const double> unit) const {
  if (unit.size() != dims_.size()) {
    throw std::invalid_argument("Denormalize: dimension mismatch");
  }
  std::vector<double> physical(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    physical[i] = dims_[i].lower + unit[i] * (dims_[i].upper - dims_[i].lower);
  }
  return physical;
}

bool SearchSpace::InUnitBox(std::span<const double> unit) {
  for (double u : unit) {
    if (!(u >= 0.0 && u <= 1.0)) return false;
  }
  return true;
}

void ControllerConfig::Validate() const {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (!(sigma_eps > 0.0)) throw std::invalid_argument("sigma_eps must be > 0");
}

void ModelDistParams::Validate() const {
  for (const auto& p : params) {
    if (!(p.mu > 0.0) || !(p.sigma > 0.0)) {
      throw std::invalid_argument("model parameter moments must be > 0");
    }
  }
}

std::vector<double> Dataset::Values() const {
  std::vector<double> values;
  values.reserve(records_.size());
  for (const auto& r : records_) values.push_back(r.g);
  return values;
}

std::vector<Point> Dataset::Points() const {
  std::vector<Point> points;
  points.reserve(records_.size());
  for (const auto& r : records_) points.push_back(r.x);
  return points;
}

std::size_t Dataset::ArgMax() const {
  if (records_.empty()) throw std::logic_error("Dataset::ArgMax on empty set");
  std::size_t best = 0;
  for (std::size_t i = 1; i < records_.size(); ++i) {
    if (records_[i].g > records_[best].g) best = i;
  }
  return best;
}

}  // namespace ampc
