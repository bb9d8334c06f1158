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

#include "ampc/classifiers/classifier.h"

#include <algorithm>
#include <stdexcept>

namespace ampc {

std::size_t LabelledSet::Positives() const {
  return static_cast<std::size_t>(std::count(z.begin(), z.end(), 1));
}

bool LabelledSet::HasBothClasses() const {
  const std::size_t pos = Positives();
  return pos > 0 && pos < z.size();
}

void LabelledSet::Validate() const {
  if (x.size() != z.size()) {
    throw std::invalid_argument("LabelledSet: x and z sizes differ");
  }
  if (x.empty()) throw std::invalid_argument("LabelledSet: empty");
  const std::size_t d = x.front().size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != d) throw std::invalid_argument("LabelledSet: ragged x");
    if (z[i] != 0 && z[i] != 1) throw std::invalid_argument("LabelledSet: labels must be 0/1");
  }
}

}  // namespace ampc
