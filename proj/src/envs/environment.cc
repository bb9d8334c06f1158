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

#include "ampc/envs/environment.h"

#include <algorithm>

namespace ampc {

Action Environment::ClampAction(Action a) const {
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    const double limit = ActionLimit(i);
    a[i] = std::clamp(a[i], -limit, limit);
  }
  return a;
}

}  // namespace ampc
