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

#ifndef AMPC_CORE_RNG_H_
#define AMPC_CORE_RNG_H_

#include <array>
#include <cstddef>
#include <cstdint>

namespace ampc {

// Splittable random stream. Two streams built from the same (seed, stream id)
// produce identical draw sequences; Split() derives an independent child
// stream without advancing the parent, so work items (iteration, episode,
// control step, rollout) can each own a reproducible stream.
//
// The generator is xoshiro256** seeded through SplitMix64. Normal and gamma
// variates are generated here rather than through <random> distributions so
// that draw sequences do not depend on the standard library implementation.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  RngStream Split(std::uint64_t id) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t NextU64();

  // Uniform on [0, 1).
  double Uniform();
  double Uniform(double lower, double upper);

  // Uniform integer on [0, n). n must be > 0.
  std::size_t Index(std::size_t n);

  // Standard normal (Marsaglia polar method, second variate cached).
  double Normal();
  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }

  // Gamma with shape alpha > 0 and rate beta > 0 (Marsaglia-Tsang).
  double Gamma(double shape, double rate);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint64_t, 4> state_{};
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

// Stable 64-bit hash of a string, used to derive stream ids from names.
std::uint64_t StreamId(const char* name);

}  // namespace ampc

#endif  // AMPC_CORE_RNG_H_
