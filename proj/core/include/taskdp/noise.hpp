// Copyright 2026 The taskdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TASKDP_NOISE_HPP_
#define TASKDP_NOISE_HPP_

#include <cstdint>

namespace taskdp {

// Domain tags for deriving independent substreams from one master seed.
// Every randomized release keys its stream by (seed, domain, a, b), e.g.
// (seed, kGradientNoise, task, step), so results do not depend on the
// order in which tasks are processed.
enum class StreamDomain : std::uint64_t {
  kSspMatrixNoise = 1,
  kSspVectorNoise = 2,
  kGradientNoise = 3,
  kSampling = 4,
  kCountNoise = 5,
  kModelInit = 6,
  kSynthesis = 7,
  kSplit = 8,
  kPreprocess = 9,
  kFuzz = 10,
};

// Counter-based pseudo-random stream (SplitMix64 core) with a hand-rolled
// Box-Muller normal sampler. The sampler is pinned here instead of using
// <random> distributions so that identical seeds give identical draws
// across platforms and standard library versions.
class NoiseStream {
 public:
  explicit NoiseStream(std::uint64_t seed, StreamDomain domain = StreamDomain::kFuzz,
                       std::uint64_t a = 0, std::uint64_t b = 0);

  std::uint64_t next_u64();

  // Uniform on [0, 1).
  double uniform();

  // Unbiased uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Standard normal draw.
  double normal();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace taskdp

#endif  // TASKDP_NOISE_HPP_
