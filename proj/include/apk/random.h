// Copyright 2026 The apk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APK_RANDOM_H_
#define APK_RANDOM_H_

#include <cstdint>
#include <limits>

namespace apk {

// xoshiro256** keyed by (seed, stream). The 256-bit state is filled from a
// SplitMix64 sequence started at a mix of both keys, so distinct streams of
// one seed are independent and reproducible. Satisfies
// UniformRandomBitGenerator.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  StreamRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // True with probability p; p = 0 never, p = 1 always.
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t s_[4];
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace apk

#endif  // APK_RANDOM_H_
