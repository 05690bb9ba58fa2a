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

#include "apk/harmonic.h"

#include <cmath>
#include <numbers>

#include "apk/errors.h"

namespace apk {
namespace {

void require_positive(std::size_t k) {
  if (k == 0) throw PreconditionError("harmonic index k must be at least 1");
}

}  // namespace

HarmonicPair harmonic_numbers(std::size_t k) {
  require_positive(k);
  HarmonicPair out;
  for (std::size_t i = k; i >= 1; --i) {
    const double x = static_cast<double>(i);
    out.h1 += 1.0 / x;
    out.h2 += 1.0 / (x * x);
  }
  return out;
}

HarmonicApprox harmonic_approx(std::size_t k) {
  require_positive(k);
  const double x = static_cast<double>(k);
  return {std::log(x) + std::numbers::egamma + 0.5 / x, 1.0 / (8.0 * x * x)};
}

PairSums pair_sums(std::size_t k) {
  const HarmonicPair h = harmonic_numbers(k);
  const double x = static_cast<double>(k);
  return {x * (h.h1 - 1.0), x - h.h1, 0.5 * (h.h1 * h.h1 - h.h2)};
}

}  // namespace apk
