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

#ifndef APK_STOCHASTIC_H_
#define APK_STOCHASTIC_H_

// Random rankings under both models and Monte Carlo estimates of the AP@k
// distribution.
//
// Sampling is split into fixed-size chunks; chunk c draws from
// StreamRng(seed, c) and chunk statistics are merged in chunk order. Results
// are therefore bit-identical for any worker count.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apk/metric.h"
#include "apk/model.h"
#include "apk/random.h"

namespace apk {

inline constexpr std::size_t kSamplesPerChunk = 4096;

struct SampleMoments {
  double mean = 0.0;
  double variance = 0.0;   // unbiased
  double std_error = 0.0;  // sqrt(variance / n)
  std::size_t n = 0;
};

struct HistogramData {
  std::vector<double> bin_edges;  // n_bins + 1 ascending edges over [0, 1]
  std::vector<std::uint64_t> counts;
  std::string model_label;
  std::size_t n = 0;
};

struct SimulationOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

// Full ranking of N items with exactly m relevant, uniform over the C(N, m)
// placements (partial Fisher-Yates over positions).
RelevanceVector sample_wor(std::size_t total, std::size_t relevant,
                           StreamRng& rng);

// Top-k prefix of a WOR{N, m} ranking, drawn position by position from the
// hypergeometric conditionals. Same law as the first k entries of
// sample_wor.
RelevanceVector sample_wor_prefix(std::size_t total, std::size_t relevant,
                                  std::size_t k, StreamRng& rng);

// k independent Bernoulli(p) indicators.
RelevanceVector sample_wr(std::size_t k, double p, StreamRng& rng);

SampleMoments monte_carlo(const ModelSpec& model, std::size_t k,
                          NormalizationMode norm, std::size_t n_samples,
                          std::uint64_t seed, SimulationOptions options = {});

// Equal-width bins over [0, 1]; AP@k = 1 lands in the last bin.
HistogramData histogram(const ModelSpec& model, std::size_t k,
                        NormalizationMode norm, std::size_t n_samples,
                        std::uint64_t seed, std::size_t n_bins = 40,
                        SimulationOptions options = {});

// Pairwise combination of two (count, mean, M2) summaries.
struct RunningMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;  // sum of squared deviations

  void add(double x);
  void merge(const RunningMoments& other);
  SampleMoments finish() const;
};

}  // namespace apk

#endif  // APK_STOCHASTIC_H_
