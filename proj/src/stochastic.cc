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

#include "apk/stochastic.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>
#include <variant>

#include "apk/errors.h"

namespace apk {
namespace {

void fill_wor(std::size_t total, std::size_t relevant, StreamRng& rng,
              std::vector<std::size_t>& positions,
              std::vector<std::uint8_t>& out) {
  positions.resize(total);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  out.assign(total, 0);
  for (std::size_t i = 0; i < relevant; ++i) {
    const std::size_t j = i + rng.below(total - i);
    std::swap(positions[i], positions[j]);
    out[positions[i]] = 1;
  }
}

void fill_wor_prefix(std::size_t total, std::size_t relevant, std::size_t k,
                     StreamRng& rng, std::vector<std::uint8_t>& out) {
  out.resize(k);
  std::size_t slots = total;
  std::size_t left = relevant;
  for (std::size_t i = 0; i < k; ++i, --slots) {
    const bool hit = left > 0 && rng.below(slots) < left;
    out[i] = hit ? 1 : 0;
    left -= hit ? 1 : 0;
  }
}

void fill_wr(std::size_t k, double p, StreamRng& rng,
             std::vector<std::uint8_t>& out) {
  out.resize(k);
  for (auto& v : out) v = rng.bernoulli(p) ? 1 : 0;
}

void check_sampling_args(const ModelSpec& model, std::size_t k,
                         std::size_t n_samples) {
  validate(model);
  if (k == 0) throw PreconditionError("cutoff k must be at least 1");
  if (const auto* wor = std::get_if<WorModel>(&model); wor && k > wor->total) {
    throw PreconditionError("WOR sampling requires k <= N");
  }
  if (n_samples < 2) throw PreconditionError("need at least 2 samples");
}

// Runs `visit(chunk_state, ap_value)` for every sample, chunk by chunk, and
// returns the per-chunk states in chunk order.
template <typename State, typename Visit>
std::vector<State> sample_chunks(const ModelSpec& model, std::size_t k,
                                 NormalizationMode norm, std::size_t n_samples,
                                 std::uint64_t seed, SimulationOptions options,
                                 const State& init, Visit visit) {
  const std::size_t chunks =
      (n_samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  std::vector<State> states(chunks, init);

  auto run_chunk = [&](std::size_t c) {
    StreamRng rng(seed, c);
    std::vector<std::uint8_t> top;
    const std::size_t begin = c * kSamplesPerChunk;
    const std::size_t end = std::min(n_samples, begin + kSamplesPerChunk);
    for (std::size_t s = begin; s < end; ++s) {
      double ap;
      if (const auto* wor = std::get_if<WorModel>(&model)) {
        fill_wor_prefix(wor->total, wor->relevant, k, rng, top);
        ap = ap_at_k(top, k, norm, wor->relevant);
      } else {
        fill_wr(k, std::get<WrModel>(model).p, rng, top);
        const auto hits = static_cast<std::size_t>(
            std::count(top.begin(), top.end(), std::uint8_t{1}));
        ap = ap_at_k(top, k, norm, hits);
      }
      visit(states[c], ap);
    }
  };

  unsigned workers = options.workers != 0
                         ? options.workers
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    return states;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) run_chunk(c);
    });
  }
  pool.clear();  // joins
  return states;
}

}  // namespace

void RunningMoments::add(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

void RunningMoments::merge(const RunningMoments& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count);
  const double nb = static_cast<double>(other.count);
  const double total = na + nb;
  const double delta = other.mean - mean;
  mean += delta * nb / total;
  m2 += other.m2 + delta * delta * na * nb / total;
  count += other.count;
}

SampleMoments RunningMoments::finish() const {
  SampleMoments out;
  out.n = count;
  out.mean = mean;
  out.variance = count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  out.std_error =
      count > 0 ? std::sqrt(out.variance / static_cast<double>(count)) : 0.0;
  return out;
}

RelevanceVector sample_wor(std::size_t total, std::size_t relevant,
                           StreamRng& rng) {
  validate(WorModel{total, relevant});
  std::vector<std::size_t> positions;
  std::vector<std::uint8_t> out;
  fill_wor(total, relevant, rng, positions, out);
  return RelevanceVector(std::move(out));
}

RelevanceVector sample_wor_prefix(std::size_t total, std::size_t relevant,
                                  std::size_t k, StreamRng& rng) {
  validate(WorModel{total, relevant});
  if (k == 0 || k > total) {
    throw PreconditionError("WOR prefix requires 1 <= k <= N");
  }
  std::vector<std::uint8_t> out;
  fill_wor_prefix(total, relevant, k, rng, out);
  return RelevanceVector(std::move(out));
}

RelevanceVector sample_wr(std::size_t k, double p, StreamRng& rng) {
  validate(WrModel{p});
  if (k == 0) throw PreconditionError("cutoff k must be at least 1");
  std::vector<std::uint8_t> out;
  fill_wr(k, p, rng, out);
  return RelevanceVector(std::move(out));
}

SampleMoments monte_carlo(const ModelSpec& model, std::size_t k,
                          NormalizationMode norm, std::size_t n_samples,
                          std::uint64_t seed, SimulationOptions options) {
  check_sampling_args(model, k, n_samples);
  const auto states = sample_chunks(
      model, k, norm, n_samples, seed, options, RunningMoments{},
      [](RunningMoments& acc, double ap) { acc.add(ap); });
  RunningMoments total;
  for (const auto& s : states) total.merge(s);
  return total.finish();
}

HistogramData histogram(const ModelSpec& model, std::size_t k,
                        NormalizationMode norm, std::size_t n_samples,
                        std::uint64_t seed, std::size_t n_bins,
                        SimulationOptions options) {
  check_sampling_args(model, k, n_samples);
  if (n_bins < 2) throw PreconditionError("histogram needs at least 2 bins");

  const auto states = sample_chunks(
      model, k, norm, n_samples, seed, options,
      std::vector<std::uint64_t>(n_bins, 0),
      [n_bins](std::vector<std::uint64_t>& counts, double ap) {
        const auto bin = static_cast<std::size_t>(
            std::floor(ap * static_cast<double>(n_bins)));
        ++counts[std::min(bin, n_bins - 1)];
      });

  HistogramData out;
  out.n = n_samples;
  out.model_label = describe(model) + " k=" + std::to_string(k) +
                    " norm=" + std::string(to_string(norm));
  out.bin_edges.resize(n_bins + 1);
  for (std::size_t i = 0; i <= n_bins; ++i) {
    out.bin_edges[i] = static_cast<double>(i) / static_cast<double>(n_bins);
  }
  out.counts.assign(n_bins, 0);
  for (const auto& chunk : states) {
    for (std::size_t b = 0; b < n_bins; ++b) out.counts[b] += chunk[b];
  }
  return out;
}

}  // namespace apk
