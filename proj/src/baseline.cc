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

#include "apk/baseline.h"

#include <algorithm>
#include <string>

#include "apk/errors.h"
#include "apk/exact_oracle.h"
#include "apk/harmonic.h"

namespace apk {
namespace {

void check_wor_args(std::size_t total, std::size_t relevant, std::size_t k) {
  if (total == 0) throw PreconditionError("WOR requires N >= 1");
  if (relevant > total) throw PreconditionError("WOR requires m <= N");
  if (k == 0 || k > total) {
    throw PreconditionError("WOR requires 1 <= k <= N (k=" +
                            std::to_string(k) + ", N=" +
                            std::to_string(total) + ")");
  }
}

void check_wr_args(double p, std::size_t k) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("WR requires 0 <= p <= 1");
  }
  if (k == 0) throw PreconditionError("cutoff k must be at least 1");
}

}  // namespace

double wor_expectation(std::size_t total, std::size_t relevant,
                       std::size_t k) {
  check_wor_args(total, relevant, k);
  if (relevant == 0) return 0.0;
  if (relevant == total) return 1.0;
  const double n = static_cast<double>(total);
  const double m = static_cast<double>(relevant);
  const double kk = static_cast<double>(k);
  const double h = harmonic_numbers(k).h1;
  const double norm = static_cast<double>(std::min(relevant, k));
  return m / (n * norm) * ((m - 1) / (n - 1) * kk + (n - m) / (n - 1) * h);
}

WorCoefficients wor_coefficients(std::size_t total, std::size_t relevant,
                                 std::size_t k) {
  check_wor_args(total, relevant, k);
  if (total < 4) {
    throw PreconditionError(
        "WOR variance coefficients need N >= 4; use exact enumeration");
  }
  if (relevant == 0) {
    throw PreconditionError("WOR variance coefficients need m >= 1");
  }
  const double n = static_cast<double>(total);
  const double m = static_cast<double>(relevant);
  // Successive conditional inclusion ratios (m-j)/(N-j).
  const double r0 = m / n;
  const double r1 = (m - 1) / (n - 1);
  const double r2 = (m - 2) / (n - 2);
  const double r3 = (m - 3) / (n - 3);

  WorCoefficients c;
  c.a = 1 - r0 - r1 * (3 - 2 * r2 - r0 * (2 - r1));
  c.b = r1 * (3 * (1 - r2) - 2 * r0 * (1 - r1));
  c.c = r1 * (r2 - r0 * r1);
  c.d = r1 * (2 - 5 * r2 + 3 * r2 * r3) - r0 * (1 - r1) * (1 - r1);
  c.e = r1 * (3 * r2 * (1 - r3) - r0 * (1 - r1));
  c.f = r1 * (r2 * (1 - r3) - r0 * (1 - r1));
  c.g = r1 * (r2 * r3 - r0 * r1);
  c.normalizer = static_cast<double>(std::min(relevant, k));
  return c;
}

double wor_variance(std::size_t total, std::size_t relevant, std::size_t k) {
  check_wor_args(total, relevant, k);
  if (relevant == 0 || relevant == total) return 0.0;
  if (total < 4) {
    return exact_wor(total, relevant, k, NormalizationMode::kByMinMK).variance;
  }
  const WorCoefficients c = wor_coefficients(total, relevant, k);
  const auto [h1, h2] = harmonic_numbers(k);
  const double kk = static_cast<double>(k);
  const double r0 = static_cast<double>(relevant) / static_cast<double>(total);
  const double bracket = kk * (c.c + 2 * (c.e - c.f) + (kk - 1) * c.g) +
                         h1 * (c.b - 2 * (c.e - kk * c.f)) + h1 * h1 * c.d +
                         h2 * (c.a - c.d);
  return r0 * bracket / (c.normalizer * c.normalizer);
}

double wr_expectation(double p, std::size_t k) {
  check_wr_args(p, k);
  const double h = harmonic_numbers(k).h1;
  return p * (p + (1 - p) * h / static_cast<double>(k));
}

double wr_variance(double p, std::size_t k) {
  check_wr_args(p, k);
  const auto [h1, h2] = harmonic_numbers(k);
  const double kk = static_cast<double>(k);
  const double q = 1 - p;
  return 5.0 / kk * p * p * p * q +
         p * q / (kk * kk) *
             (p * (1 - 2 * p) * (3 * h1 + h1 * h1) + q * (1 - 3 * p) * h2);
}

BaselineMoments baseline(const ModelSpec& model, std::size_t k) {
  validate(model);
  BaselineMoments out;
  if (const auto* wor = std::get_if<WorModel>(&model)) {
    out.mean = wor_expectation(wor->total, wor->relevant, k);
    out.variance = wor_variance(wor->total, wor->relevant, k);
  } else {
    const double p = std::get<WrModel>(model).p;
    out.mean = wr_expectation(p, k);
    out.variance = wr_variance(p, k);
  }
  out.variance = std::max(out.variance, 0.0);
  return out;
}

}  // namespace apk
