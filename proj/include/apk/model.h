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

#ifndef APK_MODEL_H_
#define APK_MODEL_H_

#include <cstddef>
#include <string>
#include <variant>

#include "apk/metric.h"

namespace apk {

// Offline randomization: exactly `relevant` of `total` ranked items are
// relevant, at a uniformly random subset of positions.
struct WorModel {
  std::size_t total = 0;
  std::size_t relevant = 0;
};

// Online randomization: each ranked item is relevant independently with
// probability `p`.
struct WrModel {
  double p = 0.0;
};

using ModelSpec = std::variant<WorModel, WrModel>;

// Validating constructors. Throw PreconditionError.
ModelSpec make_wor(std::size_t total, std::size_t relevant);
ModelSpec make_wr(double p);

void validate(const ModelSpec& model);

// "WOR(N=50,m=25)" / "WR(p=0.5)".
std::string describe(const ModelSpec& model);

// Normalization the closed forms for this model assume: kByMinMK for WOR,
// kByK for WR.
NormalizationMode native_normalization(const ModelSpec& model);

}  // namespace apk

#endif  // APK_MODEL_H_
