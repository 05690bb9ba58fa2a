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

#include "apk/model.h"

#include <cmath>
#include <sstream>

#include "apk/errors.h"

namespace apk {

ModelSpec make_wor(std::size_t total, std::size_t relevant) {
  ModelSpec model = WorModel{total, relevant};
  validate(model);
  return model;
}

ModelSpec make_wr(double p) {
  ModelSpec model = WrModel{p};
  validate(model);
  return model;
}

void validate(const ModelSpec& model) {
  if (const auto* wor = std::get_if<WorModel>(&model)) {
    if (wor->total == 0) throw PreconditionError("WOR requires N >= 1");
    if (wor->relevant > wor->total) {
      throw PreconditionError("WOR requires m <= N");
    }
    return;
  }
  const double p = std::get<WrModel>(model).p;
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("WR requires 0 <= p <= 1");
  }
}

std::string describe(const ModelSpec& model) {
  std::ostringstream os;
  if (const auto* wor = std::get_if<WorModel>(&model)) {
    os << "WOR(N=" << wor->total << ",m=" << wor->relevant << ")";
  } else {
    os.precision(17);
    os << "WR(p=" << std::get<WrModel>(model).p << ")";
  }
  return os.str();
}

NormalizationMode native_normalization(const ModelSpec& model) {
  return std::holds_alternative<WorModel>(model) ? NormalizationMode::kByMinMK
                                                 : NormalizationMode::kByK;
}

}  // namespace apk
