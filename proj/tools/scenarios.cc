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

#include "scenarios.h"

#include <cmath>
#include <sstream>

#include "apk/baseline.h"
#include "apk/errors.h"

namespace apk::tools {

std::vector<ScenarioConfig> default_scenarios() {
  return {
      {"A1", 50, 25, 0.50, 5, ScenarioValues{0.36139, 0.36416, 0.05464, 0.05884}},
      {"A2", 50, 25, 0.50, 25, ScenarioValues{0.28387, 0.28816, 0.00735, 0.01234}},
      {"A3", 50, 25, 0.50, 40, ScenarioValues{0.43550, 0.27674, 0.00699, 0.00775}},
      {"B", 50, 10, 0.20, 20, ScenarioValues{0.13221, 0.06878, 0.00786, 0.00294}},
      {"C", 50, 2, 0.04, 20, ScenarioValues{0.07865, 0.00851, 0.01563, 0.00023}},
      {"D", 50, 35, 0.70, 20, ScenarioValues{0.52426, 0.52778, 0.01502, 0.02195}},
  };
}

std::vector<ScenarioConfig> parse_scenarios(std::istream& in,
                                            const std::string& source) {
  std::vector<ScenarioConfig> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok.front().starts_with('#')) continue;
    if (tok.size() != 5 && tok.size() != 9) {
      throw ParseError(source, line_no,
                       "expected `label N m p k` plus optionally 4 expected "
                       "values");
    }
    ScenarioConfig c;
    c.label = tok[0];
    try {
      std::size_t pos = 0;
      auto whole = [&](const std::string& s) {
        if (!s.empty() && s.front() == '-') throw std::invalid_argument(s);
        const auto v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
      };
      auto real = [&](const std::string& s) {
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
      };
      c.total = whole(tok[1]);
      c.relevant = whole(tok[2]);
      c.p = real(tok[3]);
      c.k = whole(tok[4]);
      if (tok.size() == 9) {
        ScenarioValues v;
        for (std::size_t i = 0; i < 4; ++i) v[i] = real(tok[5 + i]);
        c.expected = v;
      }
    } catch (const std::logic_error&) {
      throw ParseError(source, line_no, "malformed number");
    }
    const auto where = source + ":" + std::to_string(line_no) + ": ";
    if (c.total == 0 || c.relevant > c.total || c.k == 0 || c.k > c.total) {
      throw ValidationError(where + "need 1 <= k <= N and m <= N");
    }
    if (std::abs(c.p - static_cast<double>(c.relevant) /
                           static_cast<double>(c.total)) > 1e-9) {
      throw ValidationError(where + "p must equal m/N");
    }
    out.push_back(std::move(c));
  }
  return out;
}

ScenarioValues compute_scenario(const ScenarioConfig& c) {
  const auto wor = baseline(WorModel{c.total, c.relevant}, c.k);
  const auto wr = baseline(WrModel{c.p}, c.k);
  return {wor.mean, wr.mean, wor.variance, wr.variance};
}

}  // namespace apk::tools
