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

#ifndef APK_TOOLS_CLI_H_
#define APK_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace apk::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // runtime error or failed --check
inline constexpr int kExitUsage = 2;

// Entry point of the `apk` tool. `args` excludes the program name.
// Subcommands: baseline, scenarios, simulate, enumerate, hist, evaluate.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace apk::tools

#endif  // APK_TOOLS_CLI_H_
