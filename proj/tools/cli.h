// Copyright 2026 The dmkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DMKP_TOOLS_CLI_H_
#define DMKP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace dmkp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs one dmkp command. `args` excludes the program name. Machine output
// goes to `out`, diagnostics to `err`.
int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace dmkp::cli

#endif  // DMKP_TOOLS_CLI_H_
