// Copyright 2026 The twofactor Authors
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

#ifndef TWOFACTOR_TOOLS_CLI_H_
#define TWOFACTOR_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace twofactor {

// Exit codes shared by every subcommand.
inline constexpr int kExitTwoFactor = 0;  // also: success for verify/gen/mine
inline constexpr int kExitNoTwoFactor = 1;  // also: verification failed
inline constexpr int kExitUsage = 2;

// Entry point behind the `twofactor` binary. `args` excludes the program
// name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace twofactor

#endif  // TWOFACTOR_TOOLS_CLI_H_
