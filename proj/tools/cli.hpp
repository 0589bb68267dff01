// Copyright 2026 The orthostep Authors
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

#ifndef ORTHOSTEP_TOOLS_CLI_HPP_
#define ORTHOSTEP_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace orthostep::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  // A theorem violation or a builder/oracle disagreement.
  kViolation = 2,
};

inline constexpr long kScanCapN3 = 60;
inline constexpr long kScanCapN4 = 24;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthostep::cli

#endif  // ORTHOSTEP_TOOLS_CLI_HPP_
