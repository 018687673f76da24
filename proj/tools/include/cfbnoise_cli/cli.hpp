// Copyright 2026 The cfbnoise Authors.
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

#ifndef CFBNOISE_CLI_CLI_HPP_
#define CFBNOISE_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cfbnoise::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  ///< validate: some check failed
inline constexpr int kExitUsage = 2;        ///< bad flags, config or I/O

/// Runs the command line `args` (args[0] is the program name). Reports and
/// CSV go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfbnoise::cli

#endif  // CFBNOISE_CLI_CLI_HPP_
