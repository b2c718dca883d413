// Copyright 2026 The Authors.
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

// Command-line front end: `kl`, `tables` and `verify` subcommands.
//
// Exit codes: 0 success, 1 a verification or engine mismatch, 2 a usage or
// limit error. Results go to `out`; diagnostics and progress go to `err`.

#ifndef BRAIDKL_TOOLS_CLI_HPP_
#define BRAIDKL_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace braidkl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Name of the environment variable giving the default --jobs value.
inline constexpr const char* kJobsEnv = "BRAIDKL_JOBS";

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidkl::cli

#endif  // BRAIDKL_TOOLS_CLI_HPP_
