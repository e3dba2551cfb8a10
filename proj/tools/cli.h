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

#ifndef DMP_TOOLS_CLI_H_
#define DMP_TOOLS_CLI_H_

#include <ostream>

namespace dmp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. JSON results go to `out`, diagnostics to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace dmp::cli

#endif  // DMP_TOOLS_CLI_H_
