// Copyright 2026 The SQNN Authors. All Rights Reserved.
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

// The sqnn command line: generate, train, eval, benchmark and plot.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage or validation error.

#ifndef SQNN_CLI_COMMANDS_H_
#define SQNN_CLI_COMMANDS_H_

#include <iosfwd>

namespace sqnn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Parses argv and runs the selected verb. Normal output goes to out,
// diagnostics to err.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sqnn::cli

#endif  // SQNN_CLI_COMMANDS_H_
