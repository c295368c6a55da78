// Copyright 2026 The Credible Authors
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

#ifndef CREDIBLE_CLI_H_
#define CREDIBLE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace credible {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFail = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace credible

#endif  // CREDIBLE_CLI_H_
