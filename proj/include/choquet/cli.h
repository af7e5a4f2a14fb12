// Copyright 2026 The Choquet Authors.
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

#ifndef CHOQUET_CLI_H_
#define CHOQUET_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace choquet::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;  // also: independence-suite deviation
inline constexpr int kExitUsage = 2;      // bad flags, parse errors
inline constexpr int kExitDimension = 3;
inline constexpr int kExitNotAGame = 4;

inline constexpr int kDefaultTrials = 1000;
inline constexpr unsigned long long kDefaultSeed = 0;

// Runs one command line (args[0] is the program name). Values go to `out`,
// diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace choquet::cli

#endif  // CHOQUET_CLI_H_
