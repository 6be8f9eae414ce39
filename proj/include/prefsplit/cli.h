// Copyright 2026 The prefsplit Authors
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

// Command-line front end. Exposed as a function so tests can drive it
// in-process with string streams.

#ifndef PREFSPLIT_CLI_H_
#define PREFSPLIT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace prefsplit {

// Exit codes.
inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitBudget = 3;

// `args` excludes the program name. Input path "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace prefsplit

#endif  // PREFSPLIT_CLI_H_
