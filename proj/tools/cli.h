// Copyright 2026 The folimits Authors
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


#ifndef FOLIMITS_TOOLS_CLI_H_
#define FOLIMITS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace folimits::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Parses `args` (without the program name), runs the subcommand and writes
// the document to `out` (or --out). Diagnostics go to `err`. Returns 0, 1
// or 2.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace folimits::cli

#endif  // FOLIMITS_TOOLS_CLI_H_
