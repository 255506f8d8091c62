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

#ifndef FOLIMITS_CODES_H_
#define FOLIMITS_CODES_H_

#include <span>
#include <string>
#include <vector>

namespace folimits {

// Canonical string codes. All of them are self-delimiting bracket words:
//
//   tree      "(" branch* ")"          branches sorted
//   branch    child tree (d = 2)  |  "[" tree^{d-1} "]"   children sorted
//   bundle    ""         (d = 2)  |  "{" tree^{d-2} "}"   trees sorted
//   unicycle  "<" (tree bundle)^L ">"  least dihedral image
//   fragment  unicycle codes sorted and joined by '+', or "empty"
//
// For d = 2 a tree code is the classic AHU encoding, e.g. "(()())".
std::string TreeCode(std::vector<std::string> branch_codes);
std::string BranchCode(int d, std::vector<std::string> child_codes);
std::string BundleCode(int d, std::vector<std::string> tree_codes);
std::string UnicycleCode(std::span<const std::string> necklace_tokens);
std::string FragmentCode(std::vector<std::string> component_codes);

inline constexpr char kEmptyFragmentCode[] = "empty";

// Splits a unicycle code back into its alternating tree/bundle tokens.
// Throws DomainError on malformed input.
std::vector<std::string> SplitUnicycleCode(int d, const std::string& code);

}  // namespace folimits

#endif  // FOLIMITS_CODES_H_
