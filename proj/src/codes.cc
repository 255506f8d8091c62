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

#include "folimits/codes.h"

#include <algorithm>
#include <string>
#include <vector>

#include "folimits/errors.h"

namespace folimits {
namespace {

std::string Wrap(char open, std::vector<std::string> parts, char close) {
  std::sort(parts.begin(), parts.end());
  std::string out(1, open);
  for (const auto& p : parts) out += p;
  out += close;
  return out;
}

// Length of the balanced token starting at `pos`.
std::size_t TokenLength(const std::string& code, std::size_t pos) {
  int depth = 0;
  for (std::size_t i = pos; i < code.size(); ++i) {
    const char ch = code[i];
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    else if (ch == ')' || ch == ']' || ch == '}') --depth;
    else throw DomainError("unexpected character in shape code: " + code);
    if (depth < 0) break;
    if (depth == 0) return i - pos + 1;
  }
  throw DomainError("unbalanced shape code: " + code);
}

}  // namespace

std::string TreeCode(std::vector<std::string> branch_codes) {
  return Wrap('(', std::move(branch_codes), ')');
}

std::string BranchCode(int d, std::vector<std::string> child_codes) {
  if (d == 2) return child_codes.at(0);
  return Wrap('[', std::move(child_codes), ']');
}

std::string BundleCode(int d, std::vector<std::string> tree_codes) {
  if (d == 2) return "";
  return Wrap('{', std::move(tree_codes), '}');
}

std::string UnicycleCode(std::span<const std::string> necklace_tokens) {
  std::string out = "<";
  for (const auto& t : necklace_tokens) out += t;
  out += '>';
  return out;
}

std::string FragmentCode(std::vector<std::string> component_codes) {
  if (component_codes.empty()) return kEmptyFragmentCode;
  std::sort(component_codes.begin(), component_codes.end());
  std::string out;
  for (std::size_t i = 0; i < component_codes.size(); ++i) {
    if (i > 0) out += '+';
    out += component_codes[i];
  }
  return out;
}

std::vector<std::string> SplitUnicycleCode(int d, const std::string& code) {
  if (code.size() < 2 || code.front() != '<' || code.back() != '>') {
    throw DomainError("unicycle code must be wrapped in <>: " + code);
  }
  const std::string body = code.substr(1, code.size() - 2);
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '(') throw DomainError("expected a tree token: " + code);
    const std::size_t len = TokenLength(body, pos);
    tokens.push_back(body.substr(pos, len));
    pos += len;
    if (d == 2) {
      tokens.emplace_back();
      continue;
    }
    if (pos >= body.size() || body[pos] != '{') {
      throw DomainError("expected a bundle token: " + code);
    }
    const std::size_t blen = TokenLength(body, pos);
    tokens.push_back(body.substr(pos, blen));
    pos += blen;
  }
  return tokens;
}

}  // namespace folimits
