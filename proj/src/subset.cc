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

#include "choquet/subset.h"

#include <charconv>
#include <stdexcept>

namespace choquet {

SubsetMask MaskOf(std::span<const int> elements) {
  SubsetMask mask = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSetSize) {
      throw std::invalid_argument("element label out of range: " +
                                  std::to_string(e));
    }
    mask |= SubsetMask{1} << (e - 1);
  }
  return mask;
}

SubsetMask MaskOf(std::initializer_list<int> elements) {
  return MaskOf(std::span<const int>(elements.begin(), elements.size()));
}

std::vector<int> Elements(SubsetMask set) {
  std::vector<int> out;
  out.reserve(Cardinality(set));
  for (int e = 1; set != 0; ++e, set >>= 1) {
    if (set & 1u) out.push_back(e);
  }
  return out;
}

std::string SubsetKey(SubsetMask set) {
  std::string key;
  for (int e : Elements(set)) {
    if (!key.empty()) key += ',';
    key += std::to_string(e);
  }
  return key;
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

SubsetMask ParseSubsetKey(std::string_view key, int n) {
  key = Trim(key);
  if (key.empty()) return 0;
  SubsetMask mask = 0;
  while (true) {
    std::size_t comma = key.find(',');
    std::string_view token = Trim(key.substr(0, comma));
    int label = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), label);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed subset key '" +
                                  std::string(key) + "'");
    }
    if (label < 1 || label > n) {
      throw std::invalid_argument("element " + std::to_string(label) +
                                  " outside [1, " + std::to_string(n) + "]");
    }
    SubsetMask bit = SubsetMask{1} << (label - 1);
    if (mask & bit) {
      throw std::invalid_argument("duplicate element " +
                                  std::to_string(label));
    }
    mask |= bit;
    if (comma == std::string_view::npos) break;
    key.remove_prefix(comma + 1);
  }
  return mask;
}

}  // namespace choquet
