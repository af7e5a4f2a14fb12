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

#ifndef CHOQUET_SUBSET_H_
#define CHOQUET_SUBSET_H_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace choquet {

// Subsets of the ground set [n] = {1, ..., n} are bitmasks: element i is
// bit i - 1, so {1, 3} is 0b101.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxGroundSetSize = 20;

inline constexpr SubsetMask FullMask(int n) {
  return static_cast<SubsetMask>((std::uint64_t{1} << n) - 1);
}

inline constexpr std::size_t LatticeSize(int n) { return std::size_t{1} << n; }

inline constexpr bool Contains(SubsetMask set, int element) {
  return (set >> (element - 1)) & 1u;
}

inline constexpr bool IsSubset(SubsetMask sub, SubsetMask super) {
  return (sub & ~super) == 0;
}

inline constexpr int Cardinality(SubsetMask set) { return std::popcount(set); }

// Builds a mask from 1-based element labels. Throws std::invalid_argument on
// labels outside [1, kMaxGroundSetSize].
SubsetMask MaskOf(std::span<const int> elements);
SubsetMask MaskOf(std::initializer_list<int> elements);

// Ascending 1-based element labels of `set`.
std::vector<int> Elements(SubsetMask set);

// Comma-joined ascending labels: "" for the empty set, "1,3" for {1, 3}.
std::string SubsetKey(SubsetMask set);

// Inverse of SubsetKey. Accepts labels in any order and surrounding
// whitespace; rejects duplicates, labels outside [1, n] and empty tokens.
// Throws std::invalid_argument.
SubsetMask ParseSubsetKey(std::string_view key, int n);

}  // namespace choquet

#endif  // CHOQUET_SUBSET_H_
