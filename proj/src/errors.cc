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

#include "choquet/errors.h"

#include <sstream>

namespace choquet {

namespace {

std::string Num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string Braced(SubsetMask set) { return "{" + SubsetKey(set) + "}"; }

}  // namespace

NotAGame::NotAGame(double empty_value)
    : Error("not a game: value on the empty set is " + Num(empty_value) +
            ", expected 0"),
      empty_value_(empty_value) {}

NotMonotone::NotMonotone(SubsetMask smaller, SubsetMask larger,
                         double smaller_value, double larger_value)
    : Error("not monotone: v(" + Braced(smaller) + ") = " +
            Num(smaller_value) + " > v(" + Braced(larger) +
            ") = " + Num(larger_value)),
      smaller_(smaller),
      larger_(larger),
      smaller_value_(smaller_value),
      larger_value_(larger_value) {}

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : Error("dimension mismatch: expected " + std::to_string(expected) +
            ", got " + std::to_string(actual)) {}

GroundSetTooLarge::GroundSetTooLarge(int n, int limit)
    : Error("ground set too large: n = " + std::to_string(n) +
            " exceeds the limit " + std::to_string(limit)) {}

}  // namespace choquet
