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

#ifndef CHOQUET_TOLERANCE_H_
#define CHOQUET_TOLERANCE_H_

#include <algorithm>
#include <cmath>

namespace choquet {

// Derived equalities (as opposed to exact structural constraints such as
// v(empty) = 0) are compared with a relative tolerance and an absolute floor.
struct Tolerance {
  double relative = 1e-9;
  double absolute = 1e-12;

  double Band(double a, double b) const {
    return std::max(absolute, relative * std::max(std::abs(a), std::abs(b)));
  }
  bool Equal(double a, double b) const { return std::abs(a - b) <= Band(a, b); }
};

inline constexpr Tolerance kDefaultTolerance{};

}  // namespace choquet

#endif  // CHOQUET_TOLERANCE_H_
