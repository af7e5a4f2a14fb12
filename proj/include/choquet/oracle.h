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

#ifndef CHOQUET_ORACLE_H_
#define CHOQUET_ORACLE_H_

// Brute-force reference implementations. Nothing here calls into the
// transform or integral code paths except LovaszAffineCheck, whose subject
// is LovaszExtension itself.

#include <cstdint>
#include <vector>

#include "choquet/integral.h"
#include "choquet/set_function.h"
#include "choquet/tolerance.h"

namespace choquet::oracle {

inline constexpr int kMobiusNaiveMaxN = 12;
inline constexpr int kAllPermutationsMaxN = 6;
inline constexpr int kAffineCheckMaxN = 8;

// Literal O(3^n) double loop over S and T subset S. Throws GroundSetTooLarge
// for n > 12.
MobiusRepresentation MobiusNaive(const SetFunction& f);

// Evaluates sum_i (v_i - v_{i+1}) x_{pi(i)} for every permutation pi that
// sorts x and returns the distinct values, ascending. Values within
// `tolerance` of an earlier one count as the same value, since reordering
// tied terms regroups the floating-point sum. A single element certifies
// tie independence. Throws GroundSetTooLarge for n > 6 and DimensionMismatch.
std::vector<double> ChoquetAllPermutations(
    const SignedCapacity& v, const Point& x,
    const Tolerance& tolerance = kDefaultTolerance);

// Samples segments [x, x'] inside the cone {x : x_{pi(1)} <= ... <= x_{pi(n)}}
// and checks that LovaszExtension is affine along them. Trial 0 is the
// degenerate segment x = x'. Throws GroundSetTooLarge for n > 8,
// DimensionMismatch when `order` has the wrong length.
bool LovaszAffineCheck(const SetFunction& f, const SortPermutation& order,
                       int trials, std::uint64_t seed,
                       const Tolerance& tolerance = kDefaultTolerance);

}  // namespace choquet::oracle

#endif  // CHOQUET_ORACLE_H_
