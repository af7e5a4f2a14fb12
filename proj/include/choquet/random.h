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

#ifndef CHOQUET_RANDOM_H_
#define CHOQUET_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

#include "choquet/integral.h"
#include "choquet/set_function.h"

namespace choquet {

// Random source keyed by (seed, stream). Each stream is an independent
// mt19937_64 whose state is derived from the pair with splitmix64, so a
// trial's draws depend only on its own index. Doubles are built from the top
// 53 bits directly, keeping sequences identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t Next() { return engine_(); }
  // Uniform on [lo, hi).
  double Uniform(double lo, double hi);
  // exp of a uniform draw on [log lo, log hi).
  double LogUniform(double lo, double hi);
  // Uniform on {lo, ..., hi}.
  int UniformInt(int lo, int hi);
  bool Bernoulli(double p) { return Uniform(0.0, 1.0) < p; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

enum class CapacityKind { kSigned, kMonotone, kNormalizedMonotone };

// "signed", "monotone", "normalized-monotone". Throws std::invalid_argument.
CapacityKind ParseCapacityKind(std::string_view name);

// Arbitrary set function with entries uniform on [lo, hi), f(empty) included.
SetFunction RandomSetFunction(int n, Rng& rng, double lo = -1.0,
                              double hi = 1.0);

// Entries uniform on [-1, 1) with v(empty) = 0.
SignedCapacity RandomSignedCapacity(int n, Rng& rng);

// v(S) = max over i in S of v(S \ {i}) plus a uniform increment on [0, 1),
// which makes every covering pair monotone. With `normalized`, all values
// are divided by v([n]), drawing again in the (measure-zero) case v([n]) = 0.
Capacity RandomMonotoneCapacity(int n, Rng& rng, bool normalized);

// Generator behind the random-capacity command; deterministic in
// (n, kind, seed). Throws std::invalid_argument when n is outside [1, 20].
SignedCapacity RandomCapacity(int n, CapacityKind kind, std::uint64_t seed);

Point RandomPoint(int n, Rng& rng, double lo, double hi);

}  // namespace choquet

#endif  // CHOQUET_RANDOM_H_
