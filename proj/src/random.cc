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

#include "choquet/random.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace choquet {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(SplitMix64(SplitMix64(seed) ^ SplitMix64(~stream))) {}

double Rng::Uniform(double lo, double hi) {
  const double unit = static_cast<double>(Next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

double Rng::LogUniform(double lo, double hi) {
  return std::exp(Uniform(std::log(lo), std::log(hi)));
}

int Rng::UniformInt(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(Next() % span);
}

CapacityKind ParseCapacityKind(std::string_view name) {
  if (name == "signed") return CapacityKind::kSigned;
  if (name == "monotone") return CapacityKind::kMonotone;
  if (name == "normalized-monotone") return CapacityKind::kNormalizedMonotone;
  throw std::invalid_argument("unknown capacity kind '" + std::string(name) +
                              "' (expected signed, monotone or "
                              "normalized-monotone)");
}

SetFunction RandomSetFunction(int n, Rng& rng, double lo, double hi) {
  std::vector<double> values(LatticeSize(n));
  for (double& v : values) v = rng.Uniform(lo, hi);
  return SetFunction(n, std::move(values));
}

SignedCapacity RandomSignedCapacity(int n, Rng& rng) {
  std::vector<double> values(LatticeSize(n));
  for (std::size_t s = 1; s < values.size(); ++s) {
    values[s] = rng.Uniform(-1.0, 1.0);
  }
  return ValidateSignedCapacity(SetFunction(n, std::move(values)));
}

Capacity RandomMonotoneCapacity(int n, Rng& rng, bool normalized) {
  const std::size_t size = LatticeSize(n);
  while (true) {
    std::vector<double> values(size, 0.0);
    // Every S \ {i} precedes S in mask order.
    for (std::size_t s = 1; s < size; ++s) {
      double covered = 0.0;
      for (int bit = 0; bit < n; ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        if (s & b) covered = std::max(covered, values[s ^ b]);
      }
      values[s] = covered + rng.Uniform(0.0, 1.0);
    }
    if (normalized) {
      const double top = values[size - 1];
      if (!(top > 0.0)) continue;
      for (double& v : values) v /= top;
    }
    return ValidateCapacity(
        ValidateSignedCapacity(SetFunction(n, std::move(values))));
  }
}

SignedCapacity RandomCapacity(int n, CapacityKind kind, std::uint64_t seed) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw std::invalid_argument("n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxGroundSetSize) + "]");
  }
  Rng rng(seed);
  switch (kind) {
    case CapacityKind::kSigned:
      return RandomSignedCapacity(n, rng);
    case CapacityKind::kMonotone:
      return RandomMonotoneCapacity(n, rng, false).game();
    case CapacityKind::kNormalizedMonotone:
      return RandomMonotoneCapacity(n, rng, true).game();
  }
  throw std::invalid_argument("unknown capacity kind");
}

Point RandomPoint(int n, Rng& rng, double lo, double hi) {
  std::vector<double> x(n);
  for (double& c : x) c = rng.Uniform(lo, hi);
  return Point(std::move(x));
}

}  // namespace choquet
