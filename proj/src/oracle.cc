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

#include "choquet/oracle.h"

#include <algorithm>
#include <numeric>

#include "choquet/errors.h"
#include "choquet/random.h"

namespace choquet::oracle {

namespace {

void RequireAtMost(int n, int limit) {
  if (n > limit) throw GroundSetTooLarge(n, limit);
}

}  // namespace

MobiusRepresentation MobiusNaive(const SetFunction& f) {
  RequireAtMost(f.n(), kMobiusNaiveMaxN);
  const std::size_t size = std::size_t{1} << f.n();
  std::vector<double> m(size, 0.0);
  for (std::size_t s = 0; s < size; ++s) {
    double sum = 0.0;
    for (std::size_t t = 0; t < size; ++t) {
      if ((t & s) != t) continue;
      int gap = 0;
      for (std::size_t d = s & ~t; d != 0; d >>= 1) gap += static_cast<int>(d & 1);
      sum += (gap % 2 == 0 ? 1.0 : -1.0) * f.values()[t];
    }
    m[s] = sum;
  }
  return MobiusRepresentation(f.n(), std::move(m));
}

std::vector<double> ChoquetAllPermutations(const SignedCapacity& v,
                                           const Point& x,
                                           const Tolerance& tolerance) {
  const int n = v.n();
  RequireAtMost(n, kAllPermutationsMaxN);
  if (x.size() != n) throw DimensionMismatch(n, x.size());
  const auto coords = x.coordinates();

  std::vector<int> perm(n);  // 0-based element indices
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> distinct;
  do {
    bool sorts = true;
    for (int i = 1; i < n && sorts; ++i) {
      sorts = coords[perm[i - 1]] <= coords[perm[i]];
    }
    if (!sorts) continue;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      std::size_t upper = 0;
      for (int j = i; j < n; ++j) upper |= std::size_t{1} << perm[j];
      const std::size_t next = upper & ~(std::size_t{1} << perm[i]);
      total += (v.values()[upper] - v.values()[next]) * coords[perm[i]];
    }
    const bool seen =
        std::any_of(distinct.begin(), distinct.end(),
                    [&](double d) { return tolerance.Equal(d, total); });
    if (!seen) distinct.push_back(total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(distinct.begin(), distinct.end());
  return distinct;
}

bool LovaszAffineCheck(const SetFunction& f, const SortPermutation& order,
                       int trials, std::uint64_t seed,
                       const Tolerance& tolerance) {
  const int n = f.n();
  RequireAtMost(n, kAffineCheckMaxN);
  if (static_cast<int>(order.order.size()) != n) {
    throw DimensionMismatch(n, order.order.size());
  }
  // Sorted draws placed along the permutation land in its cone.
  auto cone_point = [&](Rng& rng) {
    std::vector<double> sorted(n);
    for (double& c : sorted) c = rng.Uniform(-5.0, 5.0);
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[order.order[i] - 1] = sorted[i];
    return Point(std::move(x));
  };
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed, static_cast<std::uint64_t>(t));
    const Point x = cone_point(rng);
    const Point y = t == 0 ? x : cone_point(rng);
    const double lambda = rng.Uniform(0.0, 1.0);
    std::vector<double> mix(n);
    for (int i = 0; i < n; ++i) {
      mix[i] = lambda * x.coordinates()[i] + (1.0 - lambda) * y.coordinates()[i];
    }
    const double lhs = LovaszExtension(f, Point(std::move(mix))).value;
    const double rhs = lambda * LovaszExtension(f, x).value +
                       (1.0 - lambda) * LovaszExtension(f, y).value;
    if (!tolerance.Equal(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace choquet::oracle
