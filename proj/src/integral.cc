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

#include "choquet/integral.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "choquet/errors.h"

namespace choquet {

Point::Point(std::vector<double> coordinates)
    : coordinates_(std::move(coordinates)) {
  if (coordinates_.empty()) {
    throw std::invalid_argument("point must have at least one coordinate");
  }
  if (coordinates_.size() > static_cast<std::size_t>(kMaxGroundSetSize)) {
    throw std::invalid_argument("point has more than " +
                                std::to_string(kMaxGroundSetSize) +
                                " coordinates");
  }
  for (double c : coordinates_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("point coordinates must be finite");
    }
  }
}

Point Point::Constant(int n, double c) {
  return Point(std::vector<double>(n, c));
}

Point Point::Indicator(int n, SubsetMask set) {
  std::vector<double> x(n, 0.0);
  for (int i = 1; i <= n; ++i) {
    if (Contains(set, i)) x[i - 1] = 1.0;
  }
  return Point(std::move(x));
}

SortPermutation MakeSortPermutation(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  SortPermutation perm;
  perm.upper_chain.resize(n);
  SubsetMask seen = 0;
  for (int e : order) {
    if (e < 1 || e > n || Contains(seen, e)) {
      throw std::invalid_argument("not a permutation of [n]");
    }
    seen |= SubsetMask{1} << (e - 1);
  }
  SubsetMask upper = FullMask(n);
  for (int i = 0; i < n; ++i) {
    perm.upper_chain[i] = upper;
    upper &= ~(SubsetMask{1} << (order[i] - 1));
  }
  perm.order = std::move(order);
  return perm;
}

SortPermutation ComputeSortPermutation(const Point& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x.at(a) < x.at(b); });
  return MakeSortPermutation(std::move(order));
}

namespace {

// offset + sum_i (f(U_i) - f(U_{i+1})) x_{pi(i)} along the upper chain, with
// f(U_{n+1}) = f(empty).
double ChainSum(std::span<const double> f, const Point& x,
                const SortPermutation& perm) {
  const int n = x.size();
  double total = f[0];
  for (int i = 0; i < n; ++i) {
    const double next = i + 1 < n ? f[perm.upper_chain[i + 1]] : f[0];
    total += (f[perm.upper_chain[i]] - next) * x.at(perm.order[i]);
  }
  return total;
}

void CheckDimension(int n, const Point& x) {
  if (x.size() != n) throw DimensionMismatch(n, x.size());
}

}  // namespace

EvaluationResult Choquet(const SignedCapacity& v, const Point& x) {
  CheckDimension(v.n(), x);
  SortPermutation perm = ComputeSortPermutation(x);
  const double value = ChainSum(v.values(), x, perm);
  return {value, std::move(perm)};
}

EvaluationResult ClassicalChoquet(const Capacity& mu, const Point& x) {
  CheckDimension(mu.n(), x);
  for (double c : x.coordinates()) {
    if (c < 0.0) {
      throw std::domain_error(
          "the Choquet integral of a capacity is defined on [0, inf)^n");
    }
  }
  return Choquet(mu.game(), x);
}

EvaluationResult ChoquetMobius(const MobiusRepresentation& m, const Point& x) {
  CheckDimension(m.n(), x);
  const auto coords = x.coordinates();
  const std::size_t size = m.coefficients().size();
  // mins[S] = min_{i in S} x_i, built from S minus its lowest element.
  std::vector<double> mins(size, std::numeric_limits<double>::infinity());
  double total = m[0];
  for (std::size_t s = 1; s < size; ++s) {
    const std::size_t low = s & (~s + 1);
    mins[s] = std::min(mins[s ^ low], coords[std::countr_zero(low)]);
    if (m[s] != 0.0) total += m[s] * mins[s];
  }
  return {total, ComputeSortPermutation(x)};
}

EvaluationResult LovaszExtension(const SetFunction& f, const Point& x) {
  CheckDimension(f.n(), x);
  SortPermutation perm = ComputeSortPermutation(x);
  const double value = ChainSum(f.values(), x, perm);
  return {value, std::move(perm)};
}

std::optional<SortPermutation> CommonSortPermutation(const Point& x,
                                                     const Point& y) {
  if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (x.at(a) != x.at(b)) return x.at(a) < x.at(b);
    return y.at(a) < y.at(b);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (y.at(order[i - 1]) > y.at(order[i])) return std::nullopt;
  }
  return MakeSortPermutation(std::move(order));
}

bool Comonotonic(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
  const int n = x.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // Sign test rather than the product, which can underflow to zero.
      const double dx = x.at(i) - x.at(j);
      const double dy = y.at(i) - y.at(j);
      if ((dx < 0.0 && dy > 0.0) || (dx > 0.0 && dy < 0.0)) return false;
    }
  }
  return true;
}

}  // namespace choquet
