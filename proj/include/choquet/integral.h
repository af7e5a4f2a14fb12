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

#ifndef CHOQUET_INTEGRAL_H_
#define CHOQUET_INTEGRAL_H_

#include <optional>
#include <span>
#include <vector>

#include "choquet/set_function.h"
#include "choquet/subset.h"

namespace choquet {

// A vector of finite criterion scores x in R^n.
class Point {
 public:
  // Throws std::invalid_argument on empty input or non-finite coordinates.
  explicit Point(std::vector<double> coordinates);

  static Point Constant(int n, double c);
  static Point Indicator(int n, SubsetMask set);

  int size() const { return static_cast<int>(coordinates_.size()); }
  std::span<const double> coordinates() const { return coordinates_; }
  // 1-based, matching element labels.
  double at(int element) const { return coordinates_[element - 1]; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coordinates_;
};

// A permutation pi of [n] with x_{pi(1)} <= ... <= x_{pi(n)}.
struct SortPermutation {
  // order[i - 1] = pi(i), 1-based labels.
  std::vector<int> order;
  // upper_chain[i - 1] = {pi(i), ..., pi(n)}; starts at [n] and drops one
  // element per step.
  std::vector<SubsetMask> upper_chain;

  friend bool operator==(const SortPermutation&,
                         const SortPermutation&) = default;
};

struct EvaluationResult {
  double value;
  SortPermutation permutation_used;
};

// Stable ascending sort by (value, element label): ties keep the smaller
// label first.
SortPermutation ComputeSortPermutation(const Point& x);

// Builds the upper chain for an arbitrary ordering of [n]. Throws
// std::invalid_argument when `order` is not a permutation of 1..n.
SortPermutation MakeSortPermutation(std::vector<int> order);

// Signed Choquet integral sum_i (v_i - v_{i+1}) x_{pi(i)} with
// v_i = v({pi(i), ..., pi(n)}) and v_{n+1} = v(empty) = 0. The value does not
// depend on how ties in x are ordered. Throws DimensionMismatch.
EvaluationResult Choquet(const SignedCapacity& v, const Point& x);

// Classical Choquet integral of a capacity, defined for x >= 0 only. Throws
// std::domain_error on negative coordinates and DimensionMismatch.
EvaluationResult ClassicalChoquet(const Capacity& mu, const Point& x);

// Mobius min-form sum_S m(S) min_{i in S} x_i. The empty-set term contributes
// m(empty) as a constant, so a general Lovasz extension is evaluated as well.
// Zero coefficients are skipped. Throws DimensionMismatch.
EvaluationResult ChoquetMobius(const MobiusRepresentation& m, const Point& x);

// Lovasz extension f(0) + sum_i (f_i - f_{i+1}) x_{pi(i)} with
// f_{n+1} = f(empty); f(empty) may be nonzero. Agrees with f at every vertex
// 1_S. Throws DimensionMismatch.
EvaluationResult LovaszExtension(const SetFunction& f, const Point& x);

// x and y are comonotonic iff (x_i - x_j)(y_i - y_j) >= 0 for all i < j.
// Throws DimensionMismatch.
bool Comonotonic(const Point& x, const Point& y);

// A permutation sorting both x and y, present iff they are comonotonic.
// Throws DimensionMismatch.
std::optional<SortPermutation> CommonSortPermutation(const Point& x,
                                                     const Point& y);

}  // namespace choquet

#endif  // CHOQUET_INTEGRAL_H_
