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

#ifndef CHOQUET_SET_FUNCTION_H_
#define CHOQUET_SET_FUNCTION_H_

#include <span>
#include <vector>

#include "choquet/subset.h"

namespace choquet {

// Real values on all 2^n subsets of [n], indexed by subset mask. Also stands
// for the pseudo-Boolean function f with f(1_S) = value(S).
//
// Invariants: 1 <= n <= 20, exactly 2^n finite entries.
class SetFunction {
 public:
  // Throws InvalidSetFunction when the invariants do not hold.
  SetFunction(int n, std::vector<double> values);

  static SetFunction Zero(int n);

  int n() const { return n_; }
  SubsetMask full_mask() const { return FullMask(n_); }
  std::span<const double> values() const { return values_; }
  double operator[](SubsetMask set) const { return values_[set]; }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  int n_;
  std::vector<double> values_;
};

// Pointwise a*f + b*g. Throws DimensionMismatch when the ground sets differ.
SetFunction LinearCombination(double a, const SetFunction& f, double b,
                              const SetFunction& g);

// A set function with v(empty) = 0 exactly (a game).
class SignedCapacity {
 public:
  const SetFunction& function() const { return function_; }
  int n() const { return function_.n(); }
  std::span<const double> values() const { return function_.values(); }
  double operator[](SubsetMask set) const { return function_[set]; }

  friend bool operator==(const SignedCapacity&,
                         const SignedCapacity&) = default;

 private:
  friend SignedCapacity ValidateSignedCapacity(SetFunction f);
  explicit SignedCapacity(SetFunction f) : function_(std::move(f)) {}

  SetFunction function_;
};

// A signed capacity that is monotone under inclusion.
class Capacity {
 public:
  const SignedCapacity& game() const { return game_; }
  const SetFunction& function() const { return game_.function(); }
  int n() const { return game_.n(); }
  double operator[](SubsetMask set) const { return game_[set]; }

 private:
  friend Capacity ValidateCapacity(SignedCapacity v);
  explicit Capacity(SignedCapacity v) : game_(std::move(v)) {}

  SignedCapacity game_;
};

// Coefficients m(S) = sum over T subset S of (-1)^{|S|-|T|} f(T), on the same
// lattice as the set function they came from.
class MobiusRepresentation {
 public:
  // Throws InvalidSetFunction under the same conditions as SetFunction.
  MobiusRepresentation(int n, std::vector<double> coefficients);

  int n() const { return n_; }
  std::span<const double> coefficients() const { return coefficients_; }
  double operator[](SubsetMask set) const { return coefficients_[set]; }

  friend bool operator==(const MobiusRepresentation&,
                         const MobiusRepresentation&) = default;

 private:
  int n_;
  std::vector<double> coefficients_;
};

// Throws NotAGame unless f(empty) == 0 exactly.
SignedCapacity ValidateSignedCapacity(SetFunction f);

// Checks v(S) <= v(T) on the n * 2^(n-1) covering pairs (|T \ S| = 1). Every
// inclusion S subset T is a chain of covering pairs, so this is equivalent to
// full monotonicity. Pairs are scanned with T descending from [n] and the
// removed element ascending; the first violation is reported.
// Throws NotMonotone.
Capacity ValidateCapacity(SignedCapacity v);

// Fast in-place transform over the subset lattice, O(n * 2^n): for each bit
// in ascending order, masks ascending, a[S] -= a[S \ {bit}].
MobiusRepresentation MobiusTransform(const SetFunction& f);

// Inverse of MobiusTransform: values[S] = sum over T subset S of m(T). Same
// loop order with += in place of -=.
SetFunction ZetaTransform(const MobiusRepresentation& m);

// v_T(S) = 1 iff T subset S. Throws EmptySubset when T is empty and
// std::invalid_argument when T is not a subset of [n].
SignedCapacity UnanimityGame(int n, SubsetMask t);

struct BasisTerm {
  SubsetMask subset;
  double coefficient;

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

// Expansion v = sum m_v(T) v_T over unanimity games: the nonzero Mobius
// coefficients in ascending mask order. The empty set never appears because
// m_v(empty) = v(empty) = 0.
std::vector<BasisTerm> BasisDecomposition(const SignedCapacity& v);

}  // namespace choquet

#endif  // CHOQUET_SET_FUNCTION_H_
