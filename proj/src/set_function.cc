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

#include "choquet/set_function.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "choquet/errors.h"

namespace choquet {

namespace {

void CheckLattice(int n, std::span<const double> values, const char* what) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw InvalidSetFunction(std::string(what) + ": n = " + std::to_string(n) +
                             " outside [1, " +
                             std::to_string(kMaxGroundSetSize) + "]");
  }
  if (values.size() != LatticeSize(n)) {
    throw InvalidSetFunction(std::string(what) + ": expected " +
                             std::to_string(LatticeSize(n)) +
                             " values, got " + std::to_string(values.size()));
  }
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    if (!std::isfinite(values[mask])) {
      throw InvalidSetFunction(std::string(what) +
                               ": non-finite value on subset {" +
                               SubsetKey(static_cast<SubsetMask>(mask)) + "}");
    }
  }
}

}  // namespace

SetFunction::SetFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  CheckLattice(n_, values_, "set function");
}

SetFunction SetFunction::Zero(int n) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw InvalidSetFunction("set function: n = " + std::to_string(n) +
                             " out of range");
  }
  return SetFunction(n, std::vector<double>(LatticeSize(n), 0.0));
}

SetFunction LinearCombination(double a, const SetFunction& f, double b,
                              const SetFunction& g) {
  if (f.n() != g.n()) throw DimensionMismatch(f.n(), g.n());
  std::vector<double> out(LatticeSize(f.n()));
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s] = a * f.values()[s] + b * g.values()[s];
  }
  return SetFunction(f.n(), std::move(out));
}

MobiusRepresentation::MobiusRepresentation(int n,
                                           std::vector<double> coefficients)
    : n_(n), coefficients_(std::move(coefficients)) {
  CheckLattice(n_, coefficients_, "Mobius representation");
}

SignedCapacity ValidateSignedCapacity(SetFunction f) {
  if (f[0] != 0.0) throw NotAGame(f[0]);
  return SignedCapacity(std::move(f));
}

Capacity ValidateCapacity(SignedCapacity v) {
  const int n = v.n();
  const SubsetMask full = FullMask(n);
  for (SubsetMask t = full;; --t) {
    for (int bit = 0; bit < n; ++bit) {
      const SubsetMask b = SubsetMask{1} << bit;
      if (!(t & b)) continue;
      const SubsetMask s = t ^ b;
      if (v[s] > v[t]) throw NotMonotone(s, t, v[s], v[t]);
    }
    if (t == 0) break;
  }
  return Capacity(std::move(v));
}

MobiusRepresentation MobiusTransform(const SetFunction& f) {
  std::vector<double> a(f.values().begin(), f.values().end());
  const std::size_t size = a.size();
  for (int bit = 0; bit < f.n(); ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & b) a[mask] -= a[mask ^ b];
    }
  }
  return MobiusRepresentation(f.n(), std::move(a));
}

SetFunction ZetaTransform(const MobiusRepresentation& m) {
  std::vector<double> a(m.coefficients().begin(), m.coefficients().end());
  const std::size_t size = a.size();
  for (int bit = 0; bit < m.n(); ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & b) a[mask] += a[mask ^ b];
    }
  }
  return SetFunction(m.n(), std::move(a));
}

SignedCapacity UnanimityGame(int n, SubsetMask t) {
  if (t == 0) {
    throw EmptySubset("unanimity game needs a nonempty subset");
  }
  if (n < 1 || n > kMaxGroundSetSize || !IsSubset(t, FullMask(n))) {
    throw std::invalid_argument("subset {" + SubsetKey(t) +
                                "} is not contained in [" +
                                std::to_string(n) + "]");
  }
  std::vector<double> values(LatticeSize(n), 0.0);
  for (std::size_t s = 0; s < values.size(); ++s) {
    if (IsSubset(t, static_cast<SubsetMask>(s))) values[s] = 1.0;
  }
  return ValidateSignedCapacity(SetFunction(n, std::move(values)));
}

std::vector<BasisTerm> BasisDecomposition(const SignedCapacity& v) {
  const MobiusRepresentation m = MobiusTransform(v.function());
  std::vector<BasisTerm> terms;
  for (std::size_t s = 1; s < m.coefficients().size(); ++s) {
    if (m[s] != 0.0) terms.push_back({static_cast<SubsetMask>(s), m[s]});
  }
  return terms;
}

}  // namespace choquet
