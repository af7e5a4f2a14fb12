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

#ifndef CHOQUET_AXIOMS_H_
#define CHOQUET_AXIOMS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <string_view>
#include <vector>

#include "choquet/integral.h"
#include "choquet/set_function.h"
#include "choquet/tolerance.h"

namespace choquet {

// Capacity-parameterized evaluation rules f_v. Besides the signed Choquet
// integral these are the three operator classes that show the three
// conditions characterizing the integral (linearity in v, vanishing of f_{v_S}
// when some x_i = 0 with i in S, interval-scale covariance of f_{v_S}) are
// independent:
//   kWeightedMean  f_v(x) = sum_T m_v(T) * mean_{i in T} x_i
//   kMultilinear   f_v(x) = sum_T m_v(T) * prod_{i in T} x_i
//   kVStarPatch    f_v = C_v except at the capacity v* on [3], where
//                  f_{v*}(x) = min((x_1 + x_2) / 2, x_3).
enum class Family { kChoquet, kWeightedMean, kMultilinear, kVStarPatch };

// "choquet", "weighted-mean", "multilinear", "vstar-patch".
std::string_view FamilyName(Family family);
// Also accepts underscores for dashes. Throws std::invalid_argument.
Family ParseFamily(std::string_view name);

// The normalized capacity v* on [3]: zero on singletons and on {1, 2},
// 1/2 on {1, 3} and {2, 3}, 1 on [3].
SignedCapacity VStar();

class Aggregator {
 public:
  // Throws UnsupportedGroundSet for kVStarPatch with n != 3 and
  // std::invalid_argument for n outside [1, 20].
  Aggregator(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }

  // Throws DimensionMismatch when v or x do not live on [n].
  double Evaluate(const SignedCapacity& v, const Point& x) const;

  // Capacities where the rule departs from its generic formula ({v*} for
  // kVStarPatch, empty otherwise). Random sampling never hits them, so the
  // linearity checker feeds them in explicitly.
  std::vector<SignedCapacity> ExceptionalCapacities() const;

 private:
  Family family_;
  int n_;
};

inline double EvaluateFamily(const Aggregator& agg, const SignedCapacity& v,
                             const Point& x) {
  return agg.Evaluate(v, x);
}

enum class Axiom {
  kComonotonicAdditivity,
  kPositiveHomogeneity,
  kComonotonicAffinity,
  kIntervalScale,
  kZeroOnBasis,
  kLinearityInCapacity,
};

// "comonotonic-additivity", "positive-homogeneity", "comonotonic-affinity",
// "interval-scale", "zero-on-basis", "linearity-in-capacity".
std::string_view AxiomName(Axiom axiom);
// Throws std::invalid_argument.
Axiom ParseAxiom(std::string_view name);

// Whether the axiom is stated for the unanimity game v_S of a subset rather
// than for an arbitrary capacity.
bool IsBasisAxiom(Axiom axiom);

// Everything needed to replay one sample. Which fields are set depends on the
// axiom; `y` is the second point of a comonotonic pair.
struct SampleInputs {
  std::optional<std::vector<double>> capacity = std::nullopt;
  std::optional<SubsetMask> subset = std::nullopt;
  std::optional<Point> x = std::nullopt;
  std::optional<Point> y = std::nullopt;
  std::optional<double> r = std::nullopt;
  std::optional<double> s = std::nullopt;
  std::optional<double> lambda = std::nullopt;
};

// One instance of an identity lhs = rhs.
struct Sample {
  SampleInputs inputs;
  double lhs;
  double rhs;

  double discrepancy() const;
};

// f(x + y) against f(x) + f(y).
Sample AdditivitySample(const Aggregator& agg, const SignedCapacity& v,
                        const Point& x, const Point& y);
// f(r x) against r f(x).
Sample HomogeneitySample(const Aggregator& agg, const SignedCapacity& v,
                         const Point& x, double r);
// f(lambda x + (1 - lambda) y) against lambda f(x) + (1 - lambda) f(y).
Sample AffinitySample(const Aggregator& agg, const SignedCapacity& v,
                      const Point& x, const Point& y, double lambda);
// f_{v_S}(r x + s 1) against r f_{v_S}(x) + s.
Sample IntervalScaleSample(const Aggregator& agg, SubsetMask subset,
                           const Point& x, double r, double s);
// f_{v_S}(x) against 0. Throws std::invalid_argument unless x_i = 0 for some
// i in S.
Sample ZeroOnBasisSample(const Aggregator& agg, SubsetMask subset,
                         const Point& x);
// f_v(x) against sum_T m_v(T) f_{v_T}(x).
Sample LinearitySample(const Aggregator& agg, const SignedCapacity& v,
                       const Point& x);

// Re-evaluates a recorded sample. Throws std::invalid_argument when the
// inputs lack a field the axiom needs.
Sample Replay(const Aggregator& agg, Axiom axiom, const SampleInputs& inputs);

class Rng;

// Applies two independent nondecreasing piecewise-linear maps to a shared base
// vector, so the returned points are comonotonic. About 30% of bases are
// integer-valued to produce ties.
std::pair<Point, Point> SampleComonotonicPair(int n, Rng& rng);

struct CheckOptions {
  Tolerance tolerance = kDefaultTolerance;
  // A sample only falsifies when its discrepancy also exceeds this, so that
  // rounding noise is never reported as a counterexample.
  double falsify_threshold = 1e-6;

  bool Falsifies(const Sample& sample) const;
};

enum class Verdict { kSatisfiedOnSamples, kFalsified };

std::string_view VerdictName(Verdict verdict);

struct AxiomReport {
  Axiom axiom;
  Family family;
  int n;
  Verdict verdict;
  // Always set when falsified: the first falsifying sample.
  std::optional<Sample> witness;
  std::size_t samples_run;
  std::uint64_t seed;
  Tolerance tolerance;
  double falsify_threshold;

  bool falsified() const { return verdict == Verdict::kFalsified; }
};

// Each checker runs `trials` samples and stops at the first falsification.
// Trial t draws from Rng(seed, stream(t)), so reports depend only on the
// arguments. The first trials are fixed fixtures (constant points, r = 1,
// lambda in {0, 1/2, 1}, the zero point, ...); the rest are random:
// coordinates uniform on [-5, 5], r log-uniform on [0.1, 10], s uniform on
// [-5, 5], lambda uniform on [0, 1]. All throw std::invalid_argument when
// trials < 1 and DimensionMismatch when v does not live on [agg.n()].

// Comonotonic pairs are two nondecreasing piecewise-linear maps applied to a
// shared base vector.
AxiomReport CheckComonotonicAdditivity(const Aggregator& agg,
                                       const SignedCapacity& v, int trials,
                                       std::uint64_t seed,
                                       const CheckOptions& options = {});

AxiomReport CheckPositiveHomogeneity(const Aggregator& agg,
                                     const SignedCapacity& v, int trials,
                                     std::uint64_t seed,
                                     const CheckOptions& options = {});

AxiomReport CheckComonotonicAffinity(const Aggregator& agg,
                                     const SignedCapacity& v, int trials,
                                     std::uint64_t seed,
                                     const CheckOptions& options = {});

// Throws EmptySubset for S = empty.
AxiomReport CheckIntervalScaleCovariance(const Aggregator& agg,
                                         SubsetMask subset, int trials,
                                         std::uint64_t seed,
                                         const CheckOptions& options = {});

// Points are drawn from [0, 1]^n and one coordinate in S is set to zero; on
// unrestricted points min_{i in S} x_i need not vanish (x = (-5, 0),
// S = {1, 2}). Throws EmptySubset for S = empty.
AxiomReport CheckZeroOnBasis(const Aggregator& agg, SubsetMask subset,
                             int trials, std::uint64_t seed,
                             const CheckOptions& options = {});

// Samples capacities uniformly on [-1, 1) (on even trials the aggregator's
// exceptional capacities instead, when it has any) and compares f_v with its
// expansion over unanimity games.
AxiomReport CheckLinearityInCapacity(const Aggregator& agg, int trials,
                                     std::uint64_t seed,
                                     const CheckOptions& options = {});

// Runs a basis axiom (interval-scale or zero-on-basis) for every nonempty
// S in ascending mask order, stopping at the first falsified subset;
// samples_run accumulates over the subsets visited.
AxiomReport CheckBasisAxiomAllSubsets(Axiom axiom, const Aggregator& agg,
                                      int trials, std::uint64_t seed,
                                      const CheckOptions& options = {});

// Dispatches by axiom. `v` is ignored by the basis axioms and linearity;
// `subset`, when set, restricts a basis axiom to that S instead of sweeping.
AxiomReport CheckAxiom(Axiom axiom, const Aggregator& agg,
                       const SignedCapacity& v,
                       std::optional<SubsetMask> subset, int trials,
                       std::uint64_t seed, const CheckOptions& options = {});

}  // namespace choquet

#endif  // CHOQUET_AXIOMS_H_
