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

#include "choquet/axioms.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "choquet/errors.h"
#include "choquet/random.h"

namespace choquet {

namespace {

constexpr double kCoordinateBound = 5.0;
constexpr double kMinScale = 0.1;
constexpr double kMaxScale = 10.0;

void RequireTrials(int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
}

void RequireGame(const Aggregator& agg, const SignedCapacity& v) {
  if (v.n() != agg.n()) throw DimensionMismatch(agg.n(), v.n());
}

void RequireSubset(const Aggregator& agg, SubsetMask subset) {
  if (subset == 0) throw EmptySubset("basis axioms need a nonempty subset");
  if (!IsSubset(subset, FullMask(agg.n()))) {
    throw std::invalid_argument("subset {" + SubsetKey(subset) +
                                "} is not contained in [" +
                                std::to_string(agg.n()) + "]");
  }
}

std::vector<double> Values(const SignedCapacity& v) {
  return {v.values().begin(), v.values().end()};
}

Point Combine(double a, const Point& x, double b, const Point& y) {
  std::vector<double> out(x.size());
  for (int i = 0; i < x.size(); ++i) {
    out[i] = a * x.coordinates()[i] + b * y.coordinates()[i];
  }
  return Point(std::move(out));
}

Point Affine(double r, const Point& x, double s) {
  std::vector<double> out(x.coordinates().begin(), x.coordinates().end());
  for (double& c : out) c = r * c + s;
  return Point(std::move(out));
}

// (0, 2, 1, 0, 2, 1, ...): a point where v* separates its patched value from
// the linear expansion.
Point FixturePoint(int n) {
  static constexpr double kPattern[] = {0.0, 2.0, 1.0};
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = kPattern[i % 3];
  return Point(std::move(x));
}

// Nondecreasing piecewise-linear map t -> a + s0 t + sum_k s_k max(0, t - c_k)
// with nonnegative slopes.
class MonotoneMap {
 public:
  explicit MonotoneMap(Rng& rng) {
    offset_ = rng.Uniform(-kCoordinateBound, kCoordinateBound);
    slope_ = rng.Bernoulli(0.2) ? 0.0 : rng.Uniform(0.0, 2.0);
    for (auto& [knot, slope] : hinges_) {
      knot = rng.Uniform(-kCoordinateBound, kCoordinateBound);
      slope = rng.Uniform(0.0, 2.0);
    }
  }

  double operator()(double t) const {
    double y = offset_ + slope_ * t;
    for (const auto& [knot, slope] : hinges_) y += slope * std::max(0.0, t - knot);
    return y;
  }

 private:
  double offset_;
  double slope_;
  std::pair<double, double> hinges_[2];
};

}  // namespace

std::pair<Point, Point> SampleComonotonicPair(int n, Rng& rng) {
  std::vector<double> base(n);
  // Integer-valued bases produce ties.
  const bool tied = rng.Bernoulli(0.3);
  for (double& b : base) {
    b = tied ? rng.UniformInt(-2, 2)
             : rng.Uniform(-kCoordinateBound, kCoordinateBound);
  }
  const MonotoneMap phi(rng);
  const MonotoneMap psi(rng);
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = phi(base[i]);
    y[i] = psi(base[i]);
  }
  return {Point(std::move(x)), Point(std::move(y))};
}

namespace {

Point RandomCoordinates(int n, Rng& rng) {
  return RandomPoint(n, rng, -kCoordinateBound, kCoordinateBound);
}

// Runs draw(trial, rng) for each trial and stops at the first falsification.
template <typename Draw>
AxiomReport RunTrials(Axiom axiom, const Aggregator& agg, int trials,
                      std::uint64_t seed, std::uint64_t stream_base,
                      const CheckOptions& options, Draw draw) {
  RequireTrials(trials);
  AxiomReport report{axiom,
                     agg.family(),
                     agg.n(),
                     Verdict::kSatisfiedOnSamples,
                     std::nullopt,
                     0,
                     seed,
                     options.tolerance,
                     options.falsify_threshold};
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed, stream_base + static_cast<std::uint64_t>(t));
    Sample sample = draw(t, rng);
    ++report.samples_run;
    if (options.Falsifies(sample)) {
      report.verdict = Verdict::kFalsified;
      report.witness = std::move(sample);
      break;
    }
  }
  return report;
}

std::uint64_t SubsetStream(SubsetMask subset) {
  return static_cast<std::uint64_t>(subset) << 32;
}

const SignedCapacity& VStarInstance() {
  static const SignedCapacity v = [] {
    std::vector<double> values(8, 0.0);
    values[MaskOf({1, 3})] = 0.5;
    values[MaskOf({2, 3})] = 0.5;
    values[MaskOf({1, 2, 3})] = 1.0;
    return ValidateSignedCapacity(SetFunction(3, std::move(values)));
  }();
  return v;
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kChoquet:
      return "choquet";
    case Family::kWeightedMean:
      return "weighted-mean";
    case Family::kMultilinear:
      return "multilinear";
    case Family::kVStarPatch:
      return "vstar-patch";
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '_', '-');
  for (Family f : {Family::kChoquet, Family::kWeightedMean,
                   Family::kMultilinear, Family::kVStarPatch}) {
    if (normalized == FamilyName(f)) return f;
  }
  throw std::invalid_argument(
      "unknown family '" + std::string(name) +
      "' (expected choquet, weighted-mean, multilinear or vstar-patch)");
}

SignedCapacity VStar() { return VStarInstance(); }

Aggregator::Aggregator(Family family, int n) : family_(family), n_(n) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw std::invalid_argument("n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxGroundSetSize) + "]");
  }
  if (family == Family::kVStarPatch && n != 3) {
    throw UnsupportedGroundSet("vstar-patch is defined on [3] only, got n = " +
                               std::to_string(n));
  }
}

double Aggregator::Evaluate(const SignedCapacity& v, const Point& x) const {
  RequireGame(*this, v);
  if (x.size() != n_) throw DimensionMismatch(n_, x.size());
  switch (family_) {
    case Family::kChoquet:
      return Choquet(v, x).value;
    case Family::kWeightedMean: {
      const MobiusRepresentation m = MobiusTransform(v.function());
      double total = 0.0;
      for (std::size_t s = 1; s < m.coefficients().size(); ++s) {
        if (m[s] == 0.0) continue;
        double sum = 0.0;
        for (int i : Elements(static_cast<SubsetMask>(s))) sum += x.at(i);
        total += m[s] * (sum / Cardinality(static_cast<SubsetMask>(s)));
      }
      return total;
    }
    case Family::kMultilinear: {
      const MobiusRepresentation m = MobiusTransform(v.function());
      double total = m[0];
      for (std::size_t s = 1; s < m.coefficients().size(); ++s) {
        if (m[s] == 0.0) continue;
        double product = 1.0;
        for (int i : Elements(static_cast<SubsetMask>(s))) product *= x.at(i);
        total += m[s] * product;
      }
      return total;
    }
    case Family::kVStarPatch:
      if (v == VStarInstance()) {
        return std::min((x.at(1) + x.at(2)) / 2.0, x.at(3));
      }
      return Choquet(v, x).value;
  }
  throw std::logic_error("unhandled family");
}

std::vector<SignedCapacity> Aggregator::ExceptionalCapacities() const {
  if (family_ == Family::kVStarPatch) return {VStarInstance()};
  return {};
}

std::string_view AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kComonotonicAdditivity:
      return "comonotonic-additivity";
    case Axiom::kPositiveHomogeneity:
      return "positive-homogeneity";
    case Axiom::kComonotonicAffinity:
      return "comonotonic-affinity";
    case Axiom::kIntervalScale:
      return "interval-scale";
    case Axiom::kZeroOnBasis:
      return "zero-on-basis";
    case Axiom::kLinearityInCapacity:
      return "linearity-in-capacity";
  }
  return "unknown";
}

Axiom ParseAxiom(std::string_view name) {
  for (Axiom a :
       {Axiom::kComonotonicAdditivity, Axiom::kPositiveHomogeneity,
        Axiom::kComonotonicAffinity, Axiom::kIntervalScale,
        Axiom::kZeroOnBasis, Axiom::kLinearityInCapacity}) {
    if (name == AxiomName(a)) return a;
  }
  throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
}

bool IsBasisAxiom(Axiom axiom) {
  return axiom == Axiom::kIntervalScale || axiom == Axiom::kZeroOnBasis;
}

double Sample::discrepancy() const { return std::abs(lhs - rhs); }

bool CheckOptions::Falsifies(const Sample& sample) const {
  const double d = sample.discrepancy();
  return d > tolerance.Band(sample.lhs, sample.rhs) && d > falsify_threshold;
}

std::string_view VerdictName(Verdict verdict) {
  return verdict == Verdict::kFalsified ? "falsified" : "satisfied-on-samples";
}

Sample AdditivitySample(const Aggregator& agg, const SignedCapacity& v,
                        const Point& x, const Point& y) {
  Sample s{{.capacity = Values(v), .x = x, .y = y}, 0.0, 0.0};
  s.lhs = agg.Evaluate(v, Combine(1.0, x, 1.0, y));
  s.rhs = agg.Evaluate(v, x) + agg.Evaluate(v, y);
  return s;
}

Sample HomogeneitySample(const Aggregator& agg, const SignedCapacity& v,
                         const Point& x, double r) {
  Sample s{{.capacity = Values(v), .x = x, .r = r}, 0.0, 0.0};
  s.lhs = agg.Evaluate(v, Affine(r, x, 0.0));
  s.rhs = r * agg.Evaluate(v, x);
  return s;
}

Sample AffinitySample(const Aggregator& agg, const SignedCapacity& v,
                      const Point& x, const Point& y, double lambda) {
  Sample s{{.capacity = Values(v), .x = x, .y = y, .lambda = lambda}, 0.0,
           0.0};
  s.lhs = agg.Evaluate(v, Combine(lambda, x, 1.0 - lambda, y));
  s.rhs = lambda * agg.Evaluate(v, x) + (1.0 - lambda) * agg.Evaluate(v, y);
  return s;
}

Sample IntervalScaleSample(const Aggregator& agg, SubsetMask subset,
                           const Point& x, double r, double s) {
  RequireSubset(agg, subset);
  const SignedCapacity basis = UnanimityGame(agg.n(), subset);
  Sample out{{.subset = subset, .x = x, .r = r, .s = s}, 0.0, 0.0};
  out.lhs = agg.Evaluate(basis, Affine(r, x, s));
  out.rhs = r * agg.Evaluate(basis, x) + s;
  return out;
}

Sample ZeroOnBasisSample(const Aggregator& agg, SubsetMask subset,
                         const Point& x) {
  RequireSubset(agg, subset);
  const auto members = Elements(subset);
  if (x.size() != agg.n()) throw DimensionMismatch(agg.n(), x.size());
  if (std::none_of(members.begin(), members.end(),
                   [&](int i) { return x.at(i) == 0.0; })) {
    throw std::invalid_argument("zero-on-basis needs x_i = 0 for some i in S");
  }
  Sample out{{.subset = subset, .x = x}, 0.0, 0.0};
  out.lhs = agg.Evaluate(UnanimityGame(agg.n(), subset), x);
  return out;
}

Sample LinearitySample(const Aggregator& agg, const SignedCapacity& v,
                       const Point& x) {
  RequireGame(agg, v);
  Sample out{{.capacity = Values(v), .x = x}, 0.0, 0.0};
  out.lhs = agg.Evaluate(v, x);
  for (const BasisTerm& term : BasisDecomposition(v)) {
    out.rhs +=
        term.coefficient * agg.Evaluate(UnanimityGame(agg.n(), term.subset), x);
  }
  return out;
}

Sample Replay(const Aggregator& agg, Axiom axiom, const SampleInputs& in) {
  auto need = [&](bool present, const char* field) {
    if (!present) {
      throw std::invalid_argument(std::string(AxiomName(axiom)) +
                                  " sample is missing '" + field + "'");
    }
  };
  auto game = [&] {
    need(in.capacity.has_value(), "capacity");
    return ValidateSignedCapacity(SetFunction(agg.n(), *in.capacity));
  };
  need(in.x.has_value(), "x");
  switch (axiom) {
    case Axiom::kComonotonicAdditivity:
      need(in.y.has_value(), "y");
      return AdditivitySample(agg, game(), *in.x, *in.y);
    case Axiom::kPositiveHomogeneity:
      need(in.r.has_value(), "r");
      return HomogeneitySample(agg, game(), *in.x, *in.r);
    case Axiom::kComonotonicAffinity:
      need(in.y.has_value(), "y");
      need(in.lambda.has_value(), "lambda");
      return AffinitySample(agg, game(), *in.x, *in.y, *in.lambda);
    case Axiom::kIntervalScale:
      need(in.subset.has_value(), "subset");
      need(in.r.has_value(), "r");
      need(in.s.has_value(), "s");
      return IntervalScaleSample(agg, *in.subset, *in.x, *in.r, *in.s);
    case Axiom::kZeroOnBasis:
      need(in.subset.has_value(), "subset");
      return ZeroOnBasisSample(agg, *in.subset, *in.x);
    case Axiom::kLinearityInCapacity:
      return LinearitySample(agg, game(), *in.x);
  }
  throw std::logic_error("unhandled axiom");
}

AxiomReport CheckComonotonicAdditivity(const Aggregator& agg,
                                       const SignedCapacity& v, int trials,
                                       std::uint64_t seed,
                                       const CheckOptions& options) {
  RequireGame(agg, v);
  const int n = agg.n();
  return RunTrials(
      Axiom::kComonotonicAdditivity, agg, trials, seed, 0, options,
      [&](int t, Rng& rng) {
        if (t == 0) {
          return AdditivitySample(agg, v, Point::Constant(n, 1.0),
                                  Point::Constant(n, 1.0));
        }
        if (t == 1) {
          return AdditivitySample(agg, v, RandomCoordinates(n, rng),
                                  Point::Constant(n, 0.0));
        }
        auto [x, y] = SampleComonotonicPair(n, rng);
        return AdditivitySample(agg, v, x, y);
      });
}

AxiomReport CheckPositiveHomogeneity(const Aggregator& agg,
                                     const SignedCapacity& v, int trials,
                                     std::uint64_t seed,
                                     const CheckOptions& options) {
  RequireGame(agg, v);
  const int n = agg.n();
  return RunTrials(Axiom::kPositiveHomogeneity, agg, trials, seed, 0, options,
                   [&](int t, Rng& rng) {
                     if (t == 0) {
                       return HomogeneitySample(agg, v,
                                                Point::Constant(n, 1.0), 2.0);
                     }
                     Point x = RandomCoordinates(n, rng);
                     const double r =
                         t == 1 ? 1.0 : rng.LogUniform(kMinScale, kMaxScale);
                     return HomogeneitySample(agg, v, x, r);
                   });
}

AxiomReport CheckComonotonicAffinity(const Aggregator& agg,
                                     const SignedCapacity& v, int trials,
                                     std::uint64_t seed,
                                     const CheckOptions& options) {
  RequireGame(agg, v);
  const int n = agg.n();
  return RunTrials(
      Axiom::kComonotonicAffinity, agg, trials, seed, 0, options,
      [&](int t, Rng& rng) {
        if (t == 0) {
          return AffinitySample(agg, v, Point::Constant(n, 0.0),
                                Point::Constant(n, 2.0), 0.5);
        }
        auto [x, y] = SampleComonotonicPair(n, rng);
        const double lambda = t == 1   ? 0.0
                              : t == 2 ? 1.0
                                       : rng.Uniform(0.0, 1.0);
        return AffinitySample(agg, v, x, y, lambda);
      });
}

AxiomReport CheckIntervalScaleCovariance(const Aggregator& agg,
                                         SubsetMask subset, int trials,
                                         std::uint64_t seed,
                                         const CheckOptions& options) {
  RequireSubset(agg, subset);
  const int n = agg.n();
  return RunTrials(
      Axiom::kIntervalScale, agg, trials, seed, SubsetStream(subset), options,
      [&](int t, Rng& rng) {
        if (t == 0) {
          return IntervalScaleSample(agg, subset, Point::Constant(n, 1.0), 1.0,
                                     1.0);
        }
        Point x = RandomCoordinates(n, rng);
        const double r = rng.LogUniform(kMinScale, kMaxScale);
        const double s = rng.Uniform(-kCoordinateBound, kCoordinateBound);
        return IntervalScaleSample(agg, subset, x, r, s);
      });
}

AxiomReport CheckZeroOnBasis(const Aggregator& agg, SubsetMask subset,
                             int trials, std::uint64_t seed,
                             const CheckOptions& options) {
  RequireSubset(agg, subset);
  const int n = agg.n();
  const std::vector<int> members = Elements(subset);
  return RunTrials(
      Axiom::kZeroOnBasis, agg, trials, seed, SubsetStream(subset), options,
      [&](int t, Rng& rng) {
        if (t == 0) {
          return ZeroOnBasisSample(agg, subset, Point::Constant(n, 0.0));
        }
        std::vector<double> x(n, 1.0);
        int zeroed = members.front();
        if (t > 1) {
          for (double& c : x) c = rng.Uniform(0.0, 1.0);
          zeroed = members[rng.UniformInt(
              0, static_cast<int>(members.size()) - 1)];
        }
        x[zeroed - 1] = 0.0;
        return ZeroOnBasisSample(agg, subset, Point(std::move(x)));
      });
}

AxiomReport CheckLinearityInCapacity(const Aggregator& agg, int trials,
                                     std::uint64_t seed,
                                     const CheckOptions& options) {
  const int n = agg.n();
  const std::vector<SignedCapacity> exceptional = agg.ExceptionalCapacities();
  return RunTrials(
      Axiom::kLinearityInCapacity, agg, trials, seed, 0, options,
      [&](int t, Rng& rng) {
        if (t == 0) {
          return LinearitySample(
              agg,
              exceptional.empty() ? RandomSignedCapacity(n, rng)
                                  : exceptional.front(),
              FixturePoint(n));
        }
        if (!exceptional.empty() && t % 2 == 0) {
          const SignedCapacity& v = exceptional[(t / 2) % exceptional.size()];
          return LinearitySample(agg, v, RandomCoordinates(n, rng));
        }
        SignedCapacity v = RandomSignedCapacity(n, rng);
        return LinearitySample(agg, v, RandomCoordinates(n, rng));
      });
}

AxiomReport CheckBasisAxiomAllSubsets(Axiom axiom, const Aggregator& agg,
                                      int trials, std::uint64_t seed,
                                      const CheckOptions& options) {
  if (!IsBasisAxiom(axiom)) {
    throw std::invalid_argument(std::string(AxiomName(axiom)) +
                                " is not stated on basis games");
  }
  RequireTrials(trials);
  std::size_t total = 0;
  AxiomReport report;
  for (SubsetMask s = 1; s <= FullMask(agg.n()); ++s) {
    report = axiom == Axiom::kIntervalScale
                 ? CheckIntervalScaleCovariance(agg, s, trials, seed, options)
                 : CheckZeroOnBasis(agg, s, trials, seed, options);
    total += report.samples_run;
    if (report.falsified()) break;
  }
  report.samples_run = total;
  return report;
}

AxiomReport CheckAxiom(Axiom axiom, const Aggregator& agg,
                       const SignedCapacity& v,
                       std::optional<SubsetMask> subset, int trials,
                       std::uint64_t seed, const CheckOptions& options) {
  switch (axiom) {
    case Axiom::kComonotonicAdditivity:
      return CheckComonotonicAdditivity(agg, v, trials, seed, options);
    case Axiom::kPositiveHomogeneity:
      return CheckPositiveHomogeneity(agg, v, trials, seed, options);
    case Axiom::kComonotonicAffinity:
      return CheckComonotonicAffinity(agg, v, trials, seed, options);
    case Axiom::kIntervalScale:
      return subset ? CheckIntervalScaleCovariance(agg, *subset, trials, seed,
                                                   options)
                    : CheckBasisAxiomAllSubsets(axiom, agg, trials, seed,
                                                options);
    case Axiom::kZeroOnBasis:
      return subset ? CheckZeroOnBasis(agg, *subset, trials, seed, options)
                    : CheckBasisAxiomAllSubsets(axiom, agg, trials, seed,
                                                options);
    case Axiom::kLinearityInCapacity:
      return CheckLinearityInCapacity(agg, trials, seed, options);
  }
  throw std::logic_error("unhandled axiom");
}

}  // namespace choquet
