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

#include "choquet/independence.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "choquet/io.h"

namespace choquet {

namespace {

// Deterministic grid on [3] used with and without sampling.
const std::vector<Point>& GridPoints() {
  static const std::vector<Point> points = {
      Point({0.0, 2.0, 1.0}),  Point({1.0, 1.0, 1.0}),
      Point({0.0, 0.0, 0.0}),  Point({-1.0, 3.0, 0.5}),
      Point({2.0, -1.0, 4.0}), Point({0.25, 0.5, 0.75}),
  };
  return points;
}

// Points of [0, 1]^3 for zero-on-basis; a member of S is zeroed per sample.
const std::vector<Point>& UnitGridPoints() {
  static const std::vector<Point> points = {
      Point({1.0, 1.0, 1.0}),
      Point({0.25, 0.5, 0.75}),
      Point({0.5, 1.0, 0.2}),
  };
  return points;
}

struct Scale {
  double r;
  double s;
};

constexpr Scale kGridScales[] = {{1.0, 1.0}, {2.0, -3.0}, {0.5, 0.25}};

std::vector<SignedCapacity> GridCapacities() {
  std::vector<SignedCapacity> out = {VStar(), UnanimityGame(3, MaskOf({1, 3}))};
  out.push_back(ValidateSignedCapacity(LinearCombination(
      2.0, UnanimityGame(3, MaskOf({1})).function(), -3.0,
      UnanimityGame(3, MaskOf({2, 3})).function())));
  out.push_back(ValidateSignedCapacity(SetFunction(
      3, {0.0, 0.3, -0.2, 0.5, 0.1, -0.4, 0.7, 0.9})));
  return out;
}

// Runs the grid for one (family, condition) cell until the first
// falsification.
void RunGrid(const Aggregator& agg, Axiom condition,
             const CheckOptions& options, IndependenceCell& cell) {
  auto consider = [&](Sample sample) {
    ++cell.samples_run;
    if (!cell.falsified && options.Falsifies(sample)) {
      cell.falsified = true;
      cell.witness = std::move(sample);
    }
    return cell.falsified;
  };
  const int n = agg.n();
  switch (condition) {
    case Axiom::kLinearityInCapacity:
      for (const SignedCapacity& v : GridCapacities()) {
        for (const Point& x : GridPoints()) {
          if (consider(LinearitySample(agg, v, x))) return;
        }
      }
      return;
    case Axiom::kIntervalScale:
      for (SubsetMask s = 1; s <= FullMask(n); ++s) {
        for (const Point& x : GridPoints()) {
          for (const Scale& sc : kGridScales) {
            if (consider(IntervalScaleSample(agg, s, x, sc.r, sc.s))) return;
          }
        }
      }
      return;
    case Axiom::kZeroOnBasis:
      for (SubsetMask s = 1; s <= FullMask(n); ++s) {
        for (const Point& base : UnitGridPoints()) {
          for (int i : Elements(s)) {
            std::vector<double> x(base.coordinates().begin(),
                                  base.coordinates().end());
            x[i - 1] = 0.0;
            if (consider(ZeroOnBasisSample(agg, s, Point(std::move(x))))) {
              return;
            }
          }
        }
      }
      return;
    default:
      return;
  }
}

}  // namespace

Axiom ExpectedFalsifiedCondition(Family family) {
  switch (family) {
    case Family::kWeightedMean:
      return Axiom::kZeroOnBasis;
    case Family::kMultilinear:
      return Axiom::kIntervalScale;
    case Family::kVStarPatch:
      return Axiom::kLinearityInCapacity;
    case Family::kChoquet:
      break;
  }
  throw std::invalid_argument("choquet satisfies every condition");
}

std::vector<KnownWitness> KnownWitnesses() {
  const SubsetMask s12 = MaskOf({1, 2});
  const SignedCapacity v = VStar();
  std::vector<double> vstar(v.values().begin(), v.values().end());
  return {
      {Family::kWeightedMean, Axiom::kZeroOnBasis, 2,
       {.subset = s12, .x = Point({0.0, 2.0})}, 1.0, 0.0},
      {Family::kMultilinear, Axiom::kIntervalScale, 2,
       {.subset = s12, .x = Point({1.0, 1.0}), .r = 1.0, .s = 1.0}, 4.0, 2.0},
      {Family::kVStarPatch, Axiom::kLinearityInCapacity, 3,
       {.capacity = vstar, .x = Point({0.0, 2.0, 1.0})}, 1.0, 0.5},
  };
}

bool IndependenceResult::passed() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const IndependenceCell& c) { return c.matches(); }) &&
         std::all_of(witnesses.begin(), witnesses.end(),
                     [](const WitnessCheck& w) { return w.exact; });
}

IndependenceResult RunIndependenceSuite(const IndependenceOptions& options) {
  IndependenceResult result;
  const std::vector<KnownWitness> known = KnownWitnesses();

  for (const KnownWitness& w : known) {
    const Sample replayed =
        Replay(Aggregator(w.family, w.n), w.axiom, w.inputs);
    result.witnesses.push_back(
        {w, replayed,
         replayed.lhs == w.expected_lhs && replayed.rhs == w.expected_rhs});
  }

  for (Family family : kIndependenceFamilies) {
    const int n = family == Family::kVStarPatch ? 3 : options.n;
    const Aggregator agg(family, n);
    const Aggregator grid_agg(family, 3);
    for (Axiom condition : kIndependenceConditions) {
      IndependenceCell cell{family,
                            condition,
                            ExpectedFalsifiedCondition(family) == condition,
                            false,
                            std::nullopt,
                            0};
      for (const WitnessCheck& w : result.witnesses) {
        if (w.known.family == family && w.known.axiom == condition &&
            options.check.Falsifies(w.replayed)) {
          cell.falsified = true;
          cell.witness = w.replayed;
          ++cell.samples_run;
        }
      }
      if (!cell.falsified) RunGrid(grid_agg, condition, options.check, cell);
      if (!cell.falsified && !options.fixed_witnesses_only) {
        const AxiomReport report =
            condition == Axiom::kLinearityInCapacity
                ? CheckLinearityInCapacity(agg, options.trials, options.seed,
                                           options.check)
                : CheckBasisAxiomAllSubsets(condition, agg, options.trials,
                                            options.seed, options.check);
        cell.samples_run += report.samples_run;
        if (report.falsified()) {
          cell.falsified = true;
          cell.witness = report.witness;
        }
      }
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

std::string FormatIndependenceMatrix(const IndependenceResult& result) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "family";
  for (Axiom c : kIndependenceConditions) {
    os << std::setw(24) << AxiomName(c);
  }
  os << '\n';
  for (Family family : kIndependenceFamilies) {
    os << std::setw(16) << FamilyName(family);
    for (const IndependenceCell& cell : result.cells) {
      if (cell.family != family) continue;
      std::string mark = cell.falsified ? "FALSIFIED" : "satisfied";
      if (!cell.matches()) mark += " !";
      os << std::setw(24) << mark;
    }
    os << '\n';
  }
  for (const WitnessCheck& w : result.witnesses) {
    os << "witness " << FamilyName(w.known.family) << " "
       << AxiomName(w.known.axiom) << ": " << FormatDouble(w.replayed.lhs)
       << " vs " << FormatDouble(w.replayed.rhs) << " (expected "
       << FormatDouble(w.known.expected_lhs) << " vs "
       << FormatDouble(w.known.expected_rhs) << ") "
       << (w.exact ? "ok" : "MISMATCH") << '\n';
  }
  for (const IndependenceCell& cell : result.cells) {
    if (!cell.matches()) {
      os << "deviation: " << FamilyName(cell.family) << " / "
         << AxiomName(cell.condition) << " expected "
         << (cell.expected_falsified ? "falsified" : "satisfied") << '\n';
    }
  }
  os << "result: " << (result.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace choquet
