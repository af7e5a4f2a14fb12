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

#ifndef CHOQUET_INDEPENDENCE_H_
#define CHOQUET_INDEPENDENCE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "choquet/axioms.h"

namespace choquet {

// Rows are the counterexample families, columns the three conditions
// (linearity in the capacity, zero on basis games, interval-scale
// covariance). Each family must fail exactly one condition:
//   weighted-mean -> zero-on-basis
//   multilinear   -> interval-scale
//   vstar-patch   -> linearity-in-capacity
inline constexpr std::array<Family, 3> kIndependenceFamilies = {
    Family::kWeightedMean, Family::kMultilinear, Family::kVStarPatch};
inline constexpr std::array<Axiom, 3> kIndependenceConditions = {
    Axiom::kLinearityInCapacity, Axiom::kZeroOnBasis, Axiom::kIntervalScale};

Axiom ExpectedFalsifiedCondition(Family family);

// The fixed counterexample for a family, with its exact expected sides:
//   weighted-mean: S = {1, 2}, x = (0, 2), n = 2: 1 against 0
//   multilinear:   S = {1, 2}, x = (1, 1), r = 1, s = 1, n = 2: 4 against 2
//   vstar-patch:   v = v*, x = (0, 2, 1): 1 against 1/2
struct KnownWitness {
  Family family;
  Axiom axiom;
  int n;
  SampleInputs inputs;
  double expected_lhs;
  double expected_rhs;
};

std::vector<KnownWitness> KnownWitnesses();

struct IndependenceCell {
  Family family;
  Axiom condition;
  bool expected_falsified;
  bool falsified;
  // First falsifying sample, fixed or sampled.
  std::optional<Sample> witness;
  std::size_t samples_run;

  bool matches() const { return expected_falsified == falsified; }
};

struct WitnessCheck {
  KnownWitness known;
  Sample replayed;
  // Both sides reproduced bit-for-bit.
  bool exact;
};

struct IndependenceOptions {
  int trials = 500;
  std::uint64_t seed = 0;
  // n for the sampled part; the vstar-patch family always uses 3.
  int n = 3;
  bool fixed_witnesses_only = false;
  CheckOptions check;
};

struct IndependenceResult {
  std::vector<IndependenceCell> cells;
  std::vector<WitnessCheck> witnesses;

  bool passed() const;
};

// Fills every cell from a deterministic fixture grid (fixed points, scalings
// and capacities including v*), then, unless fixed_witnesses_only, from the
// seeded checkers (basis conditions sweep every nonempty S). Also replays
// the known witnesses.
IndependenceResult RunIndependenceSuite(const IndependenceOptions& options);

// Plain-text matrix with one row per family; falsified cells are marked
// "FALSIFIED", unexpected ones flagged "!".
std::string FormatIndependenceMatrix(const IndependenceResult& result);

}  // namespace choquet

#endif  // CHOQUET_INDEPENDENCE_H_
