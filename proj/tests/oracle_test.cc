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
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace choquet::oracle {
namespace {

using ::testing::ElementsAre;

TEST(MobiusNaiveTest, Examples) {
  const MobiusRepresentation m =
      MobiusNaive(UnanimityGame(3, MaskOf({1, 3})).function());
  for (SubsetMask s = 0; s < 8; ++s) EXPECT_EQ(m[s], s == 0b101 ? 1.0 : 0.0);

  const MobiusRepresentation g = MobiusNaive(SetFunction(2, {0, 3, -1, 2}));
  EXPECT_THAT(std::vector<double>(g.coefficients().begin(), g.coefficients().end()),
              ElementsAre(0, 3, -1, 0));

  const MobiusRepresentation z = MobiusNaive(SetFunction::Zero(5));
  EXPECT_TRUE(std::all_of(z.coefficients().begin(), z.coefficients().end(),
                          [](double c) { return c == 0.0; }));
}

TEST(MobiusNaiveTest, GroundSetLimit) {
  EXPECT_NO_THROW(MobiusNaive(SetFunction::Zero(12)));
  EXPECT_THROW(MobiusNaive(SetFunction::Zero(13)), GroundSetTooLarge);
}

// Exhaustive integer grids: {-3..3} for n <= 2, {-1, 0, 1} for n = 3 and
// {0, 1} for n = 4 (every 0/1 function on the 16 subsets).
TEST(MobiusNaiveTest, MatchesFastTransformExhaustively) {
  struct Grid {
    int n;
    int lo;
    int hi;
  };
  for (const Grid& g : {Grid{1, -3, 3}, Grid{2, -3, 3}, Grid{3, -1, 1},
                        Grid{4, 0, 1}}) {
    const std::size_t size = LatticeSize(g.n);
    const int base = g.hi - g.lo + 1;
    std::vector<int> digits(size, 0);
    std::size_t count = 0;
    while (true) {
      std::vector<double> values(size);
      for (std::size_t i = 0; i < size; ++i) values[i] = g.lo + digits[i];
      const SetFunction f(g.n, values);
      ASSERT_EQ(MobiusTransform(f), MobiusNaive(f));
      ++count;
      std::size_t i = 0;
      while (i < size && ++digits[i] == base) digits[i++] = 0;
      if (i == size) break;
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < size; ++i) expected *= base;
    EXPECT_EQ(count, expected);
  }
}

TEST(MobiusNaiveTest, MatchesFastTransformOnRandomReals) {
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      Rng rng(30, n * 100 + trial);
      const SetFunction f = RandomSetFunction(n, rng);
      const MobiusRepresentation fast = MobiusTransform(f);
      const MobiusRepresentation naive = MobiusNaive(f);
      for (SubsetMask s = 0; s <= FullMask(n); ++s) {
        ASSERT_TRUE((Tolerance{1e-12, 1e-12}.Equal(fast[s], naive[s])))
            << fast[s] << " vs " << naive[s];
      }
    }
  }
}

TEST(ChoquetAllPermutationsTest, Examples) {
  Rng rng(31);
  const SignedCapacity v = RandomSignedCapacity(2, rng);
  EXPECT_THAT(ChoquetAllPermutations(v, Point({3, 3})),
              ElementsAre(::testing::DoubleEq(3 * v[0b11])));

  const SignedCapacity game =
      ValidateSignedCapacity(SetFunction(2, {0, 3, -1, 2}));
  EXPECT_THAT(ChoquetAllPermutations(game, Point({5, 1})), ElementsAre(14.0));

  EXPECT_THAT(ChoquetAllPermutations(UnanimityGame(3, MaskOf({1, 2})),
                                     Point({1, 1, 2})),
              ElementsAre(1.0));
}

TEST(ChoquetAllPermutationsTest, Limits) {
  EXPECT_THROW(ChoquetAllPermutations(UnanimityGame(7, 1), Point::Constant(7, 0)),
               GroundSetTooLarge);
  EXPECT_THROW(ChoquetAllPermutations(UnanimityGame(2, 1), Point({1, 2, 3})),
               DimensionMismatch);
}

TEST(ChoquetAllPermutationsTest, AgreesWithMainPathOnTiedPoints) {
  for (int trial = 0; trial < 1000; ++trial) {
    Rng rng(32, trial);
    const int n = rng.UniformInt(1, 5);
    const SignedCapacity v = RandomSignedCapacity(n, rng);
    std::vector<double> coords(n);
    for (double& c : coords) c = rng.UniformInt(-2, 2) * 0.5;
    const Point x(coords);
    const std::vector<double> values = ChoquetAllPermutations(v, x);
    ASSERT_EQ(values.size(), 1u);
    ASSERT_TRUE(kDefaultTolerance.Equal(values.front(), Choquet(v, x).value));
  }
}

TEST(LovaszAffineCheckTest, Examples) {
  Rng rng(33);
  const SetFunction f = RandomSetFunction(3, rng);
  EXPECT_TRUE(LovaszAffineCheck(f, MakeSortPermutation({3, 1, 2}), 1, 0));

  EXPECT_TRUE(LovaszAffineCheck(UnanimityGame(2, MaskOf({1})).function(),
                                MakeSortPermutation({2, 1}), 100, 0));

  const SetFunction seven(3, std::vector<double>(8, 7.0));
  std::vector<int> order = {1, 2, 3};
  do {
    EXPECT_TRUE(LovaszAffineCheck(seven, MakeSortPermutation(order), 50, 1));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(LovaszAffineCheckTest, Limits) {
  EXPECT_THROW(LovaszAffineCheck(SetFunction::Zero(9),
                                 MakeSortPermutation({1, 2, 3, 4, 5, 6, 7, 8, 9}),
                                 1, 0),
               GroundSetTooLarge);
  EXPECT_THROW(LovaszAffineCheck(SetFunction::Zero(3), MakeSortPermutation({1, 2}),
                                 1, 0),
               DimensionMismatch);
}

TEST(LovaszAffineCheckTest, HoldsOnEveryConeForRandomFunctions) {
  for (int n = 1; n <= 6; ++n) {
    Rng rng(34, n);
    const SetFunction f = RandomSetFunction(n, rng, -2, 2);
    for (int sample = 0; sample < 10; ++sample) {
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 1);
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.UniformInt(0, i)]);
      }
      ASSERT_TRUE(LovaszAffineCheck(f, MakeSortPermutation(order), 100,
                                    n * 1000 + sample));
    }
  }
}

}  // namespace
}  // namespace choquet::oracle
