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

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace choquet {
namespace {

using ::testing::HasSubstr;

std::vector<bool> Verdicts(const IndependenceResult& result) {
  std::vector<bool> out;
  for (const IndependenceCell& c : result.cells) out.push_back(c.falsified);
  return out;
}

TEST(IndependenceSuiteTest, DefaultRunMatchesExpectedPattern) {
  const IndependenceResult result = RunIndependenceSuite({});
  ASSERT_EQ(result.cells.size(), 9u);
  for (const IndependenceCell& cell : result.cells) {
    EXPECT_TRUE(cell.matches())
        << FamilyName(cell.family) << " / " << AxiomName(cell.condition);
    EXPECT_EQ(cell.falsified, cell.witness.has_value());
  }
  for (Family family : kIndependenceFamilies) {
    int falsified = 0;
    for (const IndependenceCell& cell : result.cells) {
      if (cell.family == family && cell.falsified) {
        ++falsified;
        EXPECT_EQ(cell.condition, ExpectedFalsifiedCondition(family));
      }
    }
    EXPECT_EQ(falsified, 1) << FamilyName(family);
  }
  EXPECT_TRUE(result.passed());
}

TEST(IndependenceSuiteTest, KnownWitnessesReproduceExactly) {
  const IndependenceResult result = RunIndependenceSuite({});
  ASSERT_EQ(result.witnesses.size(), 3u);
  const double expected[3][2] = {{1.0, 0.0}, {4.0, 2.0}, {1.0, 0.5}};
  for (int i = 0; i < 3; ++i) {
    const WitnessCheck& w = result.witnesses[i];
    EXPECT_TRUE(w.exact);
    EXPECT_EQ(w.replayed.lhs, expected[i][0]);
    EXPECT_EQ(w.replayed.rhs, expected[i][1]);
  }
}

TEST(IndependenceSuiteTest, VerdictsAreSeedStable) {
  IndependenceOptions a, b;
  a.seed = 1;
  b.seed = 2;
  EXPECT_EQ(Verdicts(RunIndependenceSuite(a)), Verdicts(RunIndependenceSuite(b)));
}

TEST(IndependenceSuiteTest, PaperWitnessesOnly) {
  IndependenceOptions options;
  options.fixed_witnesses_only = true;
  const IndependenceResult a = RunIndependenceSuite(options);
  options.seed = 99;
  const IndependenceResult b = RunIndependenceSuite(options);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(FormatIndependenceMatrix(a), FormatIndependenceMatrix(b));
  EXPECT_EQ(Verdicts(a), Verdicts(RunIndependenceSuite({})));
}

TEST(IndependenceSuiteTest, DeviationIsNamed) {
  IndependenceOptions options;
  options.check.falsify_threshold = 1e9;  // nothing can falsify
  const IndependenceResult result = RunIndependenceSuite(options);
  EXPECT_FALSE(result.passed());
  const std::string text = FormatIndependenceMatrix(result);
  EXPECT_THAT(text, HasSubstr("deviation: weighted-mean / zero-on-basis"));
  EXPECT_THAT(text, HasSubstr("result: FAIL"));
}

TEST(IndependenceSuiteTest, MatrixText) {
  const std::string text = FormatIndependenceMatrix(RunIndependenceSuite({}));
  EXPECT_THAT(text, HasSubstr("weighted-mean"));
  EXPECT_THAT(text, HasSubstr("witness vstar-patch linearity-in-capacity: 1 vs 0.5"));
  EXPECT_THAT(text, HasSubstr("result: PASS"));
}

}  // namespace
}  // namespace choquet
