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

#include "choquet/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "choquet/io.h"
#include "choquet/set_function.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace choquet::cli {
namespace {

using ::testing::HasSubstr;
using ::testing::IsEmpty;
using ::testing::StartsWith;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Call(std::vector<std::string> args) {
  args.insert(args.begin(), "choquet");
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(::testing::TempDir()) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    std::filesystem::create_directories(dir_);
  }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::string Read(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  std::string V13() { return Write("v13.json", R"({"n": 3, "by_subset": {"1,3": 1, "1,2,3": 1}})"); }
  std::string Game2() { return Write("game2.json", R"({"n": 2, "by_mask": [0, 3, -1, 2]})"); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, EvalExamples) {
  Outcome r = Call({"eval", "--capacity", V13(), "--point", "4,0,2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, StartsWith("2\npermutation: "));
  EXPECT_THAT(r.err, IsEmpty());

  r = Call({"eval", "--capacity", V13(), "--point", "0,0,0"});
  EXPECT_THAT(r.out, StartsWith("0\n"));

  r = Call({"eval", "--capacity", Game2(), "--point", "5,1"});
  EXPECT_EQ(r.out, "14\npermutation: 2,1\n");

  r = Call({"eval", "--capacity", Game2(), "--point", "5,1", "--format", "json"});
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["value"], 14.0);
  EXPECT_EQ(doc["permutation"], Json::array({2, 1}));
}

TEST_F(CliTest, EvalErrors) {
  Outcome r = Call({"eval", "--capacity", Write("bad.json", "{"), "--point", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_THAT(r.out, IsEmpty());
  EXPECT_THAT(r.err, HasSubstr("malformed"));

  r = Call({"eval", "--capacity", Game2(), "--point", "1,2,3"});
  EXPECT_EQ(r.code, kExitDimension);
  EXPECT_THAT(r.out, IsEmpty());
  EXPECT_THAT(r.err, HasSubstr("--point"));

  const std::string offset = Write("offset.json", R"({"n": 2, "by_mask": [1, 3, -1, 2]})");
  r = Call({"eval", "--capacity", offset, "--point", "0,1"});
  EXPECT_EQ(r.code, kExitNotAGame);
  EXPECT_THAT(r.out, IsEmpty());
  EXPECT_THAT(r.err, Not(IsEmpty()));

  r = Call({"eval", "--capacity", offset, "--point", "0,1", "--lovasz"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, StartsWith("-1\n"));

  r = Call({"eval", "--capacity", Game2(), "--point", "1,x"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_THAT(r.err, HasSubstr("--point"));

  r = Call({"eval", "--capacity", (dir_ / "missing.json").string(), "--point", "1"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(CliTest, MobiusExamples) {
  Outcome r = Call({"mobius", "--capacity", V13()});
  ASSERT_EQ(r.code, kExitOk);
  Json doc = Json::parse(r.out);
  for (const auto& [key, value] : doc["by_subset"].items()) {
    EXPECT_EQ(value.get<double>(), key == "1,3" ? 1.0 : 0.0) << key;
  }

  r = Call({"mobius", "--capacity", Game2()});
  doc = Json::parse(r.out);
  EXPECT_EQ(doc["by_subset"]["1"], 3.0);
  EXPECT_EQ(doc["by_subset"]["2"], -1.0);
  EXPECT_EQ(doc["by_subset"]["1,2"], 0.0);
}

TEST_F(CliTest, MobiusRoundTripIsByteIdentical) {
  const std::string input = Write(
      "g.json", WriteSetFunction(SetFunction(3, {0, 3, -1, 2, 7, -4, 5, 11})));
  const std::string m = (dir_ / "m.json").string();
  const std::string back = (dir_ / "back.json").string();
  ASSERT_EQ(Call({"mobius", "--capacity", input, "--output", m}).code, kExitOk);
  ASSERT_EQ(Call({"mobius", "--capacity", m, "--invert", "--output", back}).code,
            kExitOk);
  EXPECT_EQ(Read(back), Read(input));
}

TEST_F(CliTest, CheckExitCodes) {
  const std::string v = Write("v.json", WriteSetFunction(SetFunction(
                                            3, {0, 0.3, -0.2, 0.5, 0.1, -0.4, 0.7, 0.9})));
  Outcome r = Call({"check", "--capacity", v, "--axiom", "comonotonic-additivity"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("satisfied-on-samples"));

  r = Call({"check", "--n", "2", "--family", "multilinear", "--axiom",
            "interval-scale", "--format", "json"});
  EXPECT_EQ(r.code, kExitFalsified);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "falsified");
  EXPECT_EQ(doc["witness"]["inputs"]["x"], Json::array({1.0, 1.0}));
  EXPECT_EQ(doc["witness"]["inputs"]["r"], 1.0);
  EXPECT_EQ(doc["witness"]["inputs"]["s"], 1.0);
  EXPECT_EQ(doc["witness"]["lhs"], 4.0);
  EXPECT_EQ(doc["witness"]["rhs"], 2.0);

  r = Call({"check", "--capacity", v, "--axiom", "no-such-axiom"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_THAT(r.out, IsEmpty());

  r = Call({"check", "--n", "4", "--family", "vstar-patch", "--axiom",
            "linearity-in-capacity"});
  EXPECT_EQ(r.code, kExitDimension);
}

TEST_F(CliTest, CheckIsDeterministic) {
  const std::string v = Write("v.json", R"({"n": 2, "by_mask": [0, 0.5, -0.25, 2]})");
  const std::vector<std::string> args = {"check",    "--capacity", v,
                                         "--axiom",  "comonotonic-affinity",
                                         "--trials", "1",
                                         "--seed",   "17",
                                         "--format", "json"};
  const Outcome a = Call(args);
  const Outcome b = Call(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, IndependenceSuite) {
  Outcome r = Call({"independence-suite"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_THAT(r.out, HasSubstr("result: PASS"));

  auto verdicts = [](const std::string& text) {
    std::vector<std::string> v;
    for (const Json& cell : Json::parse(text)["cells"]) v.push_back(cell["verdict"]);
    return v;
  };
  const Outcome s1 = Call({"independence-suite", "--seed", "1", "--trials", "200",
                           "--format", "json"});
  const Outcome s2 = Call({"independence-suite", "--seed", "2", "--trials", "200",
                           "--format", "json"});
  EXPECT_EQ(verdicts(s1.out), verdicts(s2.out));

  r = Call({"independence-suite", "--paper-witnesses-only", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Json::parse(r.out)["passed"].get<bool>());
}

TEST_F(CliTest, RandomCapacity) {
  Outcome r = Call({"random-capacity", "--n", "3", "--kind", "monotone", "--seed", "5"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NO_THROW(ValidateCapacity(ValidateSignedCapacity(ParseSetFunction(r.out))));
  EXPECT_EQ(Call({"random-capacity", "--n", "3", "--kind", "monotone", "--seed", "5"}).out,
            r.out);

  r = Call({"random-capacity", "--n", "6", "--kind", "normalized-monotone"});
  const SetFunction f = ParseSetFunction(r.out);
  EXPECT_EQ(f[FullMask(6)], 1.0);
  EXPECT_NO_THROW(ValidateCapacity(ValidateSignedCapacity(f)));

  r = Call({"random-capacity", "--n", "4", "--kind", "signed"});
  EXPECT_NO_THROW(ValidateSignedCapacity(ParseSetFunction(r.out)));

  EXPECT_EQ(Call({"random-capacity", "--n", "3", "--kind", "weird"}).code, kExitUsage);
  EXPECT_EQ(Call({"random-capacity", "--n", "0", "--kind", "signed"}).code, kExitUsage);
  EXPECT_EQ(Call({"random-capacity", "--n", "21", "--kind", "signed"}).code, kExitUsage);
}

TEST_F(CliTest, OracleCommand) {
  const Outcome r = Call({"oracle", "--capacity", Game2(), "--point", "5,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["mobius_naive"]["by_subset"]["1"], 3.0);
  EXPECT_EQ(doc["choquet_all_permutations"], Json::array({14.0}));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({}).code, kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Call({"eval", "--point", "1"}).code, kExitUsage);
  EXPECT_EQ(Call({"check", "--n", "2", "--axiom", "interval-scale", "--trials", "0"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace choquet::cli
