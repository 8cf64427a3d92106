// Copyright 2026 The SCIG Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scig/instance.h"

#include <random>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "scig/errors.h"

namespace scig {
namespace {

std::string ParseErrorMessage(std::string_view text) {
  try {
    ParseInstanceText(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceTest, ParsesIndicesAndLabels) {
  const Instance a = ParseInstanceText(
      R"({"universe": 3, "strategies": [[0, 1], [1, 2], [2], [0]],
          "alpha": "1/4", "beta": "1"})");
  EXPECT_EQ(a.joint, fixtures::Hiring());
  EXPECT_EQ(*a.alpha, Rational(1, 4));
  EXPECT_EQ(*a.beta, Rational(1));

  const Instance b = ParseInstanceText(
      R"({"universe": 3, "strategies": [["e1", "e2"], ["e2", "e3"], ["e3"], ["e1"]]})");
  EXPECT_EQ(b.joint, fixtures::Hiring());
  EXPECT_FALSE(b.alpha.has_value());

  const Instance c = ParseInstanceText(
      R"({"universe": ["python", "sql"], "strategies": [["sql"], [0, "sql"]]})");
  EXPECT_EQ(c.joint.strategy(0), ElementSet::Of({1}));
  EXPECT_EQ(c.joint.strategy(1), ElementSet::Of({0, 1}));
}

TEST(InstanceTest, DiagnosticsNameTheField) {
  EXPECT_NE(ParseErrorMessage(R"({"universe": 3, "strategies": [[0], [5]]})")
                .find("strategies[1][0]"),
            std::string::npos);
  EXPECT_NE(ParseErrorMessage(R"({"universe": 2, "strategies": [["x"]]})")
                .find("unknown element 'x'"),
            std::string::npos);
  EXPECT_NE(ParseErrorMessage(R"({"universe": 17, "strategies": [[]]})")
                .find("universe"),
            std::string::npos);
  EXPECT_NE(ParseErrorMessage(R"({"strategies": [[]]})").find("universe"),
            std::string::npos);
  EXPECT_NE(ParseErrorMessage(R"({"universe": 1, "strategies": []})")
                .find("strategies"),
            std::string::npos);
  EXPECT_NE(ParseErrorMessage(
                R"({"universe": 1, "strategies": [[]], "alpha": "0"})")
                .find("alpha"),
            std::string::npos);
  EXPECT_NE(ParseErrorMessage(
                R"({"universe": 1, "strategies": [[]], "beta": "x/2"})")
                .find("beta"),
            std::string::npos);
  EXPECT_NE(ParseErrorMessage("{not json").find("invalid JSON"),
            std::string::npos);
  EXPECT_NE(ParseErrorMessage(R"({"universe": ["a", "a"], "strategies": [[]]})")
                .find("duplicate"),
            std::string::npos);
}

TEST(InstancePropertyTest, SerializedProfilesParseBack) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    const int m = 1 + static_cast<int>(rng() % 6);
    const JointStrategy j = fixtures::RandomProfile(rng, n, m);
    EXPECT_EQ(ParseInstance(JointStrategyToJson(j)).joint, j);
  }
  const JointStrategy labeled(Universe(std::vector<std::string>{"go", "rust"}),
                              {ElementSet::Of({1}), ElementSet::Of({0, 1})});
  const auto doc = JointStrategyToJson(labeled);
  EXPECT_TRUE(doc["universe"].is_array());
  const JointStrategy back = ParseInstance(doc).joint;
  EXPECT_EQ(back, labeled);
  EXPECT_EQ(back.universe().labels(), labeled.universe().labels());
}

}  // namespace
}  // namespace scig
