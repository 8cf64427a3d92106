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

#include "scig/core.h"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "fixtures.h"

namespace scig {
namespace {

TEST(ElementSetTest, Basics) {
  const ElementSet s = ElementSet::Of({0, 2});
  EXPECT_EQ(s.bits(), 0b101u);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.members(), (std::vector<int>{0, 2}));
  EXPECT_EQ((s | ElementSet::Of({1})), ElementSet::Full(3));
  EXPECT_EQ((s - ElementSet::Of({0})), ElementSet::Of({2}));
  EXPECT_TRUE(ElementSet().empty());
  EXPECT_THROW(ElementSet::Of({kMaxElements}), std::invalid_argument);
}

TEST(UniverseTest, DefaultLabels) {
  const Universe u(3);
  EXPECT_EQ(u.label(0), "e1");
  EXPECT_EQ(u.label(2), "e3");
  EXPECT_EQ(u.IndexOf("e2"), 1);
  EXPECT_FALSE(u.IndexOf("e4").has_value());
  EXPECT_TRUE(u.has_default_labels());
}

TEST(UniverseTest, RejectsBadSizesAndDuplicateLabels) {
  EXPECT_THROW(Universe(kMaxElements + 1), std::invalid_argument);
  EXPECT_THROW(Universe(-1), std::invalid_argument);
  EXPECT_THROW(Universe(std::vector<std::string>{"a", "b", "a"}),
               std::invalid_argument);
  EXPECT_NO_THROW(Universe(kMaxElements));
  EXPECT_EQ(Universe(0).size(), 0);
}

TEST(JointStrategyTest, Validation) {
  EXPECT_THROW(JointStrategy(Universe(2), {}), std::invalid_argument);
  EXPECT_THROW(JointStrategy(Universe(2), {ElementSet::Of({2})}),
               std::invalid_argument);
  EXPECT_THROW(JointStrategy(Universe(1), std::vector<ElementSet>(kMaxAgents + 1)),
               std::invalid_argument);
}

TEST(JointStrategyTest, WithStrategyAndRelabel) {
  const JointStrategy h = fixtures::Hiring();
  const JointStrategy d = h.WithStrategy(3, ElementSet());
  EXPECT_TRUE(d.strategy(3).empty());
  EXPECT_EQ(h.strategy(3), ElementSet::Of({0}));
  const std::vector<int> sigma = {3, 2, 1, 0};
  const JointStrategy r = h.Relabeled(sigma);
  EXPECT_EQ(r.strategy(3), h.strategy(0));
  EXPECT_EQ(r.strategy(0), h.strategy(3));
  EXPECT_THROW(h.Relabeled(std::vector<int>{0, 0, 1, 2}), std::invalid_argument);
}

TEST(EffectiveUniverseTest, Examples) {
  EXPECT_TRUE(EffectiveUniverse(fixtures::AllEmpty(3, 4)).empty());
  EXPECT_EQ(EffectiveUniverse(fixtures::Hiring()), ElementSet::Of({0, 1, 2}));
  EXPECT_EQ(EffectiveUniverse(JointStrategy(Universe(3), {ElementSet::Of({1})})),
            ElementSet::Of({1}));
}

TEST(EffectiveUniversePropertyTest, MonotoneUnderAddingElements) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int m = 1 + static_cast<int>(rng() % 6);
    const JointStrategy j = fixtures::RandomProfile(rng, n, m);
    const int agent = static_cast<int>(rng() % m);
    const int element = static_cast<int>(rng() % n);
    const JointStrategy grown =
        j.WithStrategy(agent, j.strategy(agent) | ElementSet::Of({element}));
    EXPECT_TRUE(EffectiveUniverse(j).IsSubsetOf(EffectiveUniverse(grown)));
  }
}

TEST(CoverTest, MaskRoundTrip) {
  const Cover c{{1, 3}};
  EXPECT_EQ(c.AgentMask(), 0b1010u);
  EXPECT_EQ(Cover::FromMask(0b1010u), c);
  EXPECT_TRUE(c.Contains(3));
  EXPECT_FALSE(c.Contains(0));
}

TEST(GameParamsTest, RequiresPositiveParameters) {
  EXPECT_THROW(GameParams(Rational(0), Rational(1)), std::invalid_argument);
  EXPECT_THROW(GameParams(Rational(1), Rational(-1, 2)), std::invalid_argument);
  const GameParams p(Rational(1, 4), Rational(1));
  const GameParams q = p.Scaled(Rational(3));
  EXPECT_EQ(q.alpha(), Rational(3, 4));
  EXPECT_EQ(q.beta(), Rational(3));
}

}  // namespace
}  // namespace scig
