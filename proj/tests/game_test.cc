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

#include "scig/game.h"

#include <random>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "reference_oracle.h"
#include "scig/errors.h"

namespace scig {
namespace {

using ::scig::fixtures::Hiring;
constexpr Variant kDet = Variant::kDeterministic;
constexpr Variant kNon = Variant::kNonDeterministic;

GameParams Params(std::int64_t ap, std::int64_t aq, std::int64_t bp = 1,
                  std::int64_t bq = 1) {
  return GameParams(Rational(ap, aq), Rational(bp, bq));
}

JointStrategy Profile(int n, std::vector<ElementSet> s) {
  return JointStrategy(Universe(n), std::move(s));
}

const ElementSet kE1 = ElementSet::Of({0});
const ElementSet kE2 = ElementSet::Of({1});
const ElementSet kU2 = ElementSet::Full(2);

TEST(VariantTest, Parse) {
  EXPECT_EQ(ParseVariant("d"), kDet);
  EXPECT_EQ(ParseVariant("n"), kNon);
  EXPECT_EQ(ParseVariant("non-deterministic"), kNon);
  EXPECT_THROW(ParseVariant("x"), ParseError);
  EXPECT_EQ(VariantCode(kNon), "n");
}

TEST(UtilityTest, Examples) {
  // 1 * 1/3 - 1/4 * 1
  EXPECT_EQ(Utility(Hiring(), Params(1, 4), 2, kNon), Rational(1, 12));
  // agent 4 is outside the deterministic cover (1, 2) and pays for e1
  EXPECT_EQ(Utility(Hiring(), Params(1, 4), 3, kDet), Rational(-1, 4));
  EXPECT_EQ(Utility(Hiring(), Params(1, 4), 0, kDet), Rational(1, 2));

  const JointStrategy with_empty = Hiring().WithStrategy(1, ElementSet());
  for (Variant v : {kDet, kNon}) {
    EXPECT_EQ(Utility(with_empty, Params(3, 7), 1, v), Rational(0));
  }
  EXPECT_THROW(Utility(Hiring(), Params(1, 4), 4, kDet), std::out_of_range);
  Limits tight;
  tight.permutation_cap = 3;
  EXPECT_THROW(Utility(Hiring(), Params(1, 4), 0, kNon, tight), CapExceededError);
  EXPECT_NO_THROW(Utility(Hiring(), Params(1, 4), 0, kDet, tight));
}

TEST(UtilityPropertyTest, MatchesReferenceOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 4);
    const JointStrategy j = fixtures::RandomProfile(rng, n, m);
    const GameParams p = Params(1 + rng() % 5, 1 + rng() % 5, 1 + rng() % 3, 1 + rng() % 3);
    const int agent = static_cast<int>(rng() % m);
    for (Variant v : {kDet, kNon}) {
      EXPECT_EQ(Utility(j, p, agent, v),
                oracle::Utility(oracle::ToSets(j), agent, p.alpha(), p.beta(),
                                v == kDet));
    }
  }
}

TEST(UtilityPropertyTest, SingleAgentVariantsAgree) {
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    const JointStrategy j = Profile(4, {ElementSet(bits)});
    EXPECT_EQ(Utility(j, Params(2, 7), 0, kDet), Utility(j, Params(2, 7), 0, kNon));
  }
}

TEST(BestResponsesTest, FullSetAgainstFullSet) {
  // Singletons are never picked against a full set; {e1,e2} wins half the
  // time for 1/2 - 2/5.
  const BestResponseSet br =
      BestResponses(Profile(2, {ElementSet(), kU2}), Params(1, 5), 0, kNon);
  EXPECT_EQ(br.strategies, (std::vector<ElementSet>{kU2}));
  EXPECT_EQ(br.utility, Rational(1, 10));
}

TEST(BestResponsesTest, EmptyWhenCostExceedsBenefit) {
  for (Variant v : {kDet, kNon}) {
    const BestResponseSet br =
        BestResponses(fixtures::AllEmpty(3, 3), Params(3, 2), 1, v);
    EXPECT_EQ(br.strategies, (std::vector<ElementSet>{ElementSet()}));
    EXPECT_EQ(br.utility, Rational(0));
  }
}

TEST(BestResponsesTest, LaterAgentAvoidsTheHeldElement) {
  // Agent 1 holds {e1}; agent 2 loses the tie on e1, so {e2} is the unique
  // best response at 1 - 3/5.
  const BestResponseSet br =
      BestResponses(Profile(2, {kE1, ElementSet()}), Params(3, 5), 1, kDet);
  EXPECT_EQ(br.strategies, (std::vector<ElementSet>{kE2}));
  EXPECT_EQ(br.utility, Rational(2, 5));
}

TEST(BestResponsesTest, EarlierAgentWinsTiesSoBothSingletonsAreBest) {
  // Mirror image: agent 2 holds {e1}; agent 1 wins the e1 tie by scan order.
  const BestResponseSet br =
      BestResponses(Profile(2, {ElementSet(), kE1}), Params(3, 5), 0, kDet);
  EXPECT_EQ(br.strategies, (std::vector<ElementSet>{kE1, kE2}));
  EXPECT_EQ(br.utility, Rational(2, 5));
}

TEST(CheckNashTest, AllEmptyWhenCostExceedsBenefit) {
  EXPECT_TRUE(CheckNash(fixtures::AllEmpty(2, 3), Params(2, 1), kDet).equilibrium());
}

TEST(CheckNashTest, TwoFullSetsAmongFive) {
  const JointStrategy j =
      Profile(2, {kU2, kU2, ElementSet(), ElementSet(), ElementSet()});
  EXPECT_TRUE(CheckNash(j, Params(1, 5), kNon).equilibrium());
  EXPECT_TRUE(oracle::IsNash(oracle::ToSets(j), 2, Rational(1, 5), Rational(1), false));
}

TEST(CheckNashTest, SingletonClashWitness) {
  const NashVerdict v = CheckNash(Profile(2, {kE1, kE1}), Params(3, 5), kDet);
  ASSERT_FALSE(v.equilibrium());
  EXPECT_EQ(v.witness->agent, 1);
  EXPECT_EQ(v.witness->from, kE1);
  EXPECT_EQ(v.witness->to, kE2);
  EXPECT_EQ(v.witness->utility_before, Rational(-3, 5));
  EXPECT_EQ(v.witness->utility_after, Rational(2, 5));
}

TEST(CheckNashPropertyTest, AgreesWithDoubleLoopOracle) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 4);
    const JointStrategy j = fixtures::RandomProfile(rng, n, m);
    const GameParams p = Params(1 + rng() % 6, 1 + rng() % 6, 1 + rng() % 2, 1);
    const Variant v = rng() % 2 ? kDet : kNon;
    const NashVerdict verdict = CheckNash(j, p, v);
    EXPECT_EQ(verdict.equilibrium(),
              oracle::IsNash(oracle::ToSets(j), n, p.alpha(), p.beta(), v == kDet));
    EXPECT_EQ(IsNash(j, p, v), verdict.equilibrium());
    if (!verdict.equilibrium()) {
      const auto& w = *verdict.witness;
      EXPECT_GT(w.utility_after, w.utility_before);
      EXPECT_EQ(w.utility_before, Utility(j, p, w.agent, v));
      EXPECT_EQ(w.utility_after, Utility(j.WithStrategy(w.agent, w.to), p, w.agent, v));
      for (int earlier = 0; earlier < w.agent; ++earlier) {
        EXPECT_EQ(BestResponses(j, p, earlier, v).utility, Utility(j, p, earlier, v));
      }
    }
  }
}

TEST(ProfileIndexTest, LexicographicOrder) {
  const Universe u(2);
  EXPECT_EQ(ProfileAt(u, 2, 0), Profile(2, {ElementSet(), ElementSet()}));
  EXPECT_EQ(ProfileAt(u, 2, 1), Profile(2, {ElementSet(), kE1}));
  EXPECT_EQ(ProfileAt(u, 2, 4), Profile(2, {kE1, ElementSet()}));
  EXPECT_EQ(ProfileAt(u, 2, 15), Profile(2, {kU2, kU2}));
  EXPECT_EQ(ProfileCount(2, 3), 64u);
  EXPECT_FALSE(ProfileCount(16, 4).has_value());
}

TEST(EnumerateNashTest, NoEquilibriumWithMoreAgentsThanElementsAndCheapElements) {
  EXPECT_TRUE(EnumerateNash(2, 3, Params(1, 4), kDet, false).empty());
}

TEST(EnumerateNashTest, DistinctSingletonsAtThreeFifths) {
  EXPECT_EQ(EnumerateNash(2, 2, Params(3, 5), kDet, false),
            (std::vector<JointStrategy>{Profile(2, {kE1, kE2}), Profile(2, {kE2, kE1})}));
  EXPECT_EQ(EnumerateNash(2, 2, Params(3, 5), kDet, true),
            (std::vector<JointStrategy>{Profile(2, {kE1, kE2})}));
}

TEST(EnumerateNashTest, SingleAgentStaysEmptyWhenCostly) {
  for (Variant v : {kDet, kNon}) {
    EXPECT_EQ(EnumerateNash(1, 1, Params(2, 1), v, false),
              (std::vector<JointStrategy>{Profile(1, {ElementSet()})}));
  }
}

TEST(EnumerateNashTest, BudgetAndCapErrors) {
  Limits small;
  small.profile_budget = 63;
  try {
    EnumerateNash(2, 3, Params(1, 4), kDet, false, small);
    FAIL() << "expected BudgetExceededError";
  } catch (const BudgetExceededError& e) {
    EXPECT_EQ(e.required().substr(0, 2), "64");
  }
  Limits cap;
  cap.permutation_cap = 2;
  EXPECT_THROW(EnumerateNash(1, 3, Params(1, 4), kNon, false, cap), CapExceededError);
}

TEST(EnumerateNashPropertyTest, MatchesExhaustiveIsNash) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 3);
    const GameParams p = Params(1 + rng() % 6, 1 + rng() % 6);
    const Variant v = trial % 2 ? kDet : kNon;
    const auto found = EnumerateNash(n, m, p, v, false);
    std::set<JointStrategy> in(found.begin(), found.end());
    const std::uint64_t total = *ProfileCount(n, m);
    for (std::uint64_t i = 0; i < total; ++i) {
      const JointStrategy j = ProfileAt(Universe(n), m, i);
      EXPECT_EQ(in.count(j) > 0,
                oracle::IsNash(oracle::ToSets(j), n, p.alpha(), p.beta(), v == kDet));
    }
  }
}

TEST(EnumerateNashPropertyTest, ScaleInvariance) {
  for (Variant v : {kDet, kNon}) {
    for (const auto& p : {Params(1, 5), Params(3, 5), Params(1, 2), Params(1, 1)}) {
      const auto base = EnumerateNash(2, 3, p, v, false);
      EXPECT_EQ(EnumerateNash(2, 3, p.Scaled(Rational(7, 3)), v, false), base);
      const JointStrategy j = Profile(2, {kE1, kU2, kE2});
      EXPECT_EQ(Utility(j, p.Scaled(Rational(7, 3)), 1, v),
                Utility(j, p, 1, v) * Rational(7, 3));
    }
  }
}

TEST(EnumerateNashPropertyTest, ThreadCountDoesNotChangeOutput) {
  Limits parallel;
  parallel.threads = 3;
  EXPECT_EQ(EnumerateNash(2, 4, Params(1, 5), kNon, false, parallel),
            EnumerateNash(2, 4, Params(1, 5), kNon, false));
  EXPECT_EQ(EnumerateNash(3, 3, Params(3, 5), kDet, true, parallel),
            EnumerateNash(3, 3, Params(3, 5), kDet, true));
}

TEST(EnumerateNashPropertyTest, DedupKeepsOneCanonicalPerOrbit) {
  const auto all = EnumerateNash(2, 4, Params(1, 5), kNon, false);
  const auto dedup = EnumerateNash(2, 4, Params(1, 5), kNon, true);
  EXPECT_EQ(all.size(), 6u);
  ASSERT_EQ(dedup.size(), 1u);
  EXPECT_EQ(dedup[0], Profile(2, {ElementSet(), ElementSet(), kU2, kU2}));
  EXPECT_EQ(CanonicalForm(dedup[0]), dedup[0]);
}

TEST(EnumerateNashPropertyTest, DeterministicEquilibriaAreDisjointSingletons) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (const auto& p : {Params(5, 4), Params(3, 5), Params(1, 1), Params(1, 2),
                            Params(1, 4)}) {
        for (const auto& j : EnumerateNash(n, m, p, kDet, false)) {
          ElementSet seen;
          for (ElementSet s : j.strategies()) {
            EXPECT_LE(s.size(), 1);
            EXPECT_FALSE(s.Intersects(seen));
            seen = seen | s;
          }
        }
      }
    }
  }
}

TEST(EnumerateNashPropertyTest, FullUniverseAgentsOnlyBesideFullOrEmpty) {
  for (int n = 1; n <= 2; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (const auto& p : {Params(1, 5), Params(1, 4), Params(1, 2), Params(3, 5)}) {
        const ElementSet full = ElementSet::Full(n);
        for (const auto& j : EnumerateNash(n, m, p, kNon, false)) {
          const auto s = j.strategies();
          if (std::find(s.begin(), s.end(), full) == s.end()) continue;
          for (ElementSet x : s) EXPECT_TRUE(x == full || x.empty());
        }
      }
    }
  }
}

}  // namespace
}  // namespace scig
