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

#ifndef SCIG_GAME_H_
#define SCIG_GAME_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "scig/core.h"

namespace scig {

// Which greedy algorithm resolves outcomes: the identity scan (G_d) or a
// uniformly random scan (G_n).
enum class Variant { kDeterministic, kNonDeterministic };

// "d" or "n".
std::string_view VariantCode(Variant v);
// Accepts d, n, deterministic, nondeterministic, non-deterministic.
// Throws ParseError otherwise.
Variant ParseVariant(std::string_view text);

// beta * Pr[agent selected] - alpha * |S_agent|. The deterministic variant
// uses the indicator of membership in DeterministicCover. Throws
// CapExceededError for the non-deterministic variant above the permutation
// cap.
Rational Utility(const JointStrategy& joint, const GameParams& params,
                 int agent, Variant variant, const Limits& limits = {});

struct BestResponseSet {
  std::vector<ElementSet> strategies;  // every maximizer, ascending
  Rational utility;
};

// Scans all 2^n strategies for `agent` with the other agents held fixed.
// The agent's own entry in `joint` is ignored.
BestResponseSet BestResponses(const JointStrategy& joint,
                              const GameParams& params, int agent,
                              Variant variant, const Limits& limits = {});

struct DeviationWitness {
  int agent = 0;
  ElementSet from;
  ElementSet to;
  Rational utility_before;
  Rational utility_after;
};

struct NashVerdict {
  std::optional<DeviationWitness> witness;
  bool equilibrium() const { return !witness.has_value(); }
};

// Equilibrium iff no agent has a strictly better strategy. Otherwise the
// witness names the lowest agent that can improve, deviating to its first
// best response in ElementSet order.
NashVerdict CheckNash(const JointStrategy& joint, const GameParams& params,
                      Variant variant, const Limits& limits = {});
bool IsNash(const JointStrategy& joint, const GameParams& params,
            Variant variant, const Limits& limits = {});

// (2^n)^m, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> ProfileCount(int n, int m);
// Returns (2^n)^m; throws BudgetExceededError above limits.profile_budget.
std::uint64_t CheckProfileBudget(int n, int m, const Limits& limits);

// The index-th joint strategy in lexicographic order: agent 1 is the most
// significant digit and each digit is a strategy in ElementSet order.
JointStrategy ProfileAt(const Universe& universe, int m, std::uint64_t index);

// Least member of the agent-relabeling orbit: the strategies sorted.
JointStrategy CanonicalForm(const JointStrategy& joint);

// All pure equilibria over n elements and m agents, in lexicographic order.
// With `dedup`, keeps only the first equilibrium found in each relabeling
// orbit; that is the orbit's canonical form whenever the orbit lies wholly
// inside the equilibrium set.
std::vector<JointStrategy> EnumerateNash(int n, int m, const GameParams& params,
                                         Variant variant, bool dedup,
                                         const Limits& limits = {});

}  // namespace scig

#endif  // SCIG_GAME_H_
