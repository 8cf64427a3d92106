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

#ifndef SCIG_STOCHASTIC_H_
#define SCIG_STOCHASTIC_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "scig/core.h"
#include "scig/greedy.h"

namespace scig {

std::uint64_t Factorial(int m);

// Throws CapExceededError when m exceeds limits.permutation_cap.
void CheckPermutationCap(int m, const Limits& limits);

// Runs the greedy algorithm once for each of the m! permutations. Covers are
// keyed by their set of agents, so two permutations that select the same
// agents in different orders contribute to one entry.
CoverDistribution ComputeCoverDistribution(const JointStrategy& joint,
                                           const Limits& limits = {});

// Number of the m! permutations under which each agent is selected.
std::vector<std::uint64_t> SelectionCounts(std::span<const ElementSet> strategies,
                                           const Limits& limits = {});
// Same count for a single agent. No cap check; callers enforce it.
std::uint64_t SelectionCount(std::span<const ElementSet> strategies, int agent);

// Pr[agent i is in the cover] under a uniformly random permutation.
std::vector<Rational> SelectionProbabilities(const JointStrategy& joint,
                                             const Limits& limits = {});

// Draws a uniform integer in [0, bound) from `rng` by rejection: values
// below 2^64 mod bound are discarded, the rest are reduced mod bound.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound);

// Fisher-Yates on the identity: for i = m-1 down to 1, swap position i with
// position UniformBelow(rng, i + 1).
Permutation ShuffledPermutation(int m, std::mt19937_64& rng);

// One greedy cover under a permutation drawn from mt19937_64(seed).
Cover SampleCover(const JointStrategy& joint, std::uint64_t seed);

struct SelectionEstimate {
  std::vector<double> estimates;        // empirical selection frequency
  std::vector<double> standard_errors;  // sqrt(p(1-p)/samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Draws `samples` permutations from a single mt19937_64(seed) stream, each
// shuffled from the identity. Throws std::invalid_argument if samples == 0.
SelectionEstimate MonteCarloProbabilities(const JointStrategy& joint,
                                          std::uint64_t samples,
                                          std::uint64_t seed);

}  // namespace scig

#endif  // SCIG_STOCHASTIC_H_
