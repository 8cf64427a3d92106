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

#include "scig/stochastic.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "scig/errors.h"
#include "scig/parallel.h"

namespace scig {
namespace {

// Visits the (m-1)! permutations whose first entry is `lead`, in
// lexicographic order of the remainder.
template <typename Visit>
void ForEachPermutationLedBy(int m, int lead, Visit&& visit) {
  std::vector<int> order(m);
  order[0] = lead;
  for (int i = 0, k = 1; i < m; ++i) {
    if (i != lead) order[k++] = i;
  }
  do {
    visit(std::span<const int>(order));
  } while (std::next_permutation(order.begin() + 1, order.end()));
}

}  // namespace

std::uint64_t Factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void CheckPermutationCap(int m, const Limits& limits) {
  if (m > limits.permutation_cap) {
    throw CapExceededError(m, limits.permutation_cap);
  }
}

CoverDistribution ComputeCoverDistribution(const JointStrategy& joint,
                                           const Limits& limits) {
  const int m = joint.num_agents();
  CheckPermutationCap(m, limits);
  const auto strategies = joint.strategies();

  std::vector<std::map<std::uint64_t, std::uint64_t>> tallies(m);
  ParallelFor(m, limits.threads, [&](std::size_t lead) {
    auto& tally = tallies[lead];
    ForEachPermutationLedBy(m, static_cast<int>(lead),
                            [&](std::span<const int> order) {
                              ++tally[GreedySelect(strategies, order)];
                            });
  });
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& tally : tallies) {
    for (const auto& [mask, count] : tally) merged[mask] += count;
  }

  CoverDistribution dist;
  dist.permutation_count = Factorial(m);
  for (const auto& [mask, count] : merged) {
    dist.entries.push_back(
        {Cover::FromMask(mask),
         Rational(Rational::Integer(count),
                  Rational::Integer(dist.permutation_count)),
         count});
  }
  std::sort(dist.entries.begin(), dist.entries.end(),
            [](const auto& a, const auto& b) { return a.cover < b.cover; });
  return dist;
}

std::vector<std::uint64_t> SelectionCounts(std::span<const ElementSet> strategies,
                                           const Limits& limits) {
  const int m = static_cast<int>(strategies.size());
  CheckPermutationCap(m, limits);
  std::vector<std::vector<std::uint64_t>> partial(
      m, std::vector<std::uint64_t>(m, 0));
  ParallelFor(m, limits.threads, [&](std::size_t lead) {
    auto& counts = partial[lead];
    ForEachPermutationLedBy(m, static_cast<int>(lead),
                            [&](std::span<const int> order) {
                              for (std::uint64_t sel = GreedySelect(strategies, order);
                                   sel != 0; sel &= sel - 1) {
                                ++counts[std::countr_zero(sel)];
                              }
                            });
  });
  std::vector<std::uint64_t> counts(m, 0);
  for (const auto& p : partial) {
    for (int i = 0; i < m; ++i) counts[i] += p[i];
  }
  return counts;
}

std::uint64_t SelectionCount(std::span<const ElementSet> strategies, int agent) {
  if (strategies[agent].empty()) return 0;
  const int m = static_cast<int>(strategies.size());
  const std::uint64_t bit = std::uint64_t{1} << agent;
  std::uint64_t count = 0;
  for (int lead = 0; lead < m; ++lead) {
    ForEachPermutationLedBy(m, lead, [&](std::span<const int> order) {
      if (GreedySelect(strategies, order) & bit) ++count;
    });
  }
  return count;
}

std::vector<Rational> SelectionProbabilities(const JointStrategy& joint,
                                             const Limits& limits) {
  const auto counts = SelectionCounts(joint.strategies(), limits);
  const Rational::Integer total(Factorial(joint.num_agents()));
  std::vector<Rational> probs;
  probs.reserve(counts.size());
  for (std::uint64_t c : counts) {
    probs.emplace_back(Rational::Integer(c), total);
  }
  return probs;
}

std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

Permutation ShuffledPermutation(int m, std::mt19937_64& rng) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (int i = m - 1; i >= 1; --i) {
    const auto j = UniformBelow(rng, static_cast<std::uint64_t>(i) + 1);
    std::swap(order[i], order[j]);
  }
  return Permutation(std::move(order));
}

Cover SampleCover(const JointStrategy& joint, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return GreedyCover(joint, ShuffledPermutation(joint.num_agents(), rng));
}

SelectionEstimate MonteCarloProbabilities(const JointStrategy& joint,
                                          std::uint64_t samples,
                                          std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  const int m = joint.num_agents();
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> hits(m, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Permutation pi = ShuffledPermutation(m, rng);
    for (std::uint64_t sel = GreedySelect(joint.strategies(), pi.order());
         sel != 0; sel &= sel - 1) {
      ++hits[std::countr_zero(sel)];
    }
  }
  SelectionEstimate out;
  out.samples = samples;
  out.seed = seed;
  const auto n = static_cast<double>(samples);
  for (int i = 0; i < m; ++i) {
    const double p = static_cast<double>(hits[i]) / n;
    out.estimates.push_back(p);
    out.standard_errors.push_back(std::sqrt(p * (1.0 - p) / n));
  }
  return out;
}

}  // namespace scig
