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

#include "scig/greedy.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "scig/errors.h"

namespace scig {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (int a : order_) {
    if (a < 0 || a >= size()) {
      throw InvalidPermutationError("permutation entry " +
                                    std::to_string(a + 1) + " out of range 1.." +
                                    std::to_string(size()));
    }
    if (seen[a]) {
      throw InvalidPermutationError("permutation repeats agent " +
                                    std::to_string(a + 1));
    }
    seen[a] = true;
  }
}

Permutation Permutation::Identity(int m) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  return Permutation(std::move(order));
}

Permutation Permutation::FromOneBased(std::span<const int> order) {
  std::vector<int> zero_based;
  zero_based.reserve(order.size());
  for (int a : order) zero_based.push_back(a - 1);
  return Permutation(std::move(zero_based));
}

std::uint64_t GreedySelect(std::span<const ElementSet> strategies,
                           std::span<const int> order,
                           std::vector<int>* selection_order) {
  std::uint32_t uncovered = EffectiveUniverse(strategies).bits();
  std::uint64_t selected = 0;
  while (uncovered != 0) {
    int best = order[0];
    int best_count = std::popcount(strategies[best].bits() & uncovered);
    for (std::size_t i = 1; i < order.size(); ++i) {
      const int candidate = order[i];
      const int count = std::popcount(strategies[candidate].bits() & uncovered);
      if (best_count < count) {
        best = candidate;
        best_count = count;
      }
    }
    uncovered &= ~strategies[best].bits();
    selected |= std::uint64_t{1} << best;
    if (selection_order != nullptr) selection_order->push_back(best);
  }
  return selected;
}

Cover GreedyCover(const JointStrategy& joint, const Permutation& pi) {
  if (pi.size() != joint.num_agents()) {
    throw InvalidPermutationError(
        "permutation has " + std::to_string(pi.size()) + " entries but there are " +
        std::to_string(joint.num_agents()) + " agents");
  }
  Cover cover;
  GreedySelect(joint.strategies(), pi.order(), &cover.selected);
  return cover;
}

Cover DeterministicCover(const JointStrategy& joint) {
  return GreedyCover(joint, Permutation::Identity(joint.num_agents()));
}

std::vector<std::vector<int>> OptimalCovers(const JointStrategy& joint) {
  const int m = joint.num_agents();
  if (m > kMaxOptimalCoverAgents) {
    throw CapExceededError(m, kMaxOptimalCoverAgents);
  }
  const auto strategies = joint.strategies();
  const std::uint32_t target = EffectiveUniverse(joint).bits();
  int best = m + 1;
  std::vector<std::uint64_t> found;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    const int k = std::popcount(subset);
    if (k > best) continue;
    std::uint32_t covered = 0;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
      covered |= strategies[std::countr_zero(rest)].bits();
    }
    if (covered != target) continue;
    if (k < best) {
      best = k;
      found.clear();
    }
    found.push_back(subset);
  }
  std::vector<std::vector<int>> covers;
  covers.reserve(found.size());
  for (std::uint64_t mask : found) covers.push_back(Cover::FromMask(mask).selected);
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace scig
