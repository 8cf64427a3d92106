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

#ifndef SCIG_GREEDY_H_
#define SCIG_GREEDY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "scig/core.h"

namespace scig {

// A bijection on {0, ..., m-1}: the order in which the greedy scan visits
// the agents.
class Permutation {
 public:
  // Throws InvalidPermutationError unless `order` is a bijection.
  explicit Permutation(std::vector<int> order);
  static Permutation Identity(int m);
  // Parses 1-based agent numbers, e.g. {3, 4, 2, 1}.
  static Permutation FromOneBased(std::span<const int> order);

  int size() const { return static_cast<int>(order_.size()); }
  int operator[](int position) const { return order_[position]; }
  std::span<const int> order() const { return order_; }

 private:
  std::vector<int> order_;
};

// The greedy set-cover algorithm. While elements of U' remain uncovered it
// scans agents in `order`; the candidate starts as order[0] and is replaced
// only by an agent covering strictly more uncovered elements, so ties go to
// the earliest agent in the scan. Selected agents stay in the scan and can
// never win again.
//
// This is the allocation-free core used by every enumeration loop. Returns
// the selected agents as a mask; `selection_order`, when non-null, receives
// them in the order they were picked.
std::uint64_t GreedySelect(std::span<const ElementSet> strategies,
                           std::span<const int> order,
                           std::vector<int>* selection_order = nullptr);

// Throws InvalidPermutationError if `pi` does not have one entry per agent.
Cover GreedyCover(const JointStrategy& joint, const Permutation& pi);

// GreedyCover under the identity permutation.
Cover DeterministicCover(const JointStrategy& joint);

inline constexpr int kMaxOptimalCoverAgents = 24;

// Every minimum-cardinality set of agents whose strategies cover U',
// by exhaustive search over agent subsets. Each cover is ascending; the list
// is in lexicographic order. Throws CapExceededError above
// kMaxOptimalCoverAgents agents.
std::vector<std::vector<int>> OptimalCovers(const JointStrategy& joint);

}  // namespace scig

#endif  // SCIG_GREEDY_H_
