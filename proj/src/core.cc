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

#include <algorithm>
#include <set>
#include <stdexcept>

#include "scig/errors.h"

namespace scig {

CapExceededError::CapExceededError(int agents, int cap)
    : Error("exact enumeration needs " + std::to_string(agents) +
            "! permutations but the permutation cap is m <= " +
            std::to_string(cap) + "; use sampling instead"),
      agents_(agents),
      cap_(cap) {}

BudgetExceededError::BudgetExceededError(std::string required,
                                         std::uint64_t budget)
    : Error("enumeration requires " +
            (required.empty() ? std::string("more than 2^64") : required) +
            " joint strategies, budget is " + std::to_string(budget)),
      required_(std::move(required)) {}

ElementSet ElementSet::Of(std::initializer_list<int> indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxElements) {
      throw std::invalid_argument("element index out of range");
    }
    bits |= 1u << i;
  }
  return ElementSet(bits);
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

Universe::Universe(int size) : size_(size) {
  if (size < 0 || size > kMaxElements) {
    throw std::invalid_argument("universe size must be in [0, " +
                                std::to_string(kMaxElements) + "]");
  }
  labels_.reserve(size);
  for (int i = 0; i < size; ++i) labels_.push_back("e" + std::to_string(i + 1));
}

Universe::Universe(std::vector<std::string> labels)
    : size_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  if (size_ > kMaxElements) {
    throw std::invalid_argument("universe size must be in [0, " +
                                std::to_string(kMaxElements) + "]");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate element label '" + l + "'");
    }
  }
}

bool Universe::has_default_labels() const { return *this == Universe(size_); }

std::optional<int> Universe::IndexOf(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

JointStrategy::JointStrategy(Universe universe,
                             std::vector<ElementSet> strategies)
    : universe_(std::move(universe)), strategies_(std::move(strategies)) {
  if (strategies_.empty()) {
    throw std::invalid_argument("a joint strategy needs at least one agent");
  }
  if (num_agents() > kMaxAgents) {
    throw std::invalid_argument("at most " + std::to_string(kMaxAgents) +
                                " agents are supported");
  }
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    if (!universe_.Admits(strategies_[i])) {
      throw std::invalid_argument("strategy of agent " + std::to_string(i + 1) +
                                  " is not a subset of the universe");
    }
  }
}

JointStrategy JointStrategy::WithStrategy(int agent,
                                          ElementSet replacement) const {
  std::vector<ElementSet> next = strategies_;
  next.at(agent) = replacement;
  return JointStrategy(universe_, std::move(next));
}

JointStrategy JointStrategy::Relabeled(std::span<const int> relabeling) const {
  if (relabeling.size() != strategies_.size()) {
    throw std::invalid_argument("relabeling size differs from agent count");
  }
  std::vector<ElementSet> next(strategies_.size());
  std::vector<bool> used(strategies_.size(), false);
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    const int target = relabeling[i];
    if (target < 0 || target >= num_agents() || used[target]) {
      throw std::invalid_argument("relabeling is not a bijection");
    }
    used[target] = true;
    next[target] = strategies_[i];
  }
  return JointStrategy(universe_, std::move(next));
}

ElementSet EffectiveUniverse(std::span<const ElementSet> strategies) {
  ElementSet u;
  for (ElementSet s : strategies) u = u | s;
  return u;
}

ElementSet EffectiveUniverse(const JointStrategy& joint) {
  return EffectiveUniverse(joint.strategies());
}

bool Cover::Contains(int agent) const {
  return std::find(selected.begin(), selected.end(), agent) != selected.end();
}

std::uint64_t Cover::AgentMask() const {
  std::uint64_t mask = 0;
  for (int a : selected) mask |= std::uint64_t{1} << a;
  return mask;
}

Cover Cover::FromMask(std::uint64_t mask) {
  Cover c;
  for (; mask != 0; mask &= mask - 1) {
    c.selected.push_back(std::countr_zero(mask));
  }
  return c;
}

GameParams::GameParams(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (!alpha_.is_positive()) throw std::invalid_argument("alpha must be > 0");
  if (!beta_.is_positive()) throw std::invalid_argument("beta must be > 0");
}

GameParams GameParams::Scaled(const Rational& c) const {
  return GameParams(alpha_ * c, beta_ * c);
}

}  // namespace scig
