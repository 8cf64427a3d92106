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

#ifndef SCIG_CORE_H_
#define SCIG_CORE_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scig/rational.h"

namespace scig {

// Strategy-space enumeration is 2^n per agent; the universe is capped so a
// subset fits a machine word and enumeration stays tractable.
inline constexpr int kMaxElements = 16;
// Greedy selections are tracked as a 64-bit agent mask.
inline constexpr int kMaxAgents = 64;

// A subset of {0, ..., n-1}, stored as a bitmask. Validity against a
// particular universe is checked by JointStrategy. The total order is the
// integer order of the mask; it is the candidate order used everywhere a
// "first" strategy is reported.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static ElementSet Of(std::initializer_list<int> indices);
  static constexpr ElementSet Full(int n) {
    return ElementSet(n >= 32 ? ~0u : (1u << n) - 1u);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int index) const { return (bits_ >> index) & 1u; }
  constexpr bool IsSubsetOf(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Ascending member indices.
  std::vector<int> members() const;

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// The ground set {e1, ..., en}. Labels default to "e1".."en".
class Universe {
 public:
  Universe() = default;
  explicit Universe(int size);
  explicit Universe(std::vector<std::string> labels);

  int size() const { return size_; }
  const std::string& label(int index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_default_labels() const;
  std::optional<int> IndexOf(std::string_view label) const;
  ElementSet full() const { return ElementSet::Full(size_); }
  bool Admits(ElementSet s) const { return s.IsSubsetOf(full()); }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  int size_ = 0;
  std::vector<std::string> labels_;
};

// One strategy per agent; agent i is position i. Doubles as the set-cover
// instance the greedy algorithm runs on. Immutable.
class JointStrategy {
 public:
  JointStrategy(Universe universe, std::vector<ElementSet> strategies);

  const Universe& universe() const { return universe_; }
  int num_agents() const { return static_cast<int>(strategies_.size()); }
  ElementSet strategy(int agent) const { return strategies_.at(agent); }
  std::span<const ElementSet> strategies() const { return strategies_; }

  // (S_i', S_{-i}): this profile with `agent` switched to `replacement`.
  JointStrategy WithStrategy(int agent, ElementSet replacement) const;
  // Agent i of this profile becomes agent relabeling[i] of the result.
  JointStrategy Relabeled(std::span<const int> relabeling) const;

  friend bool operator==(const JointStrategy& a, const JointStrategy& b) {
    return a.universe_.size() == b.universe_.size() &&
           a.strategies_ == b.strategies_;
  }
  friend auto operator<=>(const JointStrategy& a, const JointStrategy& b) {
    return a.strategies_ <=> b.strategies_;
  }

 private:
  Universe universe_;
  std::vector<ElementSet> strategies_;
};

// U' = union of all agent strategies.
ElementSet EffectiveUniverse(const JointStrategy& joint);
ElementSet EffectiveUniverse(std::span<const ElementSet> strategies);

// Agents chosen by the greedy algorithm. GreedyCover fills `selected` in
// selection order; covers taken from a CoverDistribution are keyed by the
// set of agents and list them ascending.
struct Cover {
  std::vector<int> selected;

  bool Contains(int agent) const;
  std::uint64_t AgentMask() const;
  static Cover FromMask(std::uint64_t mask);

  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

// Per-element cost alpha and selection benefit beta, both strictly positive.
class GameParams {
 public:
  // Throws std::invalid_argument unless both are > 0.
  GameParams(Rational alpha, Rational beta);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

  // (c * alpha, c * beta) for c > 0.
  GameParams Scaled(const Rational& c) const;

 private:
  Rational alpha_;
  Rational beta_;
};

// Caps on the exhaustive computations. All of them are exposed as CLI flags.
struct Limits {
  // Largest m for which all m! permutations are enumerated.
  int permutation_cap = 9;
  // Largest (2^n)^m joint-strategy enumeration.
  std::uint64_t profile_budget = std::uint64_t{1} << 20;
  // Worker threads for partitioned enumerations; results do not depend on it.
  int threads = 1;
};

// Exact distribution of greedy covers over uniformly random permutations.
struct CoverDistribution {
  struct Entry {
    Cover cover;  // ascending agent indices
    Rational probability;
    std::uint64_t permutations = 0;  // permutations that produce this cover
  };
  std::vector<Entry> entries;  // ordered by cover
  std::uint64_t permutation_count = 0;
};

}  // namespace scig

#endif  // SCIG_CORE_H_
