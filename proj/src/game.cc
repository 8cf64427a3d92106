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

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "scig/errors.h"
#include "scig/greedy.h"
#include "scig/parallel.h"
#include "scig/stochastic.h"

namespace scig {
namespace {

using Integer = Rational::Integer;

// Utilities scaled by the positive constant D * den(alpha) * den(beta),
// where D is the number of equally likely scan orders. Scaled values are
// integers, so comparisons stay exact without normalizing fractions.
class UtilityEvaluator {
 public:
  UtilityEvaluator(const GameParams& params, Variant variant, int m)
      : variant_(variant),
        identity_(m),
        orders_(variant == Variant::kDeterministic ? 1 : Factorial(m)) {
    std::iota(identity_.begin(), identity_.end(), 0);
    const Integer ap = params.alpha().numerator();
    const Integer aq = params.alpha().denominator();
    const Integer bp = params.beta().numerator();
    const Integer bq = params.beta().denominator();
    benefit_ = bp * aq;
    cost_ = ap * bq * Integer(orders_);
    scale_ = aq * bq * Integer(orders_);
  }

  std::uint64_t Selection(std::span<const ElementSet> strategies,
                          int agent) const {
    if (variant_ == Variant::kDeterministic) {
      return (GreedySelect(strategies, identity_) >> agent) & 1u;
    }
    return SelectionCount(strategies, agent);
  }

  Integer Scaled(std::span<const ElementSet> strategies, int agent) const {
    return benefit_ * Selection(strategies, agent) -
           cost_ * strategies[agent].size();
  }

  Rational ToRational(const Integer& scaled) const {
    return Rational(scaled, scale_);
  }

 private:
  Variant variant_;
  std::vector<int> identity_;
  std::uint64_t orders_;
  Integer benefit_;
  Integer cost_;
  Integer scale_;
};

void CheckAgent(const JointStrategy& joint, int agent) {
  if (agent < 0 || agent >= joint.num_agents()) {
    throw std::out_of_range("agent " + std::to_string(agent + 1) +
                            " out of range");
  }
}

void CheckVariantCaps(int m, Variant variant, const Limits& limits) {
  if (variant == Variant::kNonDeterministic) CheckPermutationCap(m, limits);
}

// Best scaled utility for `agent` and the first strategy attaining it.
// `strategies` is scratch: the agent's entry is overwritten and restored.
struct ScanResult {
  Integer best;
  ElementSet first_best;
};

ScanResult ScanDeviations(std::vector<ElementSet>& strategies, int agent,
                          int n, const UtilityEvaluator& eval) {
  const ElementSet saved = strategies[agent];
  ScanResult out;
  bool have = false;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    strategies[agent] = ElementSet(bits);
    Integer u = eval.Scaled(strategies, agent);
    if (!have || u > out.best) {
      out.best = std::move(u);
      out.first_best = ElementSet(bits);
      have = true;
    }
  }
  strategies[agent] = saved;
  return out;
}

// Early-exit equilibrium test on raw strategies.
bool IsNashRaw(std::vector<ElementSet>& strategies, int n,
               const UtilityEvaluator& eval) {
  const int m = static_cast<int>(strategies.size());
  for (int agent = 0; agent < m; ++agent) {
    const ElementSet saved = strategies[agent];
    const Integer current = eval.Scaled(strategies, agent);
    bool improves = false;
    for (std::uint32_t bits = 0; bits < (1u << n) && !improves; ++bits) {
      if (bits == saved.bits()) continue;
      strategies[agent] = ElementSet(bits);
      improves = eval.Scaled(strategies, agent) > current;
    }
    strategies[agent] = saved;
    if (improves) return false;
  }
  return true;
}

void FillProfile(int n, std::uint64_t index, std::vector<ElementSet>& out) {
  const std::uint64_t radix_mask = (std::uint64_t{1} << n) - 1;
  for (int agent = static_cast<int>(out.size()) - 1; agent >= 0; --agent) {
    out[agent] = ElementSet(static_cast<std::uint32_t>(index & radix_mask));
    index >>= n;
  }
}

}  // namespace

std::string_view VariantCode(Variant v) {
  return v == Variant::kDeterministic ? "d" : "n";
}

Variant ParseVariant(std::string_view text) {
  if (text == "d" || text == "deterministic") return Variant::kDeterministic;
  if (text == "n" || text == "nondeterministic" ||
      text == "non-deterministic") {
    return Variant::kNonDeterministic;
  }
  throw ParseError("variant: expected 'd' or 'n', got '" + std::string(text) +
                   "'");
}

Rational Utility(const JointStrategy& joint, const GameParams& params,
                 int agent, Variant variant, const Limits& limits) {
  CheckAgent(joint, agent);
  CheckVariantCaps(joint.num_agents(), variant, limits);
  const UtilityEvaluator eval(params, variant, joint.num_agents());
  return eval.ToRational(eval.Scaled(joint.strategies(), agent));
}

BestResponseSet BestResponses(const JointStrategy& joint,
                              const GameParams& params, int agent,
                              Variant variant, const Limits& limits) {
  CheckAgent(joint, agent);
  CheckVariantCaps(joint.num_agents(), variant, limits);
  const UtilityEvaluator eval(params, variant, joint.num_agents());
  const int n = joint.universe().size();
  std::vector<ElementSet> strategies(joint.strategies().begin(),
                                     joint.strategies().end());
  std::vector<ElementSet> argmax;
  Integer best;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    strategies[agent] = ElementSet(bits);
    Integer u = eval.Scaled(strategies, agent);
    if (argmax.empty() || u > best) {
      best = std::move(u);
      argmax.assign(1, ElementSet(bits));
    } else if (u == best) {
      argmax.push_back(ElementSet(bits));
    }
  }
  return {std::move(argmax), eval.ToRational(best)};
}

NashVerdict CheckNash(const JointStrategy& joint, const GameParams& params,
                      Variant variant, const Limits& limits) {
  CheckVariantCaps(joint.num_agents(), variant, limits);
  const UtilityEvaluator eval(params, variant, joint.num_agents());
  const int n = joint.universe().size();
  std::vector<ElementSet> strategies(joint.strategies().begin(),
                                     joint.strategies().end());
  for (int agent = 0; agent < joint.num_agents(); ++agent) {
    const Integer current = eval.Scaled(strategies, agent);
    ScanResult scan = ScanDeviations(strategies, agent, n, eval);
    if (scan.best > current) {
      return {DeviationWitness{agent, strategies[agent], scan.first_best,
                               eval.ToRational(current),
                               eval.ToRational(scan.best)}};
    }
  }
  return {};
}

bool IsNash(const JointStrategy& joint, const GameParams& params,
            Variant variant, const Limits& limits) {
  CheckVariantCaps(joint.num_agents(), variant, limits);
  const UtilityEvaluator eval(params, variant, joint.num_agents());
  std::vector<ElementSet> strategies(joint.strategies().begin(),
                                     joint.strategies().end());
  return IsNashRaw(strategies, joint.universe().size(), eval);
}

std::optional<std::uint64_t> ProfileCount(int n, int m) {
  const long long bits = static_cast<long long>(n) * m;
  if (bits >= 64) return std::nullopt;
  return std::uint64_t{1} << bits;
}

std::uint64_t CheckProfileBudget(int n, int m, const Limits& limits) {
  const auto count = ProfileCount(n, m);
  if (!count) {
    throw BudgetExceededError("", limits.profile_budget);
  }
  if (*count > limits.profile_budget) {
    throw BudgetExceededError(std::to_string(*count) + " (= (2^" +
                                  std::to_string(n) + ")^" + std::to_string(m) +
                                  ")",
                              limits.profile_budget);
  }
  return *count;
}

JointStrategy ProfileAt(const Universe& universe, int m, std::uint64_t index) {
  std::vector<ElementSet> strategies(m);
  FillProfile(universe.size(), index, strategies);
  return JointStrategy(universe, std::move(strategies));
}

JointStrategy CanonicalForm(const JointStrategy& joint) {
  std::vector<ElementSet> sorted(joint.strategies().begin(),
                                 joint.strategies().end());
  std::sort(sorted.begin(), sorted.end());
  return JointStrategy(joint.universe(), std::move(sorted));
}

std::vector<JointStrategy> EnumerateNash(int n, int m, const GameParams& params,
                                         Variant variant, bool dedup,
                                         const Limits& limits) {
  const Universe universe(n);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  CheckVariantCaps(m, variant, limits);
  const std::uint64_t total = CheckProfileBudget(n, m, limits);
  const UtilityEvaluator eval(params, variant, m);

  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> found(chunks);
  ParallelFor(chunks, limits.threads, [&](std::size_t chunk) {
    std::vector<ElementSet> strategies(m);
    const std::uint64_t end = std::min(total, (chunk + 1) * kChunk);
    for (std::uint64_t index = chunk * kChunk; index < end; ++index) {
      FillProfile(n, index, strategies);
      if (IsNashRaw(strategies, n, eval)) found[chunk].push_back(index);
    }
  });

  std::vector<JointStrategy> equilibria;
  std::set<JointStrategy> seen_orbits;
  for (const auto& chunk : found) {
    for (std::uint64_t index : chunk) {
      JointStrategy profile = ProfileAt(universe, m, index);
      if (dedup && !seen_orbits.insert(CanonicalForm(profile)).second) continue;
      equilibria.push_back(std::move(profile));
    }
  }
  return equilibria;
}

}  // namespace scig
