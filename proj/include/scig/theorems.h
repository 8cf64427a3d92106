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

#ifndef SCIG_THEOREMS_H_
#define SCIG_THEOREMS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "scig/core.h"
#include "scig/game.h"

namespace scig {

// The equilibrium characterizations checked against brute force.
//   T1.1-T1.3  deterministic greedy, by cost regime
//   T2         deterministic greedy: no equilibrium when m > n, alpha < beta/2
//   T3.1-T3.3  random-order greedy, by regime
//   L1, L2     deterministic: disjoint strategies, sizes at most one
//   L3         random order: agents selected with probability in (0, 1)
//              hold the whole universe
//   C1         random order: next to a full-universe agent, every other
//              agent is full or empty
enum class Claim { kT1_1, kT1_2, kT1_3, kT2, kT3_1, kT3_2, kT3_3, kL1, kL2, kL3, kC1 };

inline constexpr std::array kAllClaims = {
    Claim::kT1_1, Claim::kT1_2, Claim::kT1_3, Claim::kT2,
    Claim::kT3_1, Claim::kT3_2, Claim::kT3_3, Claim::kL1,
    Claim::kL2,   Claim::kL3,   Claim::kC1};

std::string_view ClaimId(Claim claim);
// Throws ParseError on an unknown identifier.
Claim ParseClaim(std::string_view id);
// The game variant a claim speaks about.
Variant ClaimVariant(Claim claim);

// How T1.2's "the first min{m, n} agents" is read. kStrict pins the
// singletons to agents 1..min{m, n}; kPermissive lets any agents hold them.
enum class AssignmentReading { kStrict, kPermissive };
std::string_view ReadingName(AssignmentReading reading);

struct ParameterRegime {
  int n = 0;
  int m = 0;
  Rational alpha{1};
  Rational beta{1};
  Variant variant = Variant::kDeterministic;
  std::optional<int> rho;
  AssignmentReading assignment = AssignmentReading::kStrict;

  GameParams params() const { return GameParams(alpha, beta); }
};

// rho >= 2, random order, m > rho * n and
// beta / ((1 + rho) n) < alpha <= beta / (rho n).
bool RhoBandHolds(const ParameterRegime& regime);

// Whether the regime meets the claim's hypothesis. When it does not, the
// verdict is vacuous.
bool HypothesisHolds(Claim claim, const ParameterRegime& regime);

using ProfilePredicate = std::function<bool(const JointStrategy&)>;

struct Characterization {
  ProfilePredicate accepts;
  // Direct listing of accepted profiles for claims with a constructive form
  // (T3.2's pairing construction, T3.3's full/empty split). Empty otherwise.
  std::function<std::vector<JointStrategy>()> members;
};

// The claim as a decidable predicate over joint strategies of the regime.
Characterization Characterize(Claim claim, const ParameterRegime& regime,
                              const Limits& limits = {});

enum class VerdictStatus { kConfirmed, kRefuted, kVacuous };
std::string_view StatusName(VerdictStatus status);

// kTwoSided: E == P.  kSoundness: every profile in P is an equilibrium.
// kNecessary: E is a subset of P.
enum class CheckMode { kNone, kTwoSided, kSoundness, kNecessary };
std::string_view CheckModeName(CheckMode mode);

enum class VerifyMode { kAuto, kSoundnessOnly };

struct TheoremVerdict {
  Claim claim = Claim::kT1_1;
  ParameterRegime regime;
  VerdictStatus status = VerdictStatus::kVacuous;
  CheckMode mode = CheckMode::kNone;
  // Profiles on which the predicate and ground truth disagree.
  std::vector<JointStrategy> witnesses;
  std::optional<std::uint64_t> equilibria;  // |E| when enumerated
  std::optional<std::uint64_t> predicted;   // |P| when listed
  std::vector<std::string> notes;
};

// Compares the characterization with enumerated equilibria. Equality claims
// (T1.*, T2, T3.1, T3.3) run two-sided when the profile budget allows; T3.3
// falls back to soundness over its listed members otherwise, as it does
// under kSoundnessOnly. T3.2 only asserts that equilibria of the described
// shape exist, so it checks the pairing construction and every agent
// relabeling of it, and notes equilibria outside both described shapes.
// Necessary-condition claims (L*, C1) check E against P and are vacuous
// when E is empty.
TheoremVerdict Verify(Claim claim, const ParameterRegime& regime,
                      const Limits& limits = {},
                      VerifyMode mode = VerifyMode::kAuto);

struct SuiteEntry {
  Claim claim = Claim::kT1_1;
  ParameterRegime regime;
  VerifyMode mode = VerifyMode::kAuto;
};

struct SuiteRow {
  SuiteEntry entry;
  std::optional<TheoremVerdict> verdict;
  std::string error;  // set when verification threw
  double wall_seconds = 0;
};

struct SuiteReport {
  std::vector<SuiteRow> rows;
  bool AnyRefuted() const;
  bool AnyError() const;
};

// Runs every entry; per-entry errors are recorded in the row. Rows are
// ordered by claim, then regime.
SuiteReport VerifySuite(std::span<const SuiteEntry> entries,
                        const Limits& limits = {});

// {"regimes": [{"claim": "T1.2", "n": [2, 3], "m": [2, 3],
//               "alpha": ["3/5"], "beta": "1", "variant": "d",
//               "rho": 2, "assignment": "strict", "mode": "auto"}, ...]}
// n, m, alpha, beta and rho take a scalar or a list; lists expand to their
// cross product. variant defaults to the claim's own.
std::vector<SuiteEntry> ParseSuiteConfig(const nlohmann::json& doc);
std::vector<SuiteEntry> LoadSuiteConfig(const std::filesystem::path& path);

nlohmann::json VerdictToJson(const TheoremVerdict& verdict);
nlohmann::json ReportToJson(const SuiteReport& report);
std::string ReportToText(const SuiteReport& report);
std::string ReportToCsv(const SuiteReport& report);

}  // namespace scig

#endif  // SCIG_THEOREMS_H_
