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

#include "scig/theorems.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "scig/errors.h"
#include "scig/instance.h"
#include "scig/parallel.h"
#include "scig/stochastic.h"

namespace scig {
namespace {

using nlohmann::json;

bool PairwiseDisjoint(std::span<const ElementSet> s) {
  ElementSet seen;
  for (ElementSet x : s) {
    if (x.Intersects(seen)) return false;
    seen = seen | x;
  }
  return true;
}

bool AllAtMostOne(std::span<const ElementSet> s) {
  return std::all_of(s.begin(), s.end(), [](ElementSet x) { return x.size() <= 1; });
}

bool AllEmpty(std::span<const ElementSet> s) {
  return std::all_of(s.begin(), s.end(), [](ElementSet x) { return x.empty(); });
}

// Exactly `count` agents hold pairwise distinct singletons, the rest nothing.
// With `leading`, those agents must be the first `count`.
bool DistinctSingletons(std::span<const ElementSet> s, int count, bool leading) {
  if (!AllAtMostOne(s) || !PairwiseDisjoint(s)) return false;
  int singles = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].size() == 1) {
      ++singles;
      if (leading && static_cast<int>(i) >= count) return false;
    }
  }
  return singles == count;
}

// How many agents hold each element.
std::vector<int> ElementMultiplicity(std::span<const ElementSet> s, int n) {
  std::vector<int> counts(n, 0);
  for (ElementSet x : s) {
    for (int e : x.members()) ++counts[e];
  }
  return counts;
}

// Zero- or one-element strategies; every held element is held by exactly two.
bool PairedSingletons(std::span<const ElementSet> s, int n) {
  if (!AllAtMostOne(s)) return false;
  for (int c : ElementMultiplicity(s, n)) {
    if (c != 0 && c != 2) return false;
  }
  return true;
}

// One-element strategies only; every element held once or twice.
bool SingletonsOnceOrTwice(std::span<const ElementSet> s, int n) {
  if (!std::all_of(s.begin(), s.end(), [](ElementSet x) { return x.size() == 1; })) {
    return false;
  }
  for (int c : ElementMultiplicity(s, n)) {
    if (c != 1 && c != 2) return false;
  }
  return true;
}

// Number of agents at the full universe if everyone else is empty, else -1.
int FullEmptySplit(std::span<const ElementSet> s, ElementSet full) {
  int fulls = 0;
  for (ElementSet x : s) {
    if (x == full) {
      ++fulls;
    } else if (!x.empty()) {
      return -1;
    }
  }
  return fulls;
}

bool RhoBoundary(const ParameterRegime& r) {
  return r.rho && r.alpha == r.beta / Rational(std::int64_t{*r.rho} * r.n);
}

// T3.3's accepted full-universe counts.
std::vector<int> AcceptedFullCounts(const ParameterRegime& r) {
  if (!r.rho) return {};
  std::vector<int> counts = {*r.rho};
  if (*r.rho >= 3 && RhoBoundary(r)) counts.push_back(*r.rho - 1);
  return counts;
}

// Every distinct arrangement of `base` over the agents, ascending.
std::vector<JointStrategy> DistinctArrangements(const Universe& universe,
                                                std::vector<ElementSet> base) {
  std::sort(base.begin(), base.end());
  std::vector<JointStrategy> out;
  do {
    out.emplace_back(universe, base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Agents 1..n hold {e1}..{en}, agents n+1..2n repeat them, the rest are empty.
std::vector<ElementSet> PairingConstruction(int n, int m) {
  std::vector<ElementSet> s(m);
  for (int i = 0; i < m && i < 2 * n; ++i) s[i] = ElementSet::Of({i % n});
  return s;
}

std::vector<JointStrategy> AllProfiles(int n, int m, const Limits& limits) {
  const std::uint64_t total = CheckProfileBudget(n, m, limits);
  const Universe universe(n);
  std::vector<JointStrategy> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(ProfileAt(universe, m, i));
  return out;
}

std::vector<JointStrategy> Filter(const std::vector<JointStrategy>& profiles,
                                  const ProfilePredicate& accepts) {
  std::vector<JointStrategy> out;
  for (const auto& p : profiles) {
    if (accepts(p)) out.push_back(p);
  }
  return out;
}

std::vector<JointStrategy> Difference(const std::vector<JointStrategy>& a,
                                      const std::vector<JointStrategy>& b) {
  std::vector<JointStrategy> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

enum class ClaimKind { kEquality, kExistence, kNecessary };

ClaimKind KindOf(Claim c) {
  switch (c) {
    case Claim::kL1:
    case Claim::kL2:
    case Claim::kL3:
    case Claim::kC1:
      return ClaimKind::kNecessary;
    case Claim::kT3_2:
      return ClaimKind::kExistence;
    default:
      return ClaimKind::kEquality;
  }
}

std::string RegimeLabel(const ParameterRegime& r) {
  std::ostringstream os;
  os << "n=" << r.n << " m=" << r.m << " alpha=" << r.alpha
     << " beta=" << r.beta << " variant=" << VariantCode(r.variant);
  if (r.rho) os << " rho=" << *r.rho;
  return os.str();
}

}  // namespace

std::string_view ClaimId(Claim claim) {
  switch (claim) {
    case Claim::kT1_1: return "T1.1";
    case Claim::kT1_2: return "T1.2";
    case Claim::kT1_3: return "T1.3";
    case Claim::kT2: return "T2";
    case Claim::kT3_1: return "T3.1";
    case Claim::kT3_2: return "T3.2";
    case Claim::kT3_3: return "T3.3";
    case Claim::kL1: return "L1";
    case Claim::kL2: return "L2";
    case Claim::kL3: return "L3";
    case Claim::kC1: return "C1";
  }
  return "?";
}

Claim ParseClaim(std::string_view id) {
  for (Claim c : kAllClaims) {
    if (ClaimId(c) == id) return c;
  }
  throw ParseError("claim: unknown identifier '" + std::string(id) + "'");
}

Variant ClaimVariant(Claim claim) {
  switch (claim) {
    case Claim::kT1_1:
    case Claim::kT1_2:
    case Claim::kT1_3:
    case Claim::kT2:
    case Claim::kL1:
    case Claim::kL2:
      return Variant::kDeterministic;
    default:
      return Variant::kNonDeterministic;
  }
}

std::string_view ReadingName(AssignmentReading reading) {
  return reading == AssignmentReading::kStrict ? "strict" : "permissive";
}

std::string_view StatusName(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kConfirmed: return "confirmed";
    case VerdictStatus::kRefuted: return "refuted";
    case VerdictStatus::kVacuous: return "vacuous";
  }
  return "?";
}

std::string_view CheckModeName(CheckMode mode) {
  switch (mode) {
    case CheckMode::kNone: return "none";
    case CheckMode::kTwoSided: return "two-sided";
    case CheckMode::kSoundness: return "soundness";
    case CheckMode::kNecessary: return "necessary";
  }
  return "?";
}

bool RhoBandHolds(const ParameterRegime& r) {
  if (!r.rho || *r.rho < 2 || r.variant != Variant::kNonDeterministic) {
    return false;
  }
  const std::int64_t rho = *r.rho;
  if (r.n < 1 || r.m <= rho * r.n) return false;
  const Rational lower = r.beta / Rational((1 + rho) * r.n);
  const Rational upper = r.beta / Rational(rho * r.n);
  return lower < r.alpha && r.alpha <= upper;
}

bool HypothesisHolds(Claim claim, const ParameterRegime& r) {
  if (r.variant != ClaimVariant(claim)) return false;
  const Rational half_beta = r.beta / Rational(2);
  switch (claim) {
    case Claim::kT1_1: return r.alpha > r.beta;
    case Claim::kT1_2: return half_beta <= r.alpha && r.alpha < r.beta;
    case Claim::kT1_3: return r.alpha == r.beta;
    case Claim::kT2: return r.m > r.n && r.alpha < half_beta;
    case Claim::kT3_1: return r.m <= r.n && r.alpha <= r.beta;
    case Claim::kT3_2: return r.m > r.n && r.alpha == half_beta;
    case Claim::kT3_3: return RhoBandHolds(r);
    case Claim::kL3: return r.alpha < half_beta && r.m > r.n;
    case Claim::kL1:
    case Claim::kL2:
    case Claim::kC1:
      return true;
  }
  return false;
}

Characterization Characterize(Claim claim, const ParameterRegime& r,
                              const Limits& limits) {
  const int n = r.n;
  const int m = r.m;
  const ElementSet full = ElementSet::Full(n);
  Characterization c;
  switch (claim) {
    case Claim::kT1_1:
      c.accepts = [](const JointStrategy& j) { return AllEmpty(j.strategies()); };
      break;
    case Claim::kT1_2: {
      const bool leading = r.assignment == AssignmentReading::kStrict;
      const int l1 = std::min(m, n);
      c.accepts = [l1, leading](const JointStrategy& j) {
        return DistinctSingletons(j.strategies(), l1, leading);
      };
      break;
    }
    case Claim::kT1_3:
      c.accepts = [](const JointStrategy& j) {
        return AllAtMostOne(j.strategies()) && PairwiseDisjoint(j.strategies());
      };
      break;
    case Claim::kT2:
      c.accepts = [](const JointStrategy&) { return false; };
      break;
    case Claim::kT3_1:
      if (r.alpha < r.beta) {
        c.accepts = [m](const JointStrategy& j) {
          return DistinctSingletons(j.strategies(), m, false);
        };
      } else {
        c.accepts = [](const JointStrategy& j) {
          return AllAtMostOne(j.strategies()) && PairwiseDisjoint(j.strategies());
        };
      }
      break;
    case Claim::kT3_2:
      c.accepts = [n](const JointStrategy& j) {
        return PairedSingletons(j.strategies(), n) ||
               SingletonsOnceOrTwice(j.strategies(), n);
      };
      c.members = [n, m] {
        return DistinctArrangements(Universe(n), PairingConstruction(n, m));
      };
      break;
    case Claim::kT3_3: {
      const std::vector<int> counts = AcceptedFullCounts(r);
      c.accepts = [full, counts](const JointStrategy& j) {
        const int fulls = FullEmptySplit(j.strategies(), full);
        return std::find(counts.begin(), counts.end(), fulls) != counts.end();
      };
      c.members = [n, m, full, counts] {
        std::vector<JointStrategy> out;
        for (int k : counts) {
          if (k > m) continue;
          std::vector<ElementSet> base(m);
          std::fill(base.begin(), base.begin() + k, full);
          auto more = DistinctArrangements(Universe(n), base);
          out.insert(out.end(), more.begin(), more.end());
        }
        std::sort(out.begin(), out.end());
        return out;
      };
      break;
    }
    case Claim::kL1:
      c.accepts = [](const JointStrategy& j) { return PairwiseDisjoint(j.strategies()); };
      break;
    case Claim::kL2:
      c.accepts = [](const JointStrategy& j) { return AllAtMostOne(j.strategies()); };
      break;
    case Claim::kL3:
      c.accepts = [full, limits](const JointStrategy& j) {
        const auto probs = SelectionProbabilities(j, limits);
        for (int i = 0; i < j.num_agents(); ++i) {
          const bool interior = probs[i] > Rational(0) && probs[i] < Rational(1);
          if (interior && j.strategy(i) != full) return false;
        }
        return true;
      };
      break;
    case Claim::kC1:
      c.accepts = [full](const JointStrategy& j) {
        const auto s = j.strategies();
        if (std::find(s.begin(), s.end(), full) == s.end()) return true;
        return std::all_of(s.begin(), s.end(), [full](ElementSet x) {
          return x == full || x.empty();
        });
      };
      break;
  }
  return c;
}

TheoremVerdict Verify(Claim claim, const ParameterRegime& r,
                      const Limits& limits, VerifyMode mode) {
  TheoremVerdict v;
  v.claim = claim;
  v.regime = r;
  if (!HypothesisHolds(claim, r)) {
    v.notes.push_back("hypothesis not met by this regime");
    return v;
  }
  const GameParams params = r.params();
  const Characterization ch = Characterize(claim, r, limits);
  const auto budget_ok = [&] {
    const auto count = ProfileCount(r.n, r.m);
    return count && *count <= limits.profile_budget;
  };
  const auto enumerate = [&] {
    auto e = EnumerateNash(r.n, r.m, params, r.variant, false, limits);
    v.equilibria = e.size();
    return e;
  };
  const auto soundness = [&](const std::vector<JointStrategy>& predicted) {
    v.mode = CheckMode::kSoundness;
    v.predicted = predicted.size();
    for (const auto& p : predicted) {
      if (!IsNash(p, params, r.variant, limits)) v.witnesses.push_back(p);
    }
  };

  switch (KindOf(claim)) {
    case ClaimKind::kNecessary: {
      const auto e = enumerate();
      v.mode = CheckMode::kNecessary;
      for (const auto& p : e) {
        if (!ch.accepts(p)) v.witnesses.push_back(p);
      }
      if (e.empty()) {
        v.notes.push_back("no equilibria in this regime");
        return v;
      }
      break;
    }
    case ClaimKind::kExistence: {
      soundness(ch.members());
      if (budget_ok()) {
        const auto e = enumerate();
        const auto all = AllProfiles(r.n, r.m, limits);
        const auto described = Filter(all, ch.accepts);
        const auto outside = Difference(e, described);
        const auto unstable = Difference(described, e);
        v.notes.push_back(std::to_string(outside.size()) +
                          " enumerated equilibria fit neither described form");
        v.notes.push_back(std::to_string(unstable.size()) + " of " +
                          std::to_string(described.size()) +
                          " profiles of the described forms are not equilibria");
      }
      break;
    }
    case ClaimKind::kEquality: {
      const bool two_sided = mode == VerifyMode::kAuto && budget_ok();
      if (!two_sided) {
        if (ch.members) {
          soundness(ch.members());
        } else {
          soundness(Filter(AllProfiles(r.n, r.m, limits), ch.accepts));
        }
        if (v.predicted == 0) {
          v.notes.push_back("the characterization accepts no profile");
          return v;
        }
        break;
      }
      v.mode = CheckMode::kTwoSided;
      const auto e = enumerate();
      const auto all = AllProfiles(r.n, r.m, limits);
      const auto p = Filter(all, ch.accepts);
      v.predicted = p.size();
      std::set_symmetric_difference(e.begin(), e.end(), p.begin(), p.end(),
                                    std::back_inserter(v.witnesses));
      if (claim == Claim::kT1_2) {
        for (AssignmentReading reading :
             {AssignmentReading::kStrict, AssignmentReading::kPermissive}) {
          ParameterRegime alt = r;
          alt.assignment = reading;
          const auto q = Filter(all, Characterize(claim, alt, limits).accepts);
          v.notes.push_back(std::string(ReadingName(reading)) + " reading " +
                            (q == e ? "matches" : "does not match") +
                            " the enumerated equilibria");
        }
      }
      break;
    }
  }
  v.status = v.witnesses.empty() ? VerdictStatus::kConfirmed
                                 : VerdictStatus::kRefuted;
  return v;
}

bool SuiteReport::AnyRefuted() const {
  return std::any_of(rows.begin(), rows.end(), [](const SuiteRow& row) {
    return row.verdict && row.verdict->status == VerdictStatus::kRefuted;
  });
}

bool SuiteReport::AnyError() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const SuiteRow& row) { return !row.error.empty(); });
}

SuiteReport VerifySuite(std::span<const SuiteEntry> entries,
                        const Limits& limits) {
  std::vector<SuiteEntry> ordered(entries.begin(), entries.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const SuiteEntry& a, const SuiteEntry& b) {
                     const auto& x = a.regime;
                     const auto& y = b.regime;
                     return std::tie(a.claim, x.n, x.m, x.alpha, x.beta, x.rho) <
                            std::tie(b.claim, y.n, y.m, y.alpha, y.beta, y.rho);
                   });
  SuiteReport report;
  report.rows.resize(ordered.size());
  // Regimes run one per worker; each verification itself stays serial.
  Limits inner = limits;
  inner.threads = 1;
  ParallelFor(ordered.size(), limits.threads, [&](std::size_t i) {
    SuiteRow& row = report.rows[i];
    row.entry = ordered[i];
    const auto start = std::chrono::steady_clock::now();
    try {
      row.verdict = Verify(row.entry.claim, row.entry.regime, inner, row.entry.mode);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.wall_seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  });
  return report;
}

namespace {

template <typename T, typename Convert>
std::vector<T> ScalarOrList(const json& entry, const char* key,
                            std::size_t index, Convert convert) {
  const std::string where =
      "regimes[" + std::to_string(index) + "]." + key;
  if (!entry.contains(key)) throw ParseError(where + ": missing");
  const json& node = entry.at(key);
  std::vector<T> out;
  if (node.is_array()) {
    if (node.empty()) throw ParseError(where + ": empty list");
    for (const auto& x : node) out.push_back(convert(x, where));
  } else {
    out.push_back(convert(node, where));
  }
  return out;
}

int ToInt(const json& x, const std::string& where, int lo, int hi) {
  if (!x.is_number_integer()) throw ParseError(where + ": expected an integer");
  const auto v = x.get<std::int64_t>();
  if (v < lo || v > hi) {
    throw ParseError(where + ": " + std::to_string(v) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

Rational ToRational(const json& x, const std::string& where) {
  if (x.is_number_integer()) {
    return ParsePositiveRational(std::to_string(x.get<std::int64_t>()), where);
  }
  if (!x.is_string()) throw ParseError(where + ": expected a \"p/q\" string");
  return ParsePositiveRational(x.get<std::string>(), where);
}

}  // namespace

std::vector<SuiteEntry> ParseSuiteConfig(const json& doc) {
  if (!doc.is_object() || !doc.contains("regimes") ||
      !doc.at("regimes").is_array()) {
    throw ParseError("suite: expected {\"regimes\": [...]}");
  }
  std::vector<SuiteEntry> entries;
  const json& regimes = doc.at("regimes");
  for (std::size_t i = 0; i < regimes.size(); ++i) {
    const json& e = regimes[i];
    const std::string where = "regimes[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    if (!e.contains("claim") || !e.at("claim").is_string()) {
      throw ParseError(where + ".claim: missing");
    }
    const Claim claim = ParseClaim(e.at("claim").get<std::string>());
    const auto ns = ScalarOrList<int>(e, "n", i, [](const json& x, const std::string& w) {
      return ToInt(x, w, 1, kMaxElements);
    });
    const auto ms = ScalarOrList<int>(e, "m", i, [](const json& x, const std::string& w) {
      return ToInt(x, w, 1, kMaxAgents);
    });
    const auto alphas = ScalarOrList<Rational>(e, "alpha", i, ToRational);
    const auto betas = ScalarOrList<Rational>(e, "beta", i, ToRational);
    std::vector<std::optional<int>> rhos = {std::nullopt};
    if (e.contains("rho")) {
      rhos.clear();
      for (int rho : ScalarOrList<int>(e, "rho", i, [](const json& x, const std::string& w) {
             return ToInt(x, w, 1, 1 << 20);
           })) {
        rhos.emplace_back(rho);
      }
    }
    Variant variant = ClaimVariant(claim);
    if (e.contains("variant")) {
      if (!e.at("variant").is_string()) {
        throw ParseError(where + ".variant: expected \"d\" or \"n\"");
      }
      variant = ParseVariant(e.at("variant").get<std::string>());
    }
    AssignmentReading reading = AssignmentReading::kStrict;
    if (e.contains("assignment")) {
      const std::string a = e.at("assignment").is_string()
                                ? e.at("assignment").get<std::string>()
                                : "";
      if (a == "permissive") {
        reading = AssignmentReading::kPermissive;
      } else if (a != "strict") {
        throw ParseError(where + ".assignment: expected strict or permissive");
      }
    }
    VerifyMode mode = VerifyMode::kAuto;
    if (e.contains("mode")) {
      const std::string s =
          e.at("mode").is_string() ? e.at("mode").get<std::string>() : "";
      if (s == "soundness") {
        mode = VerifyMode::kSoundnessOnly;
      } else if (s != "auto") {
        throw ParseError(where + ".mode: expected auto or soundness");
      }
    }
    for (int n : ns) {
      for (int m : ms) {
        for (const auto& alpha : alphas) {
          for (const auto& beta : betas) {
            for (const auto& rho : rhos) {
              entries.push_back(
                  {claim, ParameterRegime{n, m, alpha, beta, variant, rho, reading},
                   mode});
            }
          }
        }
      }
    }
  }
  return entries;
}

std::vector<SuiteEntry> LoadSuiteConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("suite: cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("suite: invalid JSON: ") + e.what());
  }
  return ParseSuiteConfig(doc);
}

namespace {

json RegimeToJson(Claim claim, const ParameterRegime& r) {
  json out;
  out["claim"] = ClaimId(claim);
  out["n"] = r.n;
  out["m"] = r.m;
  out["alpha"] = r.alpha.ToString();
  out["beta"] = r.beta.ToString();
  out["variant"] = VariantCode(r.variant);
  out["rho"] = r.rho ? json(*r.rho) : json(nullptr);
  if (claim == Claim::kT1_2) out["assignment"] = ReadingName(r.assignment);
  return out;
}

std::string OptionalCount(const std::optional<std::uint64_t>& c) {
  return c ? std::to_string(*c) : "-";
}

}  // namespace

json VerdictToJson(const TheoremVerdict& v) {
  json out = RegimeToJson(v.claim, v.regime);
  out["status"] = StatusName(v.status);
  out["mode"] = CheckModeName(v.mode);
  out["equilibria"] = v.equilibria ? json(*v.equilibria) : json(nullptr);
  out["predicted"] = v.predicted ? json(*v.predicted) : json(nullptr);
  out["witness_count"] = v.witnesses.size();
  json witnesses = json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(JointStrategyToJson(w));
  out["witnesses"] = std::move(witnesses);
  out["notes"] = v.notes;
  return out;
}

json ReportToJson(const SuiteReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = row.verdict ? VerdictToJson(*row.verdict)
                         : RegimeToJson(row.entry.claim, row.entry.regime);
    if (!row.error.empty()) {
      r["status"] = "error";
      r["error"] = row.error;
    }
    r["wall_seconds"] = row.wall_seconds;
    rows.push_back(std::move(r));
  }
  return json{{"rows", std::move(rows)},
              {"any_refuted", report.AnyRefuted()},
              {"any_error", report.AnyError()}};
}

std::string ReportToText(const SuiteReport& report) {
  std::ostringstream os;
  const auto cell = [&os](const std::string& s, int width) {
    os << std::left << std::setw(width) << s << ' ';
  };
  cell("claim", 5);
  cell("n", 3);
  cell("m", 3);
  cell("alpha", 7);
  cell("beta", 5);
  cell("var", 3);
  cell("rho", 3);
  cell("reading", 10);
  cell("mode", 9);
  cell("status", 9);
  cell("|E|", 6);
  cell("|P|", 6);
  cell("witn", 5);
  os << "seconds\n";
  int confirmed = 0, refuted = 0, vacuous = 0, errors = 0;
  std::vector<std::string> notes;
  for (const auto& row : report.rows) {
    const auto& r = row.entry.regime;
    const std::string claim(ClaimId(row.entry.claim));
    cell(claim, 5);
    cell(std::to_string(r.n), 3);
    cell(std::to_string(r.m), 3);
    cell(r.alpha.ToString(), 7);
    cell(r.beta.ToString(), 5);
    cell(std::string(VariantCode(r.variant)), 3);
    cell(r.rho ? std::to_string(*r.rho) : "-", 3);
    cell(row.entry.claim == Claim::kT1_2 ? std::string(ReadingName(r.assignment))
                                         : "-",
         10);
    if (!row.error.empty()) {
      ++errors;
      cell("-", 9);
      cell("error", 9);
      notes.push_back(claim + " (" + RegimeLabel(r) + "): " + row.error);
    } else {
      const auto& v = *row.verdict;
      cell(std::string(CheckModeName(v.mode)), 9);
      cell(std::string(StatusName(v.status)), 9);
      cell(OptionalCount(v.equilibria), 6);
      cell(OptionalCount(v.predicted), 6);
      cell(std::to_string(v.witnesses.size()), 5);
      switch (v.status) {
        case VerdictStatus::kConfirmed: ++confirmed; break;
        case VerdictStatus::kRefuted: ++refuted; break;
        case VerdictStatus::kVacuous: ++vacuous; break;
      }
      for (const auto& note : v.notes) {
        notes.push_back(claim + " (" + RegimeLabel(r) + "): " + note);
      }
    }
    os << std::fixed << std::setprecision(3) << row.wall_seconds << '\n';
  }
  os << report.rows.size() << " regimes: " << confirmed << " confirmed, "
     << refuted << " refuted, " << vacuous << " vacuous, " << errors
     << " errors\n";
  for (const auto& note : notes) os << "  " << note << '\n';
  return os.str();
}

std::string ReportToCsv(const SuiteReport& report) {
  std::ostringstream os;
  os << "claim,n,m,alpha,beta,variant,rho,assignment,mode,status,equilibria,"
        "predicted,witnesses,wall_seconds\n";
  for (const auto& row : report.rows) {
    const auto& r = row.entry.regime;
    os << ClaimId(row.entry.claim) << ',' << r.n << ',' << r.m << ','
       << r.alpha << ',' << r.beta << ',' << VariantCode(r.variant) << ','
       << (r.rho ? std::to_string(*r.rho) : "") << ','
       << (row.entry.claim == Claim::kT1_2 ? ReadingName(r.assignment) : "")
       << ',';
    if (row.verdict) {
      const auto& v = *row.verdict;
      os << CheckModeName(v.mode) << ',' << StatusName(v.status) << ','
         << (v.equilibria ? std::to_string(*v.equilibria) : "") << ','
         << (v.predicted ? std::to_string(*v.predicted) : "") << ','
         << v.witnesses.size();
    } else {
      os << ",error,,,";
    }
    os << ',' << row.wall_seconds << '\n';
  }
  return os.str();
}

}  // namespace scig
