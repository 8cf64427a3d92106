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

// scig: command-line front end for the set cover incentive game engine.
//
//   scig solve FILE (--identity | --permutation 3,4,2,1)
//   scig distribution FILE (--exact | --samples N [--seed S])
//   scig check-ne FILE [--alpha p/q] [--beta p/q] --variant d|n
//   scig enumerate --n N --m M --alpha p/q --beta p/q --variant d|n [--dedup]
//   scig verify --suite FILE [--format text|json|csv]
//
// Exit codes: 0 success, 1 refuted claim (verify), 2 parse error,
// 3 invalid permutation, 4 permutation cap, 5 enumeration budget.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scig/core.h"
#include "scig/errors.h"
#include "scig/game.h"
#include "scig/greedy.h"
#include "scig/instance.h"
#include "scig/stochastic.h"
#include "scig/theorems.h"

namespace scig {
namespace {

using nlohmann::json;

json OneBased(std::span<const int> agents) {
  json out = json::array();
  for (int a : agents) out.push_back(a + 1);
  return out;
}

void Print(const json& doc) { std::cout << doc.dump(2) << '\n'; }

Permutation ParsePermutationFlag(const std::string& text) {
  std::vector<int> order;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    try {
      std::size_t used = 0;
      order.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("--permutation: '" + item + "' is not an agent number");
    }
    start = comma + 1;
  }
  return Permutation::FromOneBased(order);
}

int Solve(const std::string& file, bool identity, const std::string& permutation) {
  const Instance inst = LoadInstance(file);
  const JointStrategy& joint = inst.joint;
  const Permutation pi = identity ? Permutation::Identity(joint.num_agents())
                                  : ParsePermutationFlag(permutation);
  const Cover cover = GreedyCover(joint, pi);
  ElementSet covered;
  for (int a : cover.selected) covered = covered | joint.strategy(a);
  Print({{"cover", OneBased(cover.selected)},
         {"order", OneBased(pi.order())},
         {"universe_covered", covered == EffectiveUniverse(joint)}});
  return 0;
}

int Distribution(const std::string& file, bool exact, std::uint64_t samples,
                 std::uint64_t seed, const Limits& limits) {
  const Instance inst = LoadInstance(file);
  if (exact) {
    const CoverDistribution d = ComputeCoverDistribution(inst.joint, limits);
    json covers = json::array();
    for (const auto& e : d.entries) {
      covers.push_back({{"cover", OneBased(e.cover.selected)},
                        {"probability", e.probability.ToString()},
                        {"permutations", e.permutations}});
    }
    json probs = json::array();
    for (const Rational& p : SelectionProbabilities(inst.joint, limits)) {
      probs.push_back(p.ToString());
    }
    Print({{"covers", std::move(covers)},
           {"permutation_count", d.permutation_count},
           {"selection_probabilities", std::move(probs)}});
    return 0;
  }
  const SelectionEstimate est = MonteCarloProbabilities(inst.joint, samples, seed);
  Print({{"estimates", est.estimates},
         {"standard_errors", est.standard_errors},
         {"samples", est.samples},
         {"seed", est.seed}});
  return 0;
}

Rational ResolveParameter(const std::string& flag, const std::optional<Rational>& from_file,
                          const std::string& name) {
  if (!flag.empty()) return ParsePositiveRational(flag, "--" + name);
  if (from_file) return *from_file;
  throw ParseError(name + ": missing (pass --" + name + " or set it in the instance)");
}

int CheckNe(const std::string& file, const std::string& alpha,
            const std::string& beta, const std::string& variant,
            const Limits& limits) {
  const Instance inst = LoadInstance(file);
  const GameParams params(ResolveParameter(alpha, inst.alpha, "alpha"),
                          ResolveParameter(beta, inst.beta, "beta"));
  const NashVerdict v = CheckNash(inst.joint, params, ParseVariant(variant), limits);
  json out = {{"equilibrium", v.equilibrium()}};
  if (v.witness) {
    const Universe& u = inst.joint.universe();
    out["witness"] = {{"agent", v.witness->agent + 1},
                      {"from", ElementSetToJson(u, v.witness->from)},
                      {"to", ElementSetToJson(u, v.witness->to)},
                      {"utility_before", v.witness->utility_before.ToString()},
                      {"utility_after", v.witness->utility_after.ToString()}};
  }
  Print(out);
  return 0;
}

int Enumerate(int n, int m, const std::string& alpha, const std::string& beta,
              const std::string& variant, bool dedup, const Limits& limits) {
  const GameParams params(ParsePositiveRational(alpha, "--alpha"),
                          ParsePositiveRational(beta, "--beta"));
  const auto found = EnumerateNash(n, m, params, ParseVariant(variant), dedup, limits);
  json list = json::array();
  for (const auto& j : found) list.push_back(JointStrategyToJson(j)["strategies"]);
  Print({{"n", n},
         {"m", m},
         {"count", found.size()},
         {"equilibria", std::move(list)}});
  return 0;
}

int VerifyCommand(const std::string& suite, const std::string& format,
                  const Limits& limits) {
  const auto entries = LoadSuiteConfig(suite);
  const SuiteReport report = VerifySuite(entries, limits);
  if (format == "json") {
    Print(ReportToJson(report));
  } else if (format == "csv") {
    std::cout << ReportToCsv(report);
  } else {
    std::cout << ReportToText(report);
  }
  return report.AnyRefuted() ? 1 : 0;
}

int Run(int argc, char** argv) {
  CLI::App app{"Set cover incentive game: greedy covers, equilibria and claim checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Limits limits;
  app.add_option("--threads", limits.threads, "worker threads")
      ->check(CLI::Range(1, 256));
  app.add_option("--perm-cap", limits.permutation_cap,
                 "largest agent count for exact m! enumeration")
      ->check(CLI::Range(1, 20));
  app.add_option("--budget", limits.profile_budget,
                 "largest joint-strategy enumeration");

  std::string file, permutation, alpha, beta, variant, suite, format = "text";
  bool identity = false, exact = false, dedup = false;
  std::uint64_t samples = 0, seed = 7;
  int n = 0, m = 0;

  auto* solve = app.add_subcommand("solve", "run the greedy cover on an instance");
  solve->add_option("file", file, "instance JSON")->required();
  auto* id_flag = solve->add_flag("--identity", identity, "scan agents in index order");
  auto* perm_opt = solve->add_option("--permutation", permutation,
                                     "1-based scan order, e.g. 3,4,2,1");
  id_flag->excludes(perm_opt);

  auto* dist = app.add_subcommand("distribution", "cover distribution over random orders");
  dist->add_option("file", file, "instance JSON")->required();
  auto* exact_flag = dist->add_flag("--exact", exact, "enumerate all m! orders");
  auto* samples_opt = dist->add_option("--samples", samples, "Monte Carlo sample count")
                          ->check(CLI::PositiveNumber);
  dist->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  exact_flag->excludes(samples_opt);

  auto* check = app.add_subcommand("check-ne", "test a profile for pure equilibrium");
  check->add_option("file", file, "instance JSON")->required();
  check->add_option("--alpha", alpha, "cost per element, p/q");
  check->add_option("--beta", beta, "benefit of selection, p/q");
  check->add_option("--variant", variant, "d or n")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list every pure equilibrium");
  enumerate->add_option("--n", n, "elements")->required()->check(CLI::Range(1, kMaxElements));
  enumerate->add_option("--m", m, "agents")->required()->check(CLI::Range(1, kMaxAgents));
  enumerate->add_option("--alpha", alpha, "cost per element, p/q")->required();
  enumerate->add_option("--beta", beta, "benefit of selection, p/q")->required();
  enumerate->add_option("--variant", variant, "d or n")->required();
  enumerate->add_flag("--dedup", dedup, "one profile per agent-relabeling orbit");

  auto* verify = app.add_subcommand("verify", "check characterizations against enumeration");
  verify->add_option("--suite", suite, "suite configuration JSON")->required();
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (*solve && !identity && perm_opt->count() == 0) {
    std::cerr << "solve: pass --identity or --permutation LIST\n";
    return 2;
  }
  if (*dist && !exact && samples == 0) {
    std::cerr << "distribution: pass --exact or --samples N\n";
    return 2;
  }

  try {
    if (*solve) return Solve(file, identity, permutation);
    if (*dist) return Distribution(file, exact, samples, seed, limits);
    if (*check) return CheckNe(file, alpha, beta, variant, limits);
    if (*enumerate) return Enumerate(n, m, alpha, beta, variant, dedup, limits);
    return VerifyCommand(suite, format, limits);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace
}  // namespace scig

int main(int argc, char** argv) { return scig::Run(argc, argv); }
