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

#ifndef SCIG_INSTANCE_H_
#define SCIG_INSTANCE_H_

#include <filesystem>
#include <optional>
#include <string_view>

#include "json.hpp"
#include "scig/core.h"

namespace scig {

// An instance file:
//   {"universe": <n or [labels]>,
//    "strategies": [[<0-based index or label>, ...], ...],
//    "alpha": "p/q", "beta": "p/q"}
// alpha and beta are optional; when present they must be positive.
struct Instance {
  JointStrategy joint;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
};

// All three throw ParseError naming the offending field.
Instance ParseInstance(const nlohmann::json& doc);
Instance ParseInstanceText(std::string_view text);
Instance LoadInstance(const std::filesystem::path& path);

// Parses a positive "p/q" parameter; `field` names it in diagnostics.
Rational ParsePositiveRational(std::string_view text, std::string_view field);

// Labels of the members, ascending.
nlohmann::json ElementSetToJson(const Universe& universe, ElementSet set);
// {"universe": ..., "strategies": ...}; parses back to the same profile.
nlohmann::json JointStrategyToJson(const JointStrategy& joint);

}  // namespace scig

#endif  // SCIG_INSTANCE_H_
