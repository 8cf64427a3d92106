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

#include "scig/instance.h"

#include <fstream>
#include <sstream>

#include "scig/errors.h"

namespace scig {
namespace {

using nlohmann::json;

Universe ParseUniverse(const json& node) {
  if (node.is_number_integer()) {
    const auto n = node.get<std::int64_t>();
    if (n < 0 || n > kMaxElements) {
      throw ParseError("universe: size " + std::to_string(n) +
                       " outside [0, " + std::to_string(kMaxElements) + "]");
    }
    return Universe(static_cast<int>(n));
  }
  if (node.is_array()) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (!node[i].is_string()) {
        throw ParseError("universe[" + std::to_string(i) +
                         "]: label must be a string");
      }
      labels.push_back(node[i].get<std::string>());
    }
    if (labels.size() > static_cast<std::size_t>(kMaxElements)) {
      throw ParseError("universe: " + std::to_string(labels.size()) +
                       " labels exceed the cap of " +
                       std::to_string(kMaxElements));
    }
    try {
      return Universe(std::move(labels));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("universe: ") + e.what());
    }
  }
  throw ParseError("universe: expected an integer or a list of labels");
}

ElementSet ParseStrategy(const Universe& universe, const json& node,
                         std::size_t agent) {
  const std::string where = "strategies[" + std::to_string(agent) + "]";
  if (!node.is_array()) throw ParseError(where + ": expected a list");
  std::uint32_t bits = 0;
  for (std::size_t k = 0; k < node.size(); ++k) {
    const json& ref = node[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    int index = -1;
    if (ref.is_number_integer()) {
      const auto v = ref.get<std::int64_t>();
      if (v < 0 || v >= universe.size()) {
        throw ParseError(at + ": element index " + std::to_string(v) +
                         " out of range for n=" +
                         std::to_string(universe.size()));
      }
      index = static_cast<int>(v);
    } else if (ref.is_string()) {
      const auto found = universe.IndexOf(ref.get<std::string>());
      if (!found) {
        throw ParseError(at + ": unknown element '" + ref.get<std::string>() +
                         "'");
      }
      index = *found;
    } else {
      throw ParseError(at + ": expected an element index or label");
    }
    bits |= 1u << index;
  }
  return ElementSet(bits);
}

std::optional<Rational> ParseOptionalParam(const json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  const json& node = doc.at(key);
  if (node.is_number_integer()) {
    return ParsePositiveRational(std::to_string(node.get<std::int64_t>()), key);
  }
  if (!node.is_string()) {
    throw ParseError(std::string(key) + ": expected a \"p/q\" string");
  }
  return ParsePositiveRational(node.get<std::string>(), key);
}

}  // namespace

Rational ParsePositiveRational(std::string_view text, std::string_view field) {
  Rational value;
  try {
    value = Rational::Parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string(field) + ": " + e.what());
  }
  if (!value.is_positive()) {
    throw ParseError(std::string(field) + ": must be strictly positive, got " +
                     value.ToString());
  }
  return value;
}

Instance ParseInstance(const json& doc) {
  if (!doc.is_object()) throw ParseError("instance: expected a JSON object");
  if (!doc.contains("universe")) throw ParseError("universe: missing");
  if (!doc.contains("strategies")) throw ParseError("strategies: missing");
  Universe universe = ParseUniverse(doc.at("universe"));
  const json& list = doc.at("strategies");
  if (!list.is_array() || list.empty()) {
    throw ParseError("strategies: expected a non-empty list");
  }
  if (list.size() > static_cast<std::size_t>(kMaxAgents)) {
    throw ParseError("strategies: " + std::to_string(list.size()) +
                     " agents exceed the cap of " + std::to_string(kMaxAgents));
  }
  std::vector<ElementSet> strategies;
  for (std::size_t i = 0; i < list.size(); ++i) {
    strategies.push_back(ParseStrategy(universe, list[i], i));
  }
  // Parameters first: GCC 11 leaks earlier members when a later aggregate
  // initializer throws.
  std::optional<Rational> alpha = ParseOptionalParam(doc, "alpha");
  std::optional<Rational> beta = ParseOptionalParam(doc, "beta");
  return Instance{JointStrategy(std::move(universe), std::move(strategies)),
                  std::move(alpha), std::move(beta)};
}

Instance ParseInstanceText(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  return ParseInstance(doc);
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("instance: cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceText(buffer.str());
}

json ElementSetToJson(const Universe& universe, ElementSet set) {
  json out = json::array();
  for (int e : set.members()) out.push_back(universe.label(e));
  return out;
}

json JointStrategyToJson(const JointStrategy& joint) {
  const Universe& u = joint.universe();
  json out;
  if (u.has_default_labels()) {
    out["universe"] = u.size();
  } else {
    out["universe"] = u.labels();
  }
  json strategies = json::array();
  for (ElementSet s : joint.strategies()) {
    strategies.push_back(ElementSetToJson(u, s));
  }
  out["strategies"] = std::move(strategies);
  return out;
}

}  // namespace scig
