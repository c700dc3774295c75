// Copyright 2026 The ISN Coordination Authors
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

#include "isn/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "isn/error.hpp"

namespace isn {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParseError, field + ": " + what);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

AgentId AgentIndex(const std::vector<std::string>& agents,
                   std::string_view name, const std::string& field) {
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (agents[i] == name) return static_cast<AgentId>(i);
  }
  Fail(field, "unknown agent \"" + std::string(name) + "\"");
}

Money ReadMoney(const json& node, const std::string& field) {
  if (node.is_number_integer()) return ParseMoney(node.dump());
  if (node.is_string()) {
    try {
      return ParseMoney(Trim(node.get<std::string>()));
    } catch (const Error& e) {
      Fail(field, e.what());
    }
  }
  if (node.is_number_float()) {
    Fail(field, "binary floating-point literal; write it as a string such "
                "as \"0.5\" or \"1/2\"");
  }
  Fail(field, "expected a number");
}

Money ReadOptionalMoney(const json& obj, const char* key,
                        const std::string& field) {
  if (!obj.contains(key)) return 0;
  return ReadMoney(obj.at(key), field + "." + key);
}

const json& Require(const json& obj, const char* key, const std::string& field) {
  if (!obj.is_object() || !obj.contains(key)) {
    Fail(field, std::string("missing \"") + key + "\"");
  }
  return obj.at(key);
}

std::string RequireString(const json& obj, const char* key,
                          const std::string& field) {
  const json& node = Require(obj, key, field);
  if (!node.is_string()) Fail(field + "." + key, "expected a string");
  return node.get<std::string>();
}

Coalition ReadCoalition(const std::vector<std::string>& agents,
                        const json& node, const std::string& field) {
  if (node.is_string()) {
    try {
      return ParseCoalitionKey(agents, node.get<std::string>());
    } catch (const Error& e) {
      Fail(field, e.what());
    }
  }
  if (!node.is_array()) Fail(field, "expected a coalition");
  Coalition s;
  for (std::size_t k = 0; k < node.size(); ++k) {
    const std::string where = field + "[" + std::to_string(k) + "]";
    if (!node[k].is_string()) Fail(where, "expected an agent name");
    s = s.with(AgentIndex(agents, node[k].get<std::string>(), where));
  }
  return s;
}

CoalitionTable ReadTable(const std::vector<std::string>& agents,
                         const json& node, const std::string& field) {
  if (!node.is_object()) Fail(field, "expected an object keyed by coalition");
  CoalitionTable table;
  for (const auto& [key, value] : node.items()) {
    const std::string where = field + "[\"" + key + "\"]";
    Coalition s;
    try {
      s = ParseCoalitionKey(agents, key);
    } catch (const Error& e) {
      Fail(where, e.what());
    }
    if (!table.emplace(s, ReadMoney(value, where)).second) {
      Fail(where, "coalition listed twice");
    }
  }
  return table;
}

StreamKind ReadKind(const std::string& text, const std::string& field) {
  if (text == "waste-offer") return StreamKind::kWasteOffer;
  if (text == "input-demand") return StreamKind::kInputDemand;
  Fail(field, "kind must be \"waste-offer\" or \"input-demand\"");
}

ExchangeScenario ReadExchange(const std::vector<std::string>& agents,
                              const json& node) {
  const std::string base = "exchange";
  if (!node.is_object()) Fail(base, "expected an object");
  ExchangeScenario scenario;
  scenario.n_agents = static_cast<unsigned>(agents.size());

  const json& streams = Require(node, "streams", base);
  if (!streams.is_array()) Fail(base + ".streams", "expected a list");
  for (std::size_t k = 0; k < streams.size(); ++k) {
    const std::string where = base + ".streams[" + std::to_string(k) + "]";
    const json& st = streams[k];
    ResourceStream stream;
    stream.firm = AgentIndex(agents, RequireString(st, "firm", where), where + ".firm");
    stream.resource = RequireString(st, "resource", where);
    stream.kind = ReadKind(RequireString(st, "kind", where), where + ".kind");
    stream.quantity = ReadMoney(Require(st, "quantity", where), where + ".quantity");
    stream.unit_discharge_cost = ReadOptionalMoney(st, "discharge_cost", where);
    stream.unit_purchase_cost = ReadOptionalMoney(st, "purchase_cost", where);
    stream.unit_treatment_cost = ReadOptionalMoney(st, "treatment_cost", where);
    scenario.streams.push_back(std::move(stream));
  }

  if (node.contains("transport")) {
    const json& routes = node.at("transport");
    if (!routes.is_array()) Fail(base + ".transport", "expected a list");
    for (std::size_t k = 0; k < routes.size(); ++k) {
      const std::string where = base + ".transport[" + std::to_string(k) + "]";
      const json& r = routes[k];
      AgentId from = AgentIndex(agents, RequireString(r, "from", where), where + ".from");
      AgentId to = AgentIndex(agents, RequireString(r, "to", where), where + ".to");
      std::string resource = RequireString(r, "resource", where);
      Money cost = ReadMoney(Require(r, "cost", where), where + ".cost");
      if (!scenario.transport.emplace(std::make_tuple(from, to, resource), cost).second) {
        Fail(where, "route listed twice");
      }
    }
  }
  if (node.contains("transaction")) {
    const json& pairs = node.at("transaction");
    if (!pairs.is_array()) Fail(base + ".transaction", "expected a list");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::string where = base + ".transaction[" + std::to_string(k) + "]";
      const json& r = pairs[k];
      AgentId from = AgentIndex(agents, RequireString(r, "from", where), where + ".from");
      AgentId to = AgentIndex(agents, RequireString(r, "to", where), where + ".to");
      Money cost = ReadMoney(Require(r, "cost", where), where + ".cost");
      if (!scenario.transaction.emplace(std::make_pair(from, to), cost).second) {
        Fail(where, "pair listed twice");
      }
    }
  }
  return scenario;
}

Policy ReadPolicy(const std::vector<std::string>& agents, const json& node) {
  if (!node.is_object()) Fail("policy", "expected an object");
  Policy policy(static_cast<unsigned>(agents.size()));
  for (const auto& [key, label] :
       {std::pair{"promoted", PolicyLabel::kPromoted},
        std::pair{"prohibited", PolicyLabel::kProhibited}}) {
    if (!node.contains(key)) continue;
    const json& groups = node.at(key);
    const std::string field = std::string("policy.") + key;
    if (!groups.is_array()) Fail(field, "expected a list of coalitions");
    for (std::size_t k = 0; k < groups.size(); ++k) {
      const std::string where = field + "[" + std::to_string(k) + "]";
      Coalition group = ReadCoalition(agents, groups[k], where);
      try {
        policy.Label(group, label);
      } catch (const Error& e) {
        throw Error(ErrorCode::kValidationError, where + ": " + e.what());
      }
    }
  }
  return policy;
}

// Re-tags module errors as validation failures, keeping their name in the
// message. Bound violations keep their own code for the exit status.
template <typename Fn>
auto Validated(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBoundExceeded ||
        e.code() == ErrorCode::kParseError) {
      throw;
    }
    throw Error(ErrorCode::kValidationError, e.what());
  }
}

}  // namespace

std::string CoalitionKey(const std::vector<std::string>& agents, Coalition s) {
  std::string out;
  for (AgentId i : s.members()) {
    if (!out.empty()) out += ',';
    out += agents.at(i);
  }
  return out;
}

std::string CoalitionLabel(const std::vector<std::string>& agents, Coalition s) {
  return "{" + CoalitionKey(agents, s) + "}";
}

Coalition ParseCoalitionKey(const std::vector<std::string>& agents,
                            std::string_view key) {
  Coalition s;
  std::string_view rest = key;
  if (Trim(rest).empty()) return s;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view name = Trim(rest.substr(0, comma));
    AgentId id = 0;
    bool found = false;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (agents[i] == name) {
        id = static_cast<AgentId>(i);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kParseError,
                  "unknown agent \"" + std::string(name) + "\"");
    }
    if (s.contains(id)) {
      throw Error(ErrorCode::kParseError,
                  "agent \"" + std::string(name) + "\" repeated");
    }
    s = s.with(id);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return s;
}

LoadedScenario ParseScenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object()) Fail("document", "expected a JSON object");

  const json& roster = Require(doc, "agents", "document");
  if (!roster.is_array() || roster.empty()) {
    Fail("agents", "expected a non-empty list of names");
  }
  std::vector<std::string> agents;
  for (std::size_t k = 0; k < roster.size(); ++k) {
    const std::string where = "agents[" + std::to_string(k) + "]";
    if (!roster[k].is_string()) Fail(where, "expected a name");
    std::string name = roster[k].get<std::string>();
    if (name.empty() || name.find(',') != std::string::npos ||
        Trim(name) != name) {
      Fail(where, "names must be non-empty, without commas or outer blanks");
    }
    for (const auto& prior : agents) {
      if (prior == name) {
        throw Error(ErrorCode::kValidationError,
                    where + ": duplicate agent name \"" + name + "\"");
      }
    }
    agents.push_back(std::move(name));
  }
  if (agents.size() > kEnumerationBound) {
    throw Error(ErrorCode::kBoundExceeded,
                std::to_string(agents.size()) +
                    " agents exceed the enumeration bound of " +
                    std::to_string(kEnumerationBound));
  }
  const auto n = static_cast<unsigned>(agents.size());

  const bool has_tables = doc.contains("tables");
  const bool has_exchange = doc.contains("exchange");
  if (has_tables == has_exchange) {
    Fail("document", "exactly one of \"tables\" or \"exchange\" is required");
  }

  std::optional<ExchangeScenario> exchange;
  std::optional<ISNGame> game;
  if (has_tables) {
    const json& tables = doc.at("tables");
    CoalitionTable t = ReadTable(agents, Require(tables, "T", "tables"), "tables.T");
    CoalitionTable o = ReadTable(agents, Require(tables, "O", "tables"), "tables.O");
    game.emplace(Validated([&] { return MakeIsnGame(n, t, o); }));
  } else {
    exchange = ReadExchange(agents, doc.at("exchange"));
    game.emplace(Validated([&] { return ScenarioToGame(*exchange); }));
  }

  std::optional<Policy> policy;
  if (doc.contains("policy")) {
    policy = ReadPolicy(agents, doc.at("policy"));
    if (const PolicyVerdict verdict = ValidatePolicy(*policy); !verdict.valid) {
      throw Error(ErrorCode::kValidationError,
                  "PolicyInvalid: promoted groups " +
                      CoalitionLabel(agents, verdict.overlap->first) + " and " +
                      CoalitionLabel(agents, verdict.overlap->second) +
                      " overlap");
    }
  }
  return LoadedScenario{std::move(agents), std::move(*game), std::move(exchange),
                        std::move(policy)};
}

LoadedScenario LoadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseScenario(buffer.str());
}

}  // namespace isn
