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

#include "isn/game.hpp"

#include <string>

#include "isn/error.hpp"

namespace isn {
namespace {

void RequireWithinBound(unsigned n_agents) {
  if (n_agents > kEnumerationBound) {
    throw Error(ErrorCode::kBoundExceeded,
                std::to_string(n_agents) + " agents exceed the enumeration "
                "bound of " + std::to_string(kEnumerationBound));
  }
}

void RequireKeysWithin(unsigned n_agents, const CoalitionTable& table,
                       const char* name) {
  for (const auto& [s, _] : table) {
    if (!s.within(n_agents)) {
      throw Error(ErrorCode::kAgentCountMismatch,
                  std::string(name) + " table entry " + s.ToString() +
                      " references an agent outside 0.." +
                      std::to_string(n_agents - 1));
    }
  }
}

const Money& Lookup(const CoalitionTable& table, Coalition s,
                    const char* name) {
  auto it = table.find(s);
  if (it == table.end()) {
    throw Error(ErrorCode::kMissingCoalition,
                std::string(name) + " table has no entry for " + s.ToString());
  }
  return it->second;
}

}  // namespace

TableGame::TableGame(unsigned n_agents) : n_agents_(n_agents) {
  RequireWithinBound(n_agents);
  values_.assign(std::size_t{1} << n_agents, Money(0));
}

TableGame::TableGame(unsigned n_agents,
                     const std::function<Money(Coalition)>& characteristic)
    : TableGame(n_agents) {
  for (std::uint64_t mask = 0; mask < values_.size(); ++mask) {
    values_[mask] = characteristic(Coalition(mask));
  }
}

const Money& TableGame::value(Coalition s) const {
  if (!s.within(n_agents_)) {
    throw Error(ErrorCode::kUnknownAgent,
                s.ToString() + " is not a subset of a " +
                    std::to_string(n_agents_) + "-agent roster");
  }
  return values_[s.bits()];
}

ISNGame::ISNGame(unsigned n_agents, const CoalitionTable& values)
    : table_(n_agents) {
  if (n_agents == 0) {
    throw Error(ErrorCode::kAgentCountMismatch, "a game needs at least one agent");
  }
  RequireKeysWithin(n_agents, values, "value");
  table_ = TableGame(n_agents, [&](Coalition s) -> Money {
    if (s.size() < 2) return 0;
    return Lookup(values, s, "value");
  });
}

ISNGame MakeIsnGame(unsigned n_agents, const CoalitionTable& t_table,
                    const CoalitionTable& o_table) {
  if (n_agents == 0) {
    throw Error(ErrorCode::kAgentCountMismatch, "a game needs at least one agent");
  }
  RequireWithinBound(n_agents);
  RequireKeysWithin(n_agents, t_table, "T");
  RequireKeysWithin(n_agents, o_table, "O");
  CoalitionTable v;
  const std::uint64_t count = std::uint64_t{1} << n_agents;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Coalition s(mask);
    if (s.size() < 2) continue;
    v.emplace(s, Lookup(t_table, s, "T") - Lookup(o_table, s, "O"));
  }
  return ISNGame(n_agents, v);
}

TableGame Subgame(const TableGame& game, Coalition members) {
  if (!members.within(game.n_agents())) {
    throw Error(ErrorCode::kUnknownAgent,
                members.ToString() + " is outside the roster");
  }
  const std::vector<AgentId> ids = members.members();
  return TableGame(static_cast<unsigned>(ids.size()), [&](Coalition local) {
    Coalition global;
    for (AgentId k : local.members()) global = global.with(ids[k]);
    return game.value(global);
  });
}

SuperadditivityVerdict CheckSuperadditive(const TableGame& game) {
  const auto& v = game.values();
  const std::uint64_t full = game.grand().bits();
  for (std::uint64_t s = 1; s <= full; ++s) {
    const std::uint64_t rest = full & ~s;
    // Ascending submasks of the complement.
    for (std::uint64_t t = (0 - rest) & rest; t != 0; t = (t - rest) & rest) {
      if (t > s && v[s | t] < v[s] + v[t]) {
        return {false, std::make_pair(Coalition(s), Coalition(t))};
      }
    }
  }
  return {};
}

}  // namespace isn
