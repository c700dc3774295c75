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

#ifndef ISN_SCENARIO_IO_HPP
#define ISN_SCENARIO_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isn/coalition.hpp"
#include "isn/coordination.hpp"
#include "isn/cost_model.hpp"
#include "isn/game.hpp"

namespace isn {

/// Scenario file contents after validation.
struct LoadedScenario {
  std::vector<std::string> agents;
  ISNGame game;
  std::optional<ExchangeScenario> exchange;  // set for exchange-mode files
  std::optional<Policy> policy;
};

/// Parses a JSON scenario document:
///
///   {
///     "agents": ["A", "B", "C"],
///     "tables": {"T": {"A,B": 100, ...}, "O": {"A,B": "80", ...}},
///   or
///     "exchange": {
///       "streams": [{"firm": "A", "resource": "r", "kind": "waste-offer",
///                    "quantity": 10, "discharge_cost": 5,
///                    "treatment_cost": 0}, ...],
///       "transport": [{"from": "A", "to": "B", "resource": "r",
///                      "cost": 1}, ...],
///       "transaction": [{"from": "A", "to": "B", "cost": 10}, ...]
///     },
///     "policy": {"promoted": ["A,B,C"], "prohibited": [["A", "B"]]}
///   }
///
/// Numbers are JSON integers or strings holding an integer, "a/b" or an
/// exact decimal. Syntax and shape problems throw kParseError naming the
/// line or field; model-level rejections (missing coalitions, overlapping
/// promoted groups, ...) throw kValidationError carrying the original error
/// name. kBoundExceeded passes through unchanged.
LoadedScenario ParseScenario(std::string_view json_text);
LoadedScenario LoadScenario(const std::string& path);

/// "A,B" or ["A", "B"] style lookup helpers shared with the reports.
std::string CoalitionKey(const std::vector<std::string>& agents, Coalition s);
std::string CoalitionLabel(const std::vector<std::string>& agents, Coalition s);
Coalition ParseCoalitionKey(const std::vector<std::string>& agents,
                            std::string_view key);

}  // namespace isn

#endif  // ISN_SCENARIO_IO_HPP
