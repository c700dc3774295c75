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

#ifndef ISN_COST_MODEL_HPP
#define ISN_COST_MODEL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "isn/coalition.hpp"
#include "isn/game.hpp"
#include "isn/money.hpp"

namespace isn {

enum class StreamKind { kWasteOffer, kInputDemand };

/// A firm's waste output or primary-input need for one resource. Costs are
/// per unit. Discharge applies to offers only, purchase to demands only;
/// treatment (making the waste usable) may sit on either side.
struct ResourceStream {
  AgentId firm = 0;
  std::string resource;
  StreamKind kind = StreamKind::kWasteOffer;
  Money quantity;
  Money unit_discharge_cost;
  Money unit_purchase_cost;
  Money unit_treatment_cost;
};

struct ExchangeScenario {
  unsigned n_agents = 0;
  std::vector<ResourceStream> streams;
  /// (from, to, resource) -> cost per unit shipped. No entry, no route.
  std::map<std::tuple<AgentId, AgentId, std::string>, Money> transport;
  /// (from, to) -> fixed cost charged once when the pair ships anything.
  /// No entry means zero.
  std::map<std::pair<AgentId, AgentId>, Money> transaction;

  /// Throws kInvalidStream / kUnknownAgent on negative quantities or costs,
  /// kind-inapplicable costs, or out-of-roster firms.
  void Validate() const;
};

struct Shipment {
  AgentId from = 0;
  AgentId to = 0;
  std::string resource;
  Money quantity;
  std::size_t offer_stream = 0;   // index into ExchangeScenario::streams
  std::size_t demand_stream = 0;

  friend bool operator==(const Shipment&, const Shipment&) = default;
};

struct ExchangePlan {
  /// Sorted by (from, to, resource, offer_stream, demand_stream).
  std::vector<Shipment> shipments;
};

struct PlanResult {
  ExchangePlan plan;
  Money cost;  // O(S)
};

/// T(S): discharge every offer and buy every demand of the firms in S.
Money TValue(const ExchangeScenario& scenario, Coalition s);

/// O(S) and a plan attaining it: the fixed-charge transportation problem
/// restricted to S, solved exactly by branch and bound over activated firm
/// pairs with an exact LP per node.
PlanResult OptimalExchangePlan(const ExchangeScenario& scenario, Coalition s);

/// Cost of executing `plan` inside S: shipped units pay treatment and
/// transport, activated pairs pay their transaction cost, and whatever is not
/// shipped is discharged or bought as usual.
Money PlanCost(const ExchangeScenario& scenario, Coalition s,
               const ExchangePlan& plan);

/// v(S) = T(S) - O(S). Throws kBoundExceeded above `bound` agents.
ISNGame ScenarioToGame(const ExchangeScenario& scenario,
                       unsigned bound = kEnumerationBound);

}  // namespace isn

#endif  // ISN_COST_MODEL_HPP
