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

#include "isn/cost_model.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "isn/error.hpp"
#include "isn/simplex.hpp"

namespace isn {
namespace {

// A route from one offer stream to one demand stream with positive net
// saving per unit shipped.
struct Arc {
  std::size_t offer = 0;
  std::size_t demand = 0;
  std::size_t pair = 0;  // index into the candidate pair list
  Money saving;
};

struct FirmPair {
  AgentId from = 0;
  AgentId to = 0;
  Money fixed_cost;
};

Money TransactionCost(const ExchangeScenario& scenario, AgentId from,
                      AgentId to) {
  auto it = scenario.transaction.find({from, to});
  return it == scenario.transaction.end() ? Money(0) : it->second;
}

class PlanSearch {
 public:
  PlanSearch(const ExchangeScenario& scenario, Coalition s)
      : scenario_(scenario) {
    const auto& streams = scenario.streams;
    std::map<std::pair<AgentId, AgentId>, std::size_t> pair_index;
    std::vector<Arc> raw;
    for (std::size_t o = 0; o < streams.size(); ++o) {
      const ResourceStream& offer = streams[o];
      if (offer.kind != StreamKind::kWasteOffer || !s.contains(offer.firm) ||
          sgn(offer.quantity) == 0) {
        continue;
      }
      for (std::size_t d = 0; d < streams.size(); ++d) {
        const ResourceStream& demand = streams[d];
        if (demand.kind != StreamKind::kInputDemand ||
            !s.contains(demand.firm) || demand.firm == offer.firm ||
            demand.resource != offer.resource || sgn(demand.quantity) == 0) {
          continue;
        }
        auto route = scenario.transport.find(
            {offer.firm, demand.firm, offer.resource});
        if (route == scenario.transport.end()) continue;
        Money saving = offer.unit_discharge_cost + demand.unit_purchase_cost -
                       offer.unit_treatment_cost -
                       demand.unit_treatment_cost - route->second;
        if (sgn(saving) <= 0) continue;
        raw.push_back({o, d, 0, std::move(saving)});
        pair_index.emplace(std::make_pair(offer.firm, demand.firm), 0);
      }
    }
    for (auto& [key, index] : pair_index) {
      index = pairs_.size();
      pairs_.push_back(
          {key.first, key.second, TransactionCost(scenario, key.first, key.second)});
    }
    for (Arc& arc : raw) {
      arc.pair = pair_index.at(
          {streams[arc.offer].firm, streams[arc.demand].firm});
    }
    arcs_ = std::move(raw);
  }

  // Best net saving (avoided cost minus treatment, transport and fixed
  // charges) and the arc flows attaining it.
  std::pair<Money, std::vector<Money>> Run() {
    best_saving_ = 0;
    best_flows_.assign(arcs_.size(), Money(0));
    std::vector<bool> included(pairs_.size(), false);
    Explore(0, included, Money(0));
    return {best_saving_, best_flows_};
  }

  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  // Continuous transport LP over arcs whose pair satisfies `allowed`.
  LpSolution SolveRelaxation(const std::vector<bool>& allowed,
                             std::size_t first_free) const {
    std::vector<std::size_t> active;
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      const std::size_t p = arcs_[a].pair;
      if (p >= first_free || allowed[p]) active.push_back(a);
    }
    // Capacity rows per stream touched by an active arc.
    std::map<std::size_t, std::size_t> row_of;
    for (std::size_t a : active) {
      row_of.emplace(arcs_[a].offer, 0);
      row_of.emplace(arcs_[a].demand, 0);
    }
    PackingLp lp;
    for (auto& [stream, row] : row_of) {
      row = lp.rhs.size();
      lp.rhs.push_back(scenario_.streams[stream].quantity);
    }
    lp.rows.assign(lp.rhs.size(), std::vector<Money>(active.size(), Money(0)));
    for (std::size_t col = 0; col < active.size(); ++col) {
      const Arc& arc = arcs_[active[col]];
      lp.objective.push_back(arc.saving);
      lp.rows[row_of.at(arc.offer)][col] = 1;
      lp.rows[row_of.at(arc.demand)][col] = 1;
    }
    LpSolution sol = SolvePackingLp(lp);
    std::vector<Money> flows(arcs_.size(), Money(0));
    for (std::size_t col = 0; col < active.size(); ++col) {
      flows[active[col]] = sol.primal[col];
    }
    sol.primal = std::move(flows);
    return sol;
  }

  // Pairs [0, index) are decided by `included`; the rest are free and
  // charged nothing, which makes the relaxation an upper bound.
  void Explore(std::size_t index, std::vector<bool>& included,
               const Money& fixed_so_far) {
    LpSolution relaxed = SolveRelaxation(included, index);
    Money bound = relaxed.objective_value - fixed_so_far;
    if (bound <= best_saving_) return;
    if (index == pairs_.size()) {
      best_saving_ = std::move(bound);
      best_flows_ = std::move(relaxed.primal);
      return;
    }
    Explore(index + 1, included, fixed_so_far);
    included[index] = true;
    Explore(index + 1, included, fixed_so_far + pairs_[index].fixed_cost);
    included[index] = false;
  }

  const ExchangeScenario& scenario_;
  std::vector<FirmPair> pairs_;
  std::vector<Arc> arcs_;
  Money best_saving_;
  std::vector<Money> best_flows_;
};

bool ShipmentLess(const Shipment& a, const Shipment& b) {
  return std::tie(a.from, a.to, a.resource, a.offer_stream, a.demand_stream) <
         std::tie(b.from, b.to, b.resource, b.offer_stream, b.demand_stream);
}

void RequireNonnegative(const Money& m, const std::string& what) {
  if (sgn(m) < 0) {
    throw Error(ErrorCode::kInvalidStream, what + " is negative");
  }
}

}  // namespace

void ExchangeScenario::Validate() const {
  for (std::size_t k = 0; k < streams.size(); ++k) {
    const ResourceStream& st = streams[k];
    const std::string where = "stream " + std::to_string(k);
    if (st.firm >= n_agents) {
      throw Error(ErrorCode::kUnknownAgent,
                  where + " belongs to unknown firm " + std::to_string(st.firm));
    }
    RequireNonnegative(st.quantity, where + " quantity");
    RequireNonnegative(st.unit_discharge_cost, where + " discharge cost");
    RequireNonnegative(st.unit_purchase_cost, where + " purchase cost");
    RequireNonnegative(st.unit_treatment_cost, where + " treatment cost");
    if (st.kind == StreamKind::kWasteOffer && sgn(st.unit_purchase_cost) != 0) {
      throw Error(ErrorCode::kInvalidStream,
                  where + " is a waste offer with a purchase cost");
    }
    if (st.kind == StreamKind::kInputDemand &&
        sgn(st.unit_discharge_cost) != 0) {
      throw Error(ErrorCode::kInvalidStream,
                  where + " is an input demand with a discharge cost");
    }
  }
  for (const auto& [key, cost] : transport) {
    const auto& [from, to, resource] = key;
    if (from >= n_agents || to >= n_agents) {
      throw Error(ErrorCode::kUnknownAgent,
                  "transport route for " + resource + " leaves the roster");
    }
    RequireNonnegative(cost, "transport cost for " + resource);
  }
  for (const auto& [key, cost] : transaction) {
    if (key.first >= n_agents || key.second >= n_agents) {
      throw Error(ErrorCode::kUnknownAgent, "transaction pair leaves the roster");
    }
    RequireNonnegative(cost, "transaction cost");
  }
}

Money TValue(const ExchangeScenario& scenario, Coalition s) {
  Money total = 0;
  for (const ResourceStream& st : scenario.streams) {
    if (!s.contains(st.firm)) continue;
    total += st.quantity * (st.kind == StreamKind::kWasteOffer
                                ? st.unit_discharge_cost
                                : st.unit_purchase_cost);
  }
  return total;
}

PlanResult OptimalExchangePlan(const ExchangeScenario& scenario, Coalition s) {
  PlanSearch search(scenario, s);
  auto [saving, flows] = search.Run();
  PlanResult result;
  for (std::size_t a = 0; a < flows.size(); ++a) {
    if (sgn(flows[a]) == 0) continue;
    const Arc& arc = search.arcs()[a];
    const ResourceStream& offer = scenario.streams[arc.offer];
    const ResourceStream& demand = scenario.streams[arc.demand];
    result.plan.shipments.push_back({offer.firm, demand.firm, offer.resource,
                                     flows[a], arc.offer, arc.demand});
  }
  std::sort(result.plan.shipments.begin(), result.plan.shipments.end(),
            ShipmentLess);
  result.cost = TValue(scenario, s) - saving;
  return result;
}

Money PlanCost(const ExchangeScenario& scenario, Coalition s,
               const ExchangePlan& plan) {
  const auto& streams = scenario.streams;
  std::vector<Money> shipped(streams.size(), Money(0));
  std::set<std::pair<AgentId, AgentId>> active;
  Money cost = 0;
  for (const Shipment& sh : plan.shipments) {
    const ResourceStream& offer = streams.at(sh.offer_stream);
    const ResourceStream& demand = streams.at(sh.demand_stream);
    if (!s.contains(sh.from) || !s.contains(sh.to) || offer.firm != sh.from ||
        demand.firm != sh.to || offer.resource != sh.resource ||
        demand.resource != sh.resource) {
      throw Error(ErrorCode::kValidationError,
                  "shipment does not match its streams or leaves the coalition");
    }
    auto route = scenario.transport.find({sh.from, sh.to, sh.resource});
    if (route == scenario.transport.end()) {
      throw Error(ErrorCode::kValidationError, "shipment uses a missing route");
    }
    shipped[sh.offer_stream] += sh.quantity;
    shipped[sh.demand_stream] += sh.quantity;
    cost += sh.quantity * (offer.unit_treatment_cost +
                           demand.unit_treatment_cost + route->second);
    if (sgn(sh.quantity) > 0) active.emplace(sh.from, sh.to);
  }
  for (const auto& [from, to] : active) cost += TransactionCost(scenario, from, to);
  for (std::size_t k = 0; k < streams.size(); ++k) {
    const ResourceStream& st = streams[k];
    if (!s.contains(st.firm)) continue;
    if (shipped[k] > st.quantity) {
      throw Error(ErrorCode::kValidationError,
                  "stream " + std::to_string(k) + " is over-shipped");
    }
    const Money rest = st.quantity - shipped[k];
    cost += rest * (st.kind == StreamKind::kWasteOffer ? st.unit_discharge_cost
                                                       : st.unit_purchase_cost);
  }
  return cost;
}

ISNGame ScenarioToGame(const ExchangeScenario& scenario, unsigned bound) {
  if (scenario.n_agents > bound || scenario.n_agents > kEnumerationBound) {
    throw Error(ErrorCode::kBoundExceeded,
                std::to_string(scenario.n_agents) +
                    " agents exceed the enumeration bound of " +
                    std::to_string(std::min(bound, kEnumerationBound)));
  }
  scenario.Validate();
  CoalitionTable t_table;
  CoalitionTable o_table;
  const std::uint64_t count = std::uint64_t{1} << scenario.n_agents;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Coalition s(mask);
    if (s.size() < 2) continue;
    t_table.emplace(s, TValue(scenario, s));
    o_table.emplace(s, OptimalExchangePlan(scenario, s).cost);
  }
  return MakeIsnGame(scenario.n_agents, t_table, o_table);
}

}  // namespace isn
