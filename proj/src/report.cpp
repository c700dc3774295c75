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

#include "isn/report.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

#include "isn/coordination.hpp"
#include "isn/error.hpp"
#include "isn/mcnet.hpp"
#include "isn/solutions.hpp"

namespace isn {
namespace {

using Json = nlohmann::ordered_json;
using Names = std::vector<std::string>;

Json AllocationJson(const Names& agents, const Allocation& x) {
  Json out = Json::object();
  for (std::size_t i = 0; i < x.size(); ++i) out[agents[i]] = ToString(x[i]);
  return out;
}

void AllocationText(std::ostream& os, const Names& agents, const Allocation& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    os << "  " << agents[i] << " = " << ToString(x[i]) << '\n';
  }
}

// Coalitions of two or more agents, ascending mask.
std::vector<Coalition> Groups(unsigned n) {
  std::vector<Coalition> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) >= 2) out.emplace_back(mask);
  }
  return out;
}

Json ValuesJson(const Names& agents, const TableGame& game) {
  Json out = Json::object();
  for (Coalition s : Groups(game.n_agents())) {
    out[CoalitionKey(agents, s)] = ToString(game.value(s));
  }
  return out;
}

void ValuesText(std::ostream& os, const Names& agents, const TableGame& game) {
  for (Coalition s : Groups(game.n_agents())) {
    os << "  " << CoalitionLabel(agents, s) << " = " << ToString(game.value(s))
       << '\n';
  }
}

Json CoreJson(const Names& agents, const CoreResult& core) {
  Json out = Json::object();
  out["status"] = core.status == CoreStatus::kNonempty ? "nonempty" : "empty";
  out["min_total"] = ToString(core.min_total);
  if (core.witness) out["witness"] = AllocationJson(agents, *core.witness);
  return out;
}

void CoreText(std::ostream& os, const Names& agents, const CoreResult& core) {
  if (core.status == CoreStatus::kNonempty) {
    os << "core: nonempty\nwitness:\n";
    AllocationText(os, agents, *core.witness);
  } else {
    os << "core: empty (cheapest stable total " << ToString(core.min_total)
       << ")\n";
  }
}

struct Verdict {
  Allocation shapley;
  std::optional<Coalition> violation;
  bool implementable() const { return !violation.has_value(); }
};

Verdict Judge(const TableGame& game) {
  Verdict v;
  v.shapley = ShapleyValue(game);
  v.violation = FirstCoreViolation(game, v.shapley);
  return v;
}

std::string VerdictText(const Names& agents, const Verdict& v) {
  if (v.implementable()) return "yes";
  return "no (Shapley allocation violates " +
         CoalitionLabel(agents, *v.violation) + ")";
}

Json RuleJson(const Names& agents, const MCNetRule& rule) {
  Json out = Json::object();
  out["positive"] = CoalitionKey(agents, rule.positive);
  out["negative"] = CoalitionKey(agents, rule.negative);
  out["value"] = ToString(rule.value);
  return out;
}

std::string RuleText(const Names& agents, const MCNetRule& rule) {
  return "(" + CoalitionLabel(agents, rule.positive) + ", " +
         CoalitionLabel(agents, rule.negative) + ") -> " + ToString(rule.value);
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string RenderAnalyze(const LoadedScenario& scenario, ReportFormat format) {
  const Names& agents = scenario.agents;
  const TableGame& game = scenario.game.table();
  const SuperadditivityVerdict sa = CheckSuperadditive(game);
  const Verdict verdict = Judge(game);
  const CoreResult core = CoreNonempty(game);

  if (format == ReportFormat::kJson) {
    Json out = Json::object();
    out["agents"] = agents;
    out["values"] = ValuesJson(agents, game);
    out["superadditive"] = sa.holds;
    if (!sa.holds) {
      out["superadditivity_counterexample"] = {
          CoalitionKey(agents, sa.counterexample->first),
          CoalitionKey(agents, sa.counterexample->second)};
    }
    out["shapley"] = AllocationJson(agents, verdict.shapley);
    out["core"] = CoreJson(agents, core);
    out["implementable"] = verdict.implementable();
    if (!verdict.implementable()) {
      out["shapley_violates"] = CoalitionKey(agents, *verdict.violation);
    }
    return Dump(out);
  }

  std::ostringstream os;
  os << "agents: ";
  for (std::size_t i = 0; i < agents.size(); ++i) {
    os << (i ? ", " : "") << agents[i];
  }
  os << "\nsuperadditive: ";
  if (sa.holds) {
    os << "yes\n";
  } else {
    os << "no (" << CoalitionLabel(agents, sa.counterexample->first) << " + "
       << CoalitionLabel(agents, sa.counterexample->second) << ")\n";
  }
  os << "values:\n";
  ValuesText(os, agents, game);
  os << "shapley:\n";
  AllocationText(os, agents, verdict.shapley);
  CoreText(os, agents, core);
  os << "implementable: " << VerdictText(agents, verdict) << '\n';
  return os.str();
}

std::string RenderShapley(const LoadedScenario& scenario, ReportFormat format) {
  const Allocation phi = ShapleyValue(scenario.game.table());
  if (format == ReportFormat::kJson) {
    Json out = Json::object();
    out["shapley"] = AllocationJson(scenario.agents, phi);
    return Dump(out);
  }
  std::ostringstream os;
  os << "shapley:\n";
  AllocationText(os, scenario.agents, phi);
  return os.str();
}

std::string RenderCore(const LoadedScenario& scenario, ReportFormat format) {
  const CoreResult core = CoreNonempty(scenario.game.table());
  if (format == ReportFormat::kJson) {
    Json out = Json::object();
    out["core"] = CoreJson(scenario.agents, core);
    return Dump(out);
  }
  std::ostringstream os;
  CoreText(os, scenario.agents, core);
  return os.str();
}

std::string RenderMcnet(const LoadedScenario& scenario, ReportFormat format) {
  const MCNet net = FromIsnGame(scenario.game.table());
  if (format == ReportFormat::kJson) {
    Json rules = Json::array();
    for (const auto& rule : net.rules()) {
      rules.push_back(RuleJson(scenario.agents, rule));
    }
    Json out = Json::object();
    out["rules"] = std::move(rules);
    return Dump(out);
  }
  std::ostringstream os;
  os << "mcnet: " << net.rules().size() << " rules\n";
  for (const auto& rule : net.rules()) {
    os << "  " << RuleText(scenario.agents, rule) << '\n';
  }
  return os.str();
}

std::string RenderEnforce(const LoadedScenario& scenario, const Money& epsilon,
                          ReportFormat format) {
  if (!scenario.policy) {
    throw Error(ErrorCode::kValidationError,
                "no policy section; enforce needs promoted or prohibited groups");
  }
  const Names& agents = scenario.agents;
  const Policy& policy = *scenario.policy;
  const TableGame& base = scenario.game.table();
  const IncentiveNet incentives = EnforcePolicy(base, policy, epsilon);
  const CoordinatedGame coordinated = Coordinate(base, incentives);
  const TableGame& c = coordinated.coordinated();
  const Verdict overall = Judge(c);
  const CoreResult core = CoreNonempty(c);

  Json groups = Json::array();
  std::ostringstream text;
  for (const auto& [group, label] : policy.entries()) {
    Json g = Json::object();
    g["group"] = CoalitionKey(agents, group);
    g["label"] = ToString(label);
    g["base_value"] = ToString(base.value(group));
    g["coordinated_value"] = ToString(c.value(group));
    text << "  " << CoalitionLabel(agents, group) << ' ' << ToString(label)
         << ": ";
    if (label == PolicyLabel::kPromoted) {
      const TableGame sub = Subgame(c, group);
      const Verdict v = Judge(sub);
      const std::vector<AgentId> ids = group.members();
      Json phi = Json::object();
      text << "implementable=" << VerdictText(agents, v) << ", shapley (";
      for (std::size_t k = 0; k < ids.size(); ++k) {
        phi[agents[ids[k]]] = ToString(v.shapley[k]);
        text << (k ? ", " : "") << agents[ids[k]] << '='
             << ToString(v.shapley[k]);
      }
      text << ")\n";
      g["shapley"] = std::move(phi);
      g["implementable"] = v.implementable();
    } else {
      const bool unstable = sgn(c.value(group)) < 0;
      text << "c = " << ToString(c.value(group))
           << (unstable ? " < 0 (unstable)" : " >= 0") << '\n';
      g["unstable"] = unstable;
    }
    groups.push_back(std::move(g));
  }

  if (format == ReportFormat::kJson) {
    Json out = Json::object();
    out["agents"] = agents;
    out["epsilon"] = ToString(epsilon);
    Json rules = Json::array();
    for (const auto& rule : incentives.rules()) {
      rules.push_back(RuleJson(agents, rule));
    }
    out["incentives"] = std::move(rules);
    out["coordinated_values"] = ValuesJson(agents, c);
    out["groups"] = std::move(groups);
    out["shapley"] = AllocationJson(agents, overall.shapley);
    out["core"] = CoreJson(agents, core);
    out["implementable"] = overall.implementable();
    return Dump(out);
  }

  std::ostringstream os;
  os << "epsilon: " << ToString(epsilon) << '\n';
  os << "incentive rules: " << incentives.rules().size() << '\n';
  for (const auto& rule : incentives.rules()) {
    os << "  " << RuleText(agents, rule) << '\n';
  }
  os << "coordinated values:\n";
  ValuesText(os, agents, c);
  os << "groups:\n" << text.str();
  os << "coordinated shapley:\n";
  AllocationText(os, agents, overall.shapley);
  CoreText(os, agents, core);
  os << "implementable: " << VerdictText(agents, overall) << '\n';
  return os.str();
}

}  // namespace isn
