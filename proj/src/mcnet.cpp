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

#include "isn/mcnet.hpp"

#include <string>
#include <utility>

#include "isn/error.hpp"

namespace isn {

void MCNetRule::Validate() const {
  if (positive.intersects(negative)) {
    throw Error(ErrorCode::kInvalidRule,
                "positive " + positive.ToString() + " and negative " +
                    negative.ToString() + " patterns overlap");
  }
  if (positive.empty() && negative.empty()) {
    throw Error(ErrorCode::kInvalidRule, "rule mentions no agent");
  }
  if (sgn(value) == 0) {
    throw Error(ErrorCode::kInvalidRule, "rule value must be nonzero");
  }
}

bool Applicable(const MCNetRule& rule, Coalition s) {
  return rule.positive.subset_of(s) && !rule.negative.intersects(s);
}

MCNet::MCNet(unsigned n_agents, std::vector<MCNetRule> rules)
    : n_agents_(n_agents) {
  rules_.reserve(rules.size());
  for (auto& rule : rules) Add(std::move(rule));
}

void MCNet::Add(MCNetRule rule) {
  rule.Validate();
  if (!(rule.positive | rule.negative).within(n_agents_)) {
    throw Error(ErrorCode::kUnknownAgent,
                "rule mentions agents outside a " + std::to_string(n_agents_) +
                    "-agent roster");
  }
  rules_.push_back(std::move(rule));
}

Money MCNet::Evaluate(Coalition s) const {
  if (!s.within(n_agents_)) {
    throw Error(ErrorCode::kUnknownAgent, s.ToString() + " is outside the roster");
  }
  Money total = 0;
  for (const auto& rule : rules_) {
    if (Applicable(rule, s)) total += rule.value;
  }
  return total;
}

std::vector<std::size_t> MCNet::ApplicableRules(Coalition s) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    if (Applicable(rules_[k], s)) out.push_back(k);
  }
  return out;
}

MCNet FromIsnGame(const TableGame& game) {
  MCNet net(game.n_agents());
  const Coalition grand = game.grand();
  const auto& values = game.values();
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    Coalition s(mask);
    if (s.size() < 2 || sgn(values[mask]) == 0) continue;
    net.Add({s, grand - s, values[mask]});
  }
  return net;
}

Allocation RuleShapley(const MCNetRule& rule, unsigned n_agents) {
  Allocation phi(n_agents, Money(0));
  const unsigned p = rule.positive.size();
  const unsigned q = rule.negative.size();
  const Money total = Factorial(p + q);
  if (p > 0) {
    const Money share = rule.value * Factorial(p - 1) * Factorial(q) / total;
    for (AgentId i : rule.positive.members()) phi.at(i) = share;
  }
  if (q > 0) {
    const Money share = -rule.value * Factorial(p) * Factorial(q - 1) / total;
    for (AgentId i : rule.negative.members()) phi.at(i) = share;
  }
  return phi;
}

Allocation NetShapley(const MCNet& net) {
  Allocation phi(net.n_agents(), Money(0));
  for (const auto& rule : net.rules()) {
    Allocation part = RuleShapley(rule, net.n_agents());
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += part[i];
  }
  return phi;
}

MCNet Compose(const MCNet& a, const MCNet& b) {
  if (a.n_agents() != b.n_agents()) {
    throw Error(ErrorCode::kRosterMismatch,
                std::to_string(a.n_agents()) + " vs " +
                    std::to_string(b.n_agents()) + " agents");
  }
  MCNet out = a;
  for (const auto& rule : b.rules()) out.Add(rule);
  return out;
}

TableGame ToTableGame(const MCNet& net) {
  return TableGame(net.n_agents(),
                   [&](Coalition s) { return net.Evaluate(s); });
}

}  // namespace isn
