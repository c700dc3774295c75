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

#ifndef ISN_MCNET_HPP
#define ISN_MCNET_HPP

#include <vector>

#include "isn/coalition.hpp"
#include "isn/game.hpp"
#include "isn/money.hpp"

namespace isn {

/// Basic marginal-contribution rule (positive, negative) -> value. Applies to
/// S when positive is a subset of S and S avoids every negative literal.
struct MCNetRule {
  Coalition positive;
  Coalition negative;
  Money value;

  /// Throws kInvalidRule when the patterns overlap, are both empty, or the
  /// value is zero.
  void Validate() const;

  friend bool operator==(const MCNetRule&, const MCNetRule&) = default;
};

bool Applicable(const MCNetRule& rule, Coalition s);

/// Ordered rule list over a fixed roster; rule indices are positions.
class MCNet {
 public:
  explicit MCNet(unsigned n_agents) : n_agents_(n_agents) {}
  /// Validates each rule and that it only mentions roster agents.
  MCNet(unsigned n_agents, std::vector<MCNetRule> rules);

  unsigned n_agents() const { return n_agents_; }
  const std::vector<MCNetRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  void Add(MCNetRule rule);

  /// Sum of applicable rule values; throws kUnknownAgent for foreign ids.
  Money Evaluate(Coalition s) const;
  /// Indices of the rules applicable to s.
  std::vector<std::size_t> ApplicableRules(Coalition s) const;

 private:
  unsigned n_agents_;
  std::vector<MCNetRule> rules_;
};

/// One rule (S, N \ S) -> v(S) per coalition with |S| >= 2 and v(S) != 0,
/// in ascending subset-mask order.
MCNet FromIsnGame(const TableGame& game);

/// Shapley value of the single-rule game. With p = |positive| and
/// q = |negative|, positive agents get value (p-1)! q! / (p+q)!, negative
/// agents get -value p! (q-1)! / (p+q)!, everyone else 0.
Allocation RuleShapley(const MCNetRule& rule, unsigned n_agents);

/// Sum of RuleShapley over all rules (Shapley is linear). Runs in time linear
/// in the rule count; no roster bound.
Allocation NetShapley(const MCNet& net);

/// Concatenation; throws kRosterMismatch when the rosters differ.
MCNet Compose(const MCNet& a, const MCNet& b);

/// Dense table of the represented game (n <= kEnumerationBound).
TableGame ToTableGame(const MCNet& net);

}  // namespace isn

#endif  // ISN_MCNET_HPP
