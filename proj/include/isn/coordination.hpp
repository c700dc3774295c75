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

#ifndef ISN_COORDINATION_HPP
#define ISN_COORDINATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "isn/coalition.hpp"
#include "isn/game.hpp"
#include "isn/mcnet.hpp"
#include "isn/money.hpp"

namespace isn {

enum class PolicyLabel { kPromoted, kPermitted, kProhibited };

const char* ToString(PolicyLabel label);

/// Labels groups of two or more agents; every other group is permitted.
class Policy {
 public:
  explicit Policy(unsigned n_agents) : n_agents_(n_agents) {}

  /// Throws kValidationError for groups smaller than two, groups outside the
  /// roster, or a group labelled twice.
  void Label(Coalition group, PolicyLabel label);

  unsigned n_agents() const { return n_agents_; }
  /// Labelled groups in insertion order.
  const std::vector<std::pair<Coalition, PolicyLabel>>& entries() const {
    return entries_;
  }
  std::vector<Coalition> Groups(PolicyLabel label) const;

 private:
  unsigned n_agents_;
  std::vector<std::pair<Coalition, PolicyLabel>> entries_;
};

PolicyLabel Classify(const Policy& policy, Coalition s);

/// Subsidies (> 0) and taxes (< 0) share the MC-Net representation.
using IncentiveNet = MCNet;

Money IncentiveValue(const IncentiveNet& net, Coalition s);

struct Promotion {
  std::optional<MCNetRule> rule;  // absent when already implementable
  Money iota_min;
};

/// Smallest subsidy on exactly `target` that makes the target subgame
/// implementable. A subsidy iota on the subgame's grand coalition moves every
/// member's Shapley payoff by iota/k and leaves proper subsets untouched, so
///   iota_min = max(0, max_{S strictly inside target} (v(S) - phi(S)) k/|S|).
/// Throws kTargetTooSmall when |target| < 2.
Promotion SynthesizePromotion(const TableGame& game, Coalition target);

/// Tax on exactly `target` bringing its coordinated value to -epsilon, below
/// the zero its members get alone. Returns nullopt when v(target) is already
/// -epsilon. Throws kTargetTooSmall, kNonpositiveEpsilon.
std::optional<MCNetRule> SynthesizeProhibition(const TableGame& game,
                                               Coalition target,
                                               const Money& epsilon);

/// c(S) = v(S) + iota(S).
class CoordinatedGame {
 public:
  CoordinatedGame(TableGame base, IncentiveNet incentives);

  unsigned n_agents() const { return base_.n_agents(); }
  const TableGame& base() const { return base_; }
  const IncentiveNet& incentives() const { return incentives_; }
  const TableGame& coordinated() const { return coordinated_; }
  const Money& value(Coalition s) const { return coordinated_.value(s); }

  /// compose(from_isn_game(base), incentives); evaluates to the same c.
  MCNet AsMCNet() const;

 private:
  TableGame base_;
  IncentiveNet incentives_;
  TableGame coordinated_;
};

/// Throws kRosterMismatch when the rosters differ.
CoordinatedGame Coordinate(const TableGame& game, const IncentiveNet& incentives);

struct PolicyVerdict {
  bool valid = true;
  std::optional<std::pair<Coalition, Coalition>> overlap;
};

/// Promoted groups must be pairwise disjoint.
PolicyVerdict ValidatePolicy(const Policy& policy);

/// Incentive net realising the policy: after coordination every promoted
/// subgame is implementable, every prohibited group has c(S) = -epsilon and
/// all other groups keep their value. Promotion rules come first, in policy
/// order, then prohibition rules. Taxes are settled before subsidies so a
/// prohibited group nested in a promoted one is priced in. Throws
/// kPolicyInvalid, kRosterMismatch, kNonpositiveEpsilon.
IncentiveNet EnforcePolicy(const TableGame& game, const Policy& policy,
                           const Money& epsilon);

}  // namespace isn

#endif  // ISN_COORDINATION_HPP
