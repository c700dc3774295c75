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

#include "isn/coordination.hpp"

#include <algorithm>
#include <string>

#include "isn/error.hpp"
#include "isn/solutions.hpp"

namespace isn {
namespace {

void RequireTarget(const TableGame& game, Coalition target) {
  if (!target.within(game.n_agents())) {
    throw Error(ErrorCode::kUnknownAgent,
                target.ToString() + " is outside the roster");
  }
  if (target.size() < 2) {
    throw Error(ErrorCode::kTargetTooSmall,
                target.ToString() + " has fewer than two members");
  }
}

void RequireSameRoster(unsigned a, unsigned b) {
  if (a != b) {
    throw Error(ErrorCode::kRosterMismatch,
                std::to_string(a) + " vs " + std::to_string(b) + " agents");
  }
}

}  // namespace

const char* ToString(PolicyLabel label) {
  switch (label) {
    case PolicyLabel::kPromoted: return "promoted";
    case PolicyLabel::kPermitted: return "permitted";
    case PolicyLabel::kProhibited: return "prohibited";
  }
  return "permitted";
}

void Policy::Label(Coalition group, PolicyLabel label) {
  if (!group.within(n_agents_)) {
    throw Error(ErrorCode::kValidationError,
                group.ToString() + " is outside the roster");
  }
  if (group.size() < 2) {
    throw Error(ErrorCode::kValidationError,
                "policy group " + group.ToString() +
                    " must have at least two members");
  }
  for (const auto& [g, _] : entries_) {
    if (g == group) {
      throw Error(ErrorCode::kValidationError,
                  group.ToString() + " is labelled twice");
    }
  }
  entries_.emplace_back(group, label);
}

std::vector<Coalition> Policy::Groups(PolicyLabel label) const {
  std::vector<Coalition> out;
  for (const auto& [g, l] : entries_) {
    if (l == label) out.push_back(g);
  }
  return out;
}

PolicyLabel Classify(const Policy& policy, Coalition s) {
  for (const auto& [g, l] : policy.entries()) {
    if (g == s) return l;
  }
  return PolicyLabel::kPermitted;
}

Money IncentiveValue(const IncentiveNet& net, Coalition s) {
  return net.Evaluate(s);
}

Promotion SynthesizePromotion(const TableGame& game, Coalition target) {
  RequireTarget(game, target);
  const TableGame sub = Subgame(game, target);
  const Allocation phi = ShapleyValue(sub);
  const unsigned k = sub.n_agents();
  const std::uint64_t full = sub.grand().bits();

  Promotion out;
  out.iota_min = 0;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Money shortfall = sub.values()[mask];
    for (AgentId i : Coalition(mask).members()) shortfall -= phi[i];
    if (sgn(shortfall) <= 0) continue;
    Money needed = shortfall * k / std::popcount(mask);
    if (needed > out.iota_min) out.iota_min = needed;
  }
  if (sgn(out.iota_min) > 0) {
    out.rule = MCNetRule{target, game.grand() - target, out.iota_min};
  }
  return out;
}

std::optional<MCNetRule> SynthesizeProhibition(const TableGame& game,
                                               Coalition target,
                                               const Money& epsilon) {
  RequireTarget(game, target);
  if (sgn(epsilon) <= 0) {
    throw Error(ErrorCode::kNonpositiveEpsilon,
                "epsilon must be positive, got " + ToString(epsilon));
  }
  Money tax = -(game.value(target) + epsilon);
  if (sgn(tax) == 0) return std::nullopt;
  return MCNetRule{target, game.grand() - target, tax};
}

CoordinatedGame::CoordinatedGame(TableGame base, IncentiveNet incentives)
    : base_((RequireSameRoster(base.n_agents(), incentives.n_agents()),
             std::move(base))),
      incentives_(std::move(incentives)),
      coordinated_(base_.n_agents(), [&](Coalition s) -> Money {
        return base_.value(s) + incentives_.Evaluate(s);
      }) {}

MCNet CoordinatedGame::AsMCNet() const {
  return Compose(FromIsnGame(base_), incentives_);
}

CoordinatedGame Coordinate(const TableGame& game,
                           const IncentiveNet& incentives) {
  return CoordinatedGame(game, incentives);
}

PolicyVerdict ValidatePolicy(const Policy& policy) {
  const std::vector<Coalition> promoted =
      policy.Groups(PolicyLabel::kPromoted);
  for (std::size_t a = 0; a < promoted.size(); ++a) {
    for (std::size_t b = a + 1; b < promoted.size(); ++b) {
      if (promoted[a].intersects(promoted[b])) {
        return {false, std::make_pair(promoted[a], promoted[b])};
      }
    }
  }
  return {};
}

IncentiveNet EnforcePolicy(const TableGame& game, const Policy& policy,
                           const Money& epsilon) {
  RequireSameRoster(game.n_agents(), policy.n_agents());
  if (const PolicyVerdict verdict = ValidatePolicy(policy); !verdict.valid) {
    throw Error(ErrorCode::kPolicyInvalid,
                "promoted groups " + verdict.overlap->first.ToString() +
                    " and " + verdict.overlap->second.ToString() + " overlap");
  }
  if (sgn(epsilon) <= 0) {
    throw Error(ErrorCode::kNonpositiveEpsilon,
                "epsilon must be positive, got " + ToString(epsilon));
  }

  IncentiveNet taxes(game.n_agents());
  for (Coalition group : policy.Groups(PolicyLabel::kProhibited)) {
    if (auto rule = SynthesizeProhibition(game, group, epsilon)) {
      taxes.Add(*rule);
    }
  }
  const CoordinatedGame taxed = Coordinate(game, taxes);

  IncentiveNet out(game.n_agents());
  for (Coalition group : policy.Groups(PolicyLabel::kPromoted)) {
    if (auto promotion = SynthesizePromotion(taxed.coordinated(), group);
        promotion.rule) {
      out.Add(*promotion.rule);
    }
  }
  for (const auto& rule : taxes.rules()) out.Add(rule);
  return out;
}

}  // namespace isn
