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

#ifndef ISN_SOLUTIONS_HPP
#define ISN_SOLUTIONS_HPP

#include <optional>

#include "isn/game.hpp"
#include "isn/money.hpp"

namespace isn {

/// Largest roster for the n!-ordering Shapley oracle.
inline constexpr unsigned kPermutationBound = 9;

/// Average marginal contribution over all n! orderings. Throws
/// kBoundExceeded above kPermutationBound agents.
Allocation ShapleyBruteforce(const TableGame& game);

/// Same value via the subset-weight formula
///   phi_i = sum_{S not containing i} |S|! (n-|S|-1)! / n! (v(S+i) - v(S)),
/// usable up to kEnumerationBound agents.
Allocation ShapleyValue(const TableGame& game);

enum class CoreStatus { kNonempty, kEmpty };

struct CoreResult {
  CoreStatus status = CoreStatus::kEmpty;
  std::optional<Allocation> witness;  // present iff nonempty
  /// min sum_i x_i subject to every coalition constraint x(S) >= v(S); the
  /// core is nonempty iff this equals v(N).
  Money min_total;
};

/// Decides nonemptiness of {x : x(N) = v(N), x(S) >= v(S) for all S} with an
/// exact LP and returns a core point when one exists.
CoreResult CoreNonempty(const TableGame& game);

/// x(N) = v(N) and x(S) >= v(S) for every nonempty S. Weak inequalities:
/// boundary allocations are in the core. Throws kLengthMismatch.
bool InCore(const TableGame& game, const Allocation& x);

/// First coalition whose constraint x fails (the grand coalition when
/// efficiency fails), or nullopt when x is in the core.
std::optional<Coalition> FirstCoreViolation(const TableGame& game,
                                            const Allocation& x);

/// Fair and stable: the Shapley allocation lies in the core.
bool IsImplementable(const TableGame& game);

}  // namespace isn

#endif  // ISN_SOLUTIONS_HPP
