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

#ifndef ISN_GAME_HPP
#define ISN_GAME_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "isn/coalition.hpp"
#include "isn/money.hpp"

namespace isn {

/// Largest roster for which coalition tables are enumerated.
inline constexpr unsigned kEnumerationBound = 16;

using CoalitionTable = std::map<Coalition, Money>;

/// Transferable-utility game stored as a dense table over all 2^n subsets.
/// Values are arbitrary (coordinated games may be negative or carry nonzero
/// singleton values); ISNGame adds the normalization guarantees.
class TableGame {
 public:
  /// All-zero game. Throws kBoundExceeded when n_agents > kEnumerationBound.
  explicit TableGame(unsigned n_agents);
  TableGame(unsigned n_agents,
            const std::function<Money(Coalition)>& characteristic);

  unsigned n_agents() const { return n_agents_; }
  Coalition grand() const { return Coalition::Grand(n_agents_); }

  /// Throws kUnknownAgent when s mentions an id outside the roster.
  const Money& value(Coalition s) const;

  /// Dense view indexed by subset mask.
  const std::vector<Money>& values() const { return values_; }

 private:
  unsigned n_agents_;
  std::vector<Money> values_;
};

/// ISN game: v(S) = T(S) - O(S) for |S| >= 2, v(S) = 0 otherwise.
class ISNGame {
 public:
  /// `values` must be total over |S| >= 2; singleton and empty entries are
  /// ignored.
  ISNGame(unsigned n_agents, const CoalitionTable& values);

  unsigned n_agents() const { return table_.n_agents(); }
  Coalition grand() const { return table_.grand(); }
  const Money& value(Coalition s) const { return table_.value(s); }

  const TableGame& table() const { return table_; }
  operator const TableGame&() const { return table_; }  // NOLINT

 private:
  TableGame table_;
};

/// Builds v = T - O. Throws kMissingCoalition when either table lacks a
/// coalition of size >= 2, kAgentCountMismatch when a key references an id
/// >= n_agents.
ISNGame MakeIsnGame(unsigned n_agents, const CoalitionTable& t_table,
                    const CoalitionTable& o_table);

struct SuperadditivityVerdict {
  bool holds = true;
  /// First violating disjoint pair (S, T) with v(S u T) < v(S) + v(T).
  std::optional<std::pair<Coalition, Coalition>> counterexample;
};

/// Restriction of `game` to `members`, relabelled so that the k-th smallest
/// member becomes agent k.
TableGame Subgame(const TableGame& game, Coalition members);

/// Scans disjoint nonempty pairs with mask(S) < mask(T) in ascending order.
SuperadditivityVerdict CheckSuperadditive(const TableGame& game);

}  // namespace isn

#endif  // ISN_GAME_HPP
