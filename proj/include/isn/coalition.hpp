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

#ifndef ISN_COALITION_HPP
#define ISN_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace isn {

/// Dense agent index 0..n-1.
using AgentId = unsigned;

inline constexpr unsigned kMaxAgents = 64;

/// A set of agents stored as a bitmask. The mask doubles as the subset index
/// used by dense characteristic-function tables.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}
  Coalition(std::initializer_list<AgentId> members);

  static Coalition FromMembers(const std::vector<AgentId>& members);
  static constexpr Coalition Grand(unsigned n_agents) {
    return Coalition(n_agents >= 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n_agents) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr unsigned size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(AgentId i) const {
    return i < 64 && ((bits_ >> i) & 1U) != 0;
  }
  constexpr bool subset_of(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Coalition other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// True when every member has id < n_agents.
  constexpr bool within(unsigned n_agents) const {
    return subset_of(Grand(n_agents));
  }

  constexpr Coalition with(AgentId i) const {
    return Coalition(bits_ | (std::uint64_t{1} << i));
  }
  constexpr Coalition without(AgentId i) const {
    return Coalition(bits_ & ~(std::uint64_t{1} << i));
  }

  /// Ascending member ids.
  std::vector<AgentId> members() const;

  /// "{0,1,2}"
  std::string ToString() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Coalition, Coalition) = default;
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace isn

#endif  // ISN_COALITION_HPP
