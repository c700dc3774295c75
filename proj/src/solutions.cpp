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

#include "isn/solutions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "isn/error.hpp"

namespace isn {
namespace {

// Sum of x over every subset, indexed by mask.
std::vector<Money> SubsetSums(const Allocation& x) {
  std::vector<Money> sums(std::size_t{1} << x.size());
  sums[0] = 0;
  for (std::uint64_t mask = 1; mask < sums.size(); ++mask) {
    const auto low = static_cast<unsigned>(std::countr_zero(mask));
    sums[mask] = sums[mask & (mask - 1)] + x[low];
  }
  return sums;
}

// Revised simplex for the dual of the shifted core system,
//   max sum_S w(S) lambda_S  s.t.  sum_{S contains i} lambda_S <= 1,
//   lambda >= 0,
// one row per agent and one column per coalition with |S| >= 2. Only the
// n x n basis inverse is stored and all reduced costs are priced with one
// subset-sum pass, so a pivot costs O(2^n + n^2) rather than O(n 2^n).
// Bland's rule on column ordinals: coalition mask, then 2^n + slack index.
class CoreDualSimplex {
 public:
  CoreDualSimplex(unsigned n, const std::vector<Money>& excess)
      : n_(n),
        slack_base_(std::uint64_t{1} << n),
        excess_(excess),
        basis_(n),
        basis_cost_(n, Money(0)),
        inverse_(n, std::vector<Money>(n, Money(0))),
        beta_(n, Money(1)),
        prices_(n),
        priced_(slack_base_) {
    for (unsigned r = 0; r < n; ++r) {
      basis_[r] = slack_base_ + r;
      inverse_[r][r] = 1;
    }
  }

  // Optimal row prices y >= 0: the minimiser of the shifted core LP.
  std::vector<Money> Solve() {
    while (true) {
      UpdatePrices();
      const std::optional<std::uint64_t> entering = EnteringColumn();
      if (!entering) return prices_;
      const std::vector<Money> d = Direction(*entering);
      const std::optional<unsigned> leaving = LeavingRow(d);
      // The primal is feasible (take y large), so the dual is bounded.
      if (!leaving) {
        throw Error(ErrorCode::kValidationError, "core dual reported unbounded");
      }
      Pivot(*leaving, *entering, d);
    }
  }

 private:
  bool IsSlack(std::uint64_t column) const { return column >= slack_base_; }

  void UpdatePrices() {
    for (unsigned j = 0; j < n_; ++j) {
      prices_[j] = 0;
      for (unsigned r = 0; r < n_; ++r) {
        if (sgn(basis_cost_[r]) != 0 && sgn(inverse_[r][j]) != 0) {
          prices_[j] += basis_cost_[r] * inverse_[r][j];
        }
      }
    }
  }

  // Subset sums of the prices are built in mask order and only as far as
  // the first improving column, which is all Bland's rule looks at.
  std::optional<std::uint64_t> EnteringColumn() {
    priced_[0] = 0;
    for (std::uint64_t mask = 1; mask < slack_base_; ++mask) {
      const auto low = static_cast<unsigned>(std::countr_zero(mask));
      priced_[mask] = priced_[mask & (mask - 1)] + prices_[low];
      if (std::popcount(mask) >= 2 && excess_[mask] > priced_[mask]) {
        return mask;
      }
    }
    for (unsigned i = 0; i < n_; ++i) {
      if (sgn(prices_[i]) < 0) return slack_base_ + i;
    }
    return std::nullopt;
  }

  std::vector<Money> Direction(std::uint64_t column) const {
    std::vector<Money> d(n_, Money(0));
    for (unsigned r = 0; r < n_; ++r) {
      if (IsSlack(column)) {
        d[r] = inverse_[r][column - slack_base_];
      } else {
        for (std::uint64_t rest = column; rest != 0; rest &= rest - 1) {
          d[r] += inverse_[r][std::countr_zero(rest)];
        }
      }
    }
    return d;
  }

  std::optional<unsigned> LeavingRow(const std::vector<Money>& d) const {
    std::optional<unsigned> best;
    Money best_ratio;
    for (unsigned r = 0; r < n_; ++r) {
      if (sgn(d[r]) <= 0) continue;
      Money ratio = beta_[r] / d[r];
      if (!best || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void Pivot(unsigned row, std::uint64_t column, const std::vector<Money>& d) {
    const Money inv = 1 / d[row];
    for (Money& cell : inverse_[row]) cell *= inv;
    beta_[row] *= inv;
    for (unsigned r = 0; r < n_; ++r) {
      if (r == row || sgn(d[r]) == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        inverse_[r][j] -= d[r] * inverse_[row][j];
      }
      beta_[r] -= d[r] * beta_[row];
    }
    basis_[row] = column;
    basis_cost_[row] = IsSlack(column) ? Money(0) : excess_[column];
  }

  unsigned n_;
  std::uint64_t slack_base_;
  const std::vector<Money>& excess_;
  std::vector<std::uint64_t> basis_;  // column ordinals
  std::vector<Money> basis_cost_;
  std::vector<std::vector<Money>> inverse_;
  std::vector<Money> beta_;
  std::vector<Money> prices_;
  std::vector<Money> priced_;  // price sum over every subset
};

}  // namespace

Allocation ShapleyBruteforce(const TableGame& game) {
  const unsigned n = game.n_agents();
  if (n > kPermutationBound) {
    throw Error(ErrorCode::kBoundExceeded,
                std::to_string(n) + " agents exceed the permutation bound of " +
                    std::to_string(kPermutationBound));
  }
  std::vector<AgentId> order(n);
  std::iota(order.begin(), order.end(), 0U);
  Allocation total(n, Money(0));
  do {
    Coalition prefix;
    for (AgentId i : order) {
      Coalition next = prefix.with(i);
      total[i] += game.value(next) - game.value(prefix);
      prefix = next;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  const Money count = Factorial(n);
  for (Money& phi : total) phi /= count;
  return total;
}

Allocation ShapleyValue(const TableGame& game) {
  const unsigned n = game.n_agents();
  std::vector<Money> weight(n);
  const Money n_fact = Factorial(n);
  for (unsigned k = 0; k < n; ++k) {
    weight[k] = Factorial(k) * Factorial(n - k - 1) / n_fact;
  }
  const auto& v = game.values();
  Allocation phi(n, Money(0));
  for (std::uint64_t mask = 0; mask < v.size(); ++mask) {
    const unsigned k = std::popcount(mask);
    for (AgentId i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((mask & bit) != 0) continue;
      phi[i] += weight[k] * (v[mask | bit] - v[mask]);
    }
  }
  return phi;
}

CoreResult CoreNonempty(const TableGame& game) {
  const unsigned n = game.n_agents();
  const auto& v = game.values();
  const Coalition grand = game.grand();
  CoreResult result;
  if (n == 0) {
    result.status = CoreStatus::kNonempty;
    result.witness = Allocation{};
    return result;
  }

  // Shift x_i = v({i}) + y_i, y >= 0, which absorbs the singleton
  // constraints. What remains is
  //   min 1.y  s.t.  y(S) >= w(S) = v(S) - sum_{i in S} v({i}),  |S| >= 2,
  // whose optimal solution is the price vector of CoreDualSimplex.
  Allocation singles(n);
  for (AgentId i = 0; i < n; ++i) singles[i] = v[std::uint64_t{1} << i];
  const std::vector<Money> single_sums = SubsetSums(singles);
  std::vector<Money> excess(v.size());
  for (std::uint64_t mask = 0; mask < v.size(); ++mask) {
    excess[mask] = v[mask] - single_sums[mask];
  }

  Allocation x = singles;
  if (n >= 2) {
    const std::vector<Money> y = CoreDualSimplex(n, excess).Solve();
    for (AgentId i = 0; i < n; ++i) x[i] += y[i];
  }
  result.min_total = std::accumulate(x.begin(), x.end(), Money(0));
  if (result.min_total == game.value(grand)) {
    result.status = CoreStatus::kNonempty;
    result.witness = std::move(x);
  }
  return result;
}

std::optional<Coalition> FirstCoreViolation(const TableGame& game,
                                            const Allocation& x) {
  if (x.size() != game.n_agents()) {
    throw Error(ErrorCode::kLengthMismatch,
                "allocation has " + std::to_string(x.size()) +
                    " entries for a " + std::to_string(game.n_agents()) +
                    "-agent game");
  }
  const auto& v = game.values();
  const std::vector<Money> sums = SubsetSums(x);
  const std::uint64_t full = game.grand().bits();
  if (sums[full] != v[full]) return game.grand();
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (sums[mask] < v[mask]) return Coalition(mask);
  }
  return std::nullopt;
}

bool InCore(const TableGame& game, const Allocation& x) {
  return !FirstCoreViolation(game, x).has_value();
}

bool IsImplementable(const TableGame& game) {
  return InCore(game, ShapleyValue(game));
}

}  // namespace isn
