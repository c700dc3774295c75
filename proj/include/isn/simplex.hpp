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

#ifndef ISN_SIMPLEX_HPP
#define ISN_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "isn/money.hpp"

namespace isn {

/// maximize  objective . x
/// s.t.      rows[i] . x <= rhs[i]   (rhs[i] >= 0)
///           x >= 0
///
/// Nonnegative right-hand sides make the all-slack basis feasible, so no
/// artificial phase is needed. The transport relaxation has this form, as
/// does the dual of the core system (tests use it as a reference there).
struct PackingLp {
  std::vector<Money> objective;
  std::vector<std::vector<Money>> rows;
  std::vector<Money> rhs;
};

enum class LpStatus { kOptimal, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  Money objective_value;
  std::vector<Money> primal;
  /// Optimal prices of the row constraints (solution of the dual
  /// minimize rhs . y, rows^T y >= objective, y >= 0).
  std::vector<Money> dual;
  std::size_t pivots = 0;
};

/// Exact dense-tableau primal simplex with Bland's rule (smallest-index
/// entering column, smallest-basic-index tie break on the ratio test), so it
/// terminates on degenerate problems. Throws kValidationError on malformed
/// dimensions or a negative right-hand side.
LpSolution SolvePackingLp(const PackingLp& lp);

}  // namespace isn

#endif  // ISN_SIMPLEX_HPP
