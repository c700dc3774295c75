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

#include "isn/simplex.hpp"

#include <optional>
#include <string>

#include "isn/error.hpp"

namespace isn {
namespace {

void Validate(const PackingLp& lp) {
  if (lp.rows.size() != lp.rhs.size()) {
    throw Error(ErrorCode::kValidationError, "row count differs from rhs size");
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].size() != lp.objective.size()) {
      throw Error(ErrorCode::kValidationError,
                  "row " + std::to_string(i) + " has the wrong width");
    }
    if (sgn(lp.rhs[i]) < 0) {
      throw Error(ErrorCode::kValidationError,
                  "row " + std::to_string(i) + " has a negative bound");
    }
  }
}

class Tableau {
 public:
  explicit Tableau(const PackingLp& lp)
      : m_(lp.rows.size()),
        n_(lp.objective.size()),
        width_(n_ + m_),
        cells_(m_, std::vector<Money>(width_ + 1)),
        reduced_(width_),
        basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cells_[i][j] = lp.rows[i][j];
      cells_[i][n_ + i] = 1;
      cells_[i][width_] = lp.rhs[i];
      basis_[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) reduced_[j] = lp.objective[j];
    objective_value_ = 0;
  }

  std::optional<std::size_t> EnteringColumn() const {
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(reduced_[j]) > 0) return j;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> LeavingRow(std::size_t col) const {
    std::optional<std::size_t> best;
    Money best_ratio;
    for (std::size_t i = 0; i < m_; ++i) {
      const Money& a = cells_[i][col];
      if (sgn(a) <= 0) continue;
      Money ratio = cells_[i][width_] / a;
      if (!best || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[*best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void Pivot(std::size_t row, std::size_t col) {
    std::vector<Money>& pivot_row = cells_[row];
    const Money inv = 1 / pivot_row[col];
    for (Money& cell : pivot_row) {
      if (sgn(cell) != 0) cell *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      Eliminate(cells_[i], pivot_row, col);
    }
    const Money factor = reduced_[col];
    if (sgn(factor) != 0) {
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(pivot_row[j]) != 0) reduced_[j] -= factor * pivot_row[j];
      }
      objective_value_ += factor * pivot_row[width_];
    }
    basis_[row] = col;
  }

  LpSolution Extract() const {
    LpSolution out;
    out.objective_value = objective_value_;
    out.primal.assign(n_, Money(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) out.primal[basis_[i]] = cells_[i][width_];
    }
    out.dual.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) out.dual[i] = -reduced_[n_ + i];
    return out;
  }

 private:
  static void Eliminate(std::vector<Money>& target,
                        const std::vector<Money>& pivot_row, std::size_t col) {
    const Money factor = target[col];
    if (sgn(factor) == 0) return;
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (sgn(pivot_row[j]) != 0) target[j] -= factor * pivot_row[j];
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<std::vector<Money>> cells_;  // last column is the rhs
  std::vector<Money> reduced_;
  std::vector<std::size_t> basis_;
  Money objective_value_;
};

}  // namespace

LpSolution SolvePackingLp(const PackingLp& lp) {
  Validate(lp);
  Tableau tableau(lp);
  std::size_t pivots = 0;
  while (auto col = tableau.EnteringColumn()) {
    auto row = tableau.LeavingRow(*col);
    if (!row) {
      LpSolution unbounded;
      unbounded.status = LpStatus::kUnbounded;
      unbounded.pivots = pivots;
      return unbounded;
    }
    tableau.Pivot(*row, *col);
    ++pivots;
  }
  LpSolution out = tableau.Extract();
  out.pivots = pivots;
  return out;
}

}  // namespace isn
