// Copyright 2026 The cover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cover/error.hpp"

namespace cover {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

/// min c^T x  s.t.  rows, x >= 0.
template <typename Scalar>
struct LinearProgram {
  struct Row {
    std::vector<Scalar> coeffs;
    Sense sense = Sense::kGreaterEqual;
    Scalar rhs{};
  };

  std::vector<Scalar> objective;
  std::vector<Row> rows;

  std::size_t num_vars() const { return objective.size(); }
};

template <typename Scalar>
struct LpSolution {
  std::vector<Scalar> x;
  Scalar objective{};
  /// Basic column per tableau row (structural columns are 0..n-1).
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;
};

namespace detail {

/// Dense two-phase tableau simplex with Bland's rule. Exact when Scalar is
/// an exact field type; no tolerances are used anywhere.
template <typename Scalar>
class Tableau {
 public:
  explicit Tableau(const LinearProgram<Scalar>& lp) : n_(lp.num_vars()) {
    const std::size_t m = lp.rows.size();
    // Column layout: structural | one slack per inequality | artificials.
    std::size_t slacks = 0;
    for (const auto& row : lp.rows) slacks += row.sense != Sense::kEqual ? 1 : 0;
    std::vector<bool> needs_artificial(m, false);
    std::vector<int> slack_sign(m, 0);
    std::vector<bool> flip(m, false);
    std::size_t artificials = 0;
    for (std::size_t r = 0; r < m; ++r) {
      const auto& row = lp.rows[r];
      flip[r] = row.rhs < 0;
      int sign = row.sense == Sense::kLessEqual ? 1 : row.sense == Sense::kGreaterEqual ? -1 : 0;
      if (flip[r]) sign = -sign;
      slack_sign[r] = sign;
      needs_artificial[r] = sign != 1;
      artificials += needs_artificial[r] ? 1 : 0;
    }
    first_artificial_ = n_ + slacks;
    cols_ = first_artificial_ + artificials;
    rows_.assign(m, std::vector<Scalar>(cols_ + 1, Scalar(0)));
    basis_.assign(m, 0);
    std::size_t next_slack = n_;
    std::size_t next_artificial = first_artificial_;
    for (std::size_t r = 0; r < m; ++r) {
      const auto& row = lp.rows[r];
      auto& t = rows_[r];
      for (std::size_t c = 0; c < n_ && c < row.coeffs.size(); ++c) {
        t[c] = flip[r] ? Scalar(-row.coeffs[c]) : row.coeffs[c];
      }
      t[cols_] = flip[r] ? Scalar(-row.rhs) : row.rhs;
      if (slack_sign[r] != 0) {
        t[next_slack] = Scalar(slack_sign[r]);
        if (slack_sign[r] == 1) basis_[r] = next_slack;
        ++next_slack;
      }
      if (needs_artificial[r]) {
        t[next_artificial] = Scalar(1);
        basis_[r] = next_artificial++;
      }
    }
  }

  LpSolution<Scalar> solve(const std::vector<Scalar>& objective) {
    // Phase 1: minimize the sum of artificials.
    if (first_artificial_ < cols_) {
      std::vector<Scalar> phase1(cols_, Scalar(0));
      for (std::size_t c = first_artificial_; c < cols_; ++c) phase1[c] = Scalar(1);
      run(phase1, cols_);
      if (objective_value(phase1) != Scalar(0)) {
        throw Error(Errc::kInfeasibleMaster, "restricted LP has no feasible point");
      }
      drive_out_artificials();
    }
    std::vector<Scalar> phase2(cols_, Scalar(0));
    for (std::size_t c = 0; c < n_; ++c) phase2[c] = objective[c];
    run(phase2, first_artificial_);

    LpSolution<Scalar> out;
    out.x.assign(n_, Scalar(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < n_) out.x[basis_[r]] = rows_[r][cols_];
    }
    out.objective = objective_value(phase2);
    out.basis = basis_;
    out.pivots = pivots_;
    return out;
  }

 private:
  Scalar objective_value(const std::vector<Scalar>& cost) const {
    Scalar total(0);
    for (std::size_t r = 0; r < rows_.size(); ++r) total += cost[basis_[r]] * rows_[r][cols_];
    return total;
  }

  // Primal simplex over columns [0, allowed) with Bland's rule.
  void run(const std::vector<Scalar>& cost, std::size_t allowed) {
    const std::size_t m = rows_.size();
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < allowed && !entering; ++c) {
        if (is_basic(c)) continue;
        Scalar reduced = cost[c];
        for (std::size_t r = 0; r < m; ++r) {
          if (rows_[r][c] != Scalar(0)) reduced -= cost[basis_[r]] * rows_[r][c];
        }
        if (reduced < Scalar(0)) entering = c;
      }
      if (!entering) return;
      std::optional<std::size_t> leaving;
      Scalar best_ratio(0);
      for (std::size_t r = 0; r < m; ++r) {
        const Scalar& a = rows_[r][*entering];
        if (!(a > Scalar(0))) continue;
        Scalar ratio = rows_[r][cols_] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (!leaving) throw Error(Errc::kInfeasibleMaster, "restricted LP is unbounded");
      pivot(*leaving, *entering);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < first_artificial_) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < first_artificial_ && !col; ++c) {
        if (rows_[r][c] != Scalar(0)) col = c;
      }
      if (col) {
        pivot(r, *col);
        ++r;
      } else {
        // Redundant row.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  bool is_basic(std::size_t c) const {
    for (const std::size_t b : basis_) {
      if (b == c) return true;
    }
    return false;
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    auto& p = rows_[row];
    const Scalar inv = Scalar(1) / p[col];
    for (auto& v : p) {
      if (v != Scalar(0)) v *= inv;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == row) continue;
      const Scalar factor = rows_[r][col];
      if (factor == Scalar(0)) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (p[c] != Scalar(0)) rows_[r][c] -= factor * p[c];
      }
    }
    basis_[row] = col;
  }

  std::size_t n_;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace detail

/// Optimal basic feasible solution of a bounded LP. Throws
/// Error(kInfeasibleMaster) when the LP is infeasible or unbounded.
template <typename Scalar>
LpSolution<Scalar> simplex_exact(const LinearProgram<Scalar>& lp) {
  detail::Tableau<Scalar> tableau(lp);
  return tableau.solve(lp.objective);
}

}  // namespace cover
