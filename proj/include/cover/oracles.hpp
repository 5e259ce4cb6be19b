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

#include <cstdint>
#include <optional>
#include <vector>

#include "cover/model.hpp"
#include "cover/rational.hpp"

namespace cover {

/// Per-item fractional segment values z_i1..z_im. In chain form
/// 1 >= z_i1 >= ... >= z_im >= 0.
struct FractionalSolution {
  std::vector<std::vector<Rational>> z;

  bool is_chain() const;
  friend bool operator==(const FractionalSolution&, const FractionalSolution&) = default;
};

struct ExactResult {
  Cost cost;
  IntegralSolution solution;
};

/// Exact optimum by dynamic programming over (item prefix, residual demand).
/// Ties resolve to the smallest level at each backtracking step.
/// Throws Error(kInfeasible) when the optimum is infinite.
ExactResult exact_kc(const KcInstance& instance);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

/// Exhaustive enumeration of levels 0..min(m_i, level_cap) for every item.
/// level_cap defaults to the largest demand. Returns the lexicographically
/// smallest optimal level vector. Throws Error(kBudgetExceeded) when the
/// number of vectors exceeds budget, Error(kInfeasible) when none covers.
ExactResult brute_force_ufp(const UfpInstance& instance,
                            std::optional<std::int64_t> level_cap = std::nullopt,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/// A knapsack-cover cut sum_i sum_{j=a_i+1}^{min(m_i, a_i+d)} z_ij >= d
/// that the separated point violates (lhs < d).
struct ViolatedCut {
  std::vector<std::int64_t> a;
  std::int64_t d = 0;
  Rational lhs;

  Rational violation() const { return Rational(d) - lhs; }
  friend bool operator==(const ViolatedCut&, const ViolatedCut&) = default;
};

struct SeparationResult {
  std::optional<ViolatedCut> violated;
};

/// Most violated knapsack-cover inequality for a chain-form point, or none
/// when the point satisfies every inequality. Item i has m_i = z.z[i].size()
/// segments. Ties on violation go to smaller d, then lexicographically
/// smaller a. Throws Error(kChainViolated) if z is not in chain form.
SeparationResult separate_gkc(const KcInstance& instance, const FractionalSolution& z);

}  // namespace cover
