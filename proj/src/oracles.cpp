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

#include "cover/oracles.hpp"

#include <algorithm>
#include <limits>

#include "cover/error.hpp"

namespace cover {

bool FractionalSolution::is_chain() const {
  for (const auto& item : z) {
    Rational previous = 1;
    for (const auto& value : item) {
      if (value < 0 || value > previous) return false;
      previous = value;
    }
  }
  return true;
}

ExactResult exact_kc(const KcInstance& instance) {
  const std::int64_t demand = instance.demand;
  const std::size_t n = instance.items.size();
  const auto width = static_cast<std::size_t>(demand + 1);
  // table[i][d]: cheapest cover of residual d using items 0..i-1.
  std::vector<std::vector<Cost>> table(n + 1, std::vector<Cost>(width, Cost::infinite()));
  table[0][0] = Cost(0);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& f = instance.items[i - 1];
    const std::int64_t top = std::min(f.segments(), demand);
    for (std::int64_t d = 0; d <= demand; ++d) {
      Cost best = Cost::infinite();
      for (std::int64_t x = 0; x <= top; ++x) {
        const Cost candidate = table[i - 1][static_cast<std::size_t>(std::max<std::int64_t>(d - x, 0))] + f.value(x);
        if (candidate < best) best = candidate;
      }
      table[i][static_cast<std::size_t>(d)] = best;
    }
  }
  ExactResult result{table[n][static_cast<std::size_t>(demand)], {}};
  if (result.cost.is_infinite()) throw Error(Errc::kInfeasible, "no finite-cost cover exists");
  result.solution.levels.assign(n, 0);
  std::int64_t d = demand;
  for (std::size_t i = n; i >= 1; --i) {
    const auto& f = instance.items[i - 1];
    const std::int64_t top = std::min(f.segments(), demand);
    for (std::int64_t x = 0; x <= top; ++x) {
      const std::int64_t rest = std::max<std::int64_t>(d - x, 0);
      if (table[i - 1][static_cast<std::size_t>(rest)] + f.value(x) == table[i][static_cast<std::size_t>(d)]) {
        result.solution.levels[i - 1] = x;
        d = rest;
        break;
      }
    }
  }
  return result;
}

ExactResult brute_force_ufp(const UfpInstance& instance, std::optional<std::int64_t> level_cap,
                            std::uint64_t budget) {
  const std::int64_t cap = level_cap.value_or(instance.max_demand());
  const std::size_t n = instance.items.size();
  std::vector<std::int64_t> top(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    top[i] = std::min(instance.items[i].cost.finite_segments(), cap);
    const auto choices = static_cast<std::uint64_t>(top[i] + 1);
    if (total > budget / choices) {
      throw Error(Errc::kBudgetExceeded, "enumeration exceeds budget " + std::to_string(budget));
    }
    total *= choices;
  }
  std::vector<std::int64_t> levels(n, 0);
  std::optional<ExactResult> best;
  // Odometer with the last item fastest, so vectors are visited in
  // lexicographic order and the first optimum found is the smallest.
  while (true) {
    if (!first_uncovered(instance, levels).has_value()) {
      IntegralSolution candidate{levels};
      Cost cost = solution_cost(instance, candidate);
      if (!best || cost < best->cost) best = ExactResult{std::move(cost), std::move(candidate)};
    }
    bool advanced = false;
    for (std::size_t pos = n; pos-- > 0;) {
      if (levels[pos] < top[pos]) {
        ++levels[pos];
        advanced = true;
        break;
      }
      levels[pos] = 0;
    }
    if (!advanced) break;
  }
  if (!best) throw Error(Errc::kInfeasible, "no level vector covers every point");
  return std::move(*best);
}

SeparationResult separate_gkc(const KcInstance& instance, const FractionalSolution& z) {
  if (!z.is_chain()) throw Error(Errc::kChainViolated, "point is not in chain form");
  if (z.z.size() != instance.items.size()) {
    throw Error(Errc::kInvalidInput, "point has " + std::to_string(z.z.size()) + " items, instance " +
                                         std::to_string(instance.items.size()));
  }
  const std::size_t n = z.z.size();
  const std::int64_t demand = instance.demand;
  std::vector<std::int64_t> m(n);
  std::int64_t total_segments = 0;
  // prefix[i][j] = z_i1 + ... + z_ij, so h_i(a) is a difference of two entries.
  std::vector<std::vector<Rational>> prefix(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = static_cast<std::int64_t>(z.z[i].size());
    total_segments += m[i];
    prefix[i].assign(static_cast<std::size_t>(m[i] + 1), Rational(0));
    for (std::int64_t j = 1; j <= m[i]; ++j) {
      prefix[i][static_cast<std::size_t>(j)] = prefix[i][static_cast<std::size_t>(j - 1)] + z.z[i][static_cast<std::size_t>(j - 1)];
    }
  }
  auto h = [&](std::size_t i, std::int64_t a, std::int64_t d) -> Rational {
    const std::int64_t hi = std::min(m[i], a + d);
    return prefix[i][static_cast<std::size_t>(hi)] - prefix[i][static_cast<std::size_t>(a)];
  };

  SeparationResult best;
  for (std::int64_t d = 1; d <= demand; ++d) {
    const std::int64_t target = demand - d;
    if (target > total_segments) continue;
    const auto width = static_cast<std::size_t>(target + 1);
    // suffix[r][e]: min of sum_{i>=r} h_i(a_i) with sum_{i>=r} a_i = e.
    std::vector<std::vector<std::optional<Rational>>> suffix(n + 1, std::vector<std::optional<Rational>>(width));
    suffix[n][0] = Rational(0);
    for (std::size_t r = n; r-- > 0;) {
      for (std::int64_t e = 0; e <= target; ++e) {
        std::optional<Rational> value;
        for (std::int64_t a = 0; a <= std::min(m[r], e); ++a) {
          const auto& rest = suffix[r + 1][static_cast<std::size_t>(e - a)];
          if (!rest) continue;
          Rational candidate = *rest + h(r, a, d);
          if (!value || candidate < *value) value = std::move(candidate);
        }
        suffix[r][static_cast<std::size_t>(e)] = std::move(value);
      }
    }
    const auto& optimum = suffix[0][static_cast<std::size_t>(target)];
    if (!optimum || *optimum >= d) continue;
    // Forward reconstruction choosing the smallest a_i that stays optimal
    // yields the lexicographically smallest minimizer.
    ViolatedCut cut{std::vector<std::int64_t>(n, 0), d, *optimum};
    std::int64_t e = target;
    Rational remaining = *optimum;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::int64_t a = 0; a <= std::min(m[r], e); ++a) {
        const auto& rest = suffix[r + 1][static_cast<std::size_t>(e - a)];
        if (rest && *rest + h(r, a, d) == remaining) {
          cut.a[r] = a;
          remaining = *rest;
          e -= a;
          break;
        }
      }
    }
    if (!best.violated || cut.violation() > best.violated->violation()) best.violated = std::move(cut);
  }
  return best;
}

}  // namespace cover
