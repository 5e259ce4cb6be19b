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

#include "support.hpp"

#include <algorithm>
#include <functional>

namespace cover::testing {

namespace {

// Calls visit(levels) for every vector in prod {0..caps[i]}.
void odometer(const std::vector<std::int64_t>& caps, const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> x(caps.size(), 0);
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == caps[i]) x[i++] = 0;
    if (i == x.size()) return;
    ++x[i];
  }
}

}  // namespace

Cost enumerate_kc(const KcInstance& instance) {
  std::vector<std::int64_t> caps;
  for (const auto& f : instance.items) caps.push_back(f.segments());
  Cost best = Cost::infinite();
  odometer(caps, [&](const std::vector<std::int64_t>& x) {
    std::int64_t total = 0;
    Cost cost(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      total += x[i];
      cost += instance.items[i].value(x[i]);
    }
    if (total >= instance.demand && cost < best) best = cost;
  });
  return best;
}

Cost enumerate_ufp(const UfpInstance& instance) {
  std::vector<std::int64_t> caps;
  for (const auto& item : instance.items) caps.push_back(item.cost.segments());
  Cost best = Cost::infinite();
  odometer(caps, [&](const std::vector<std::int64_t>& x) {
    for (std::int64_t t = 1; t <= instance.horizon(); ++t) {
      std::int64_t covered = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (instance.items[i].covers(t)) covered += x[i];
      }
      if (covered < instance.demand_at(t)) return;
    }
    Cost cost(0);
    for (std::size_t i = 0; i < x.size(); ++i) cost += instance.items[i].cost.value(x[i]);
    if (cost < best) best = cost;
  });
  return best;
}

std::optional<ViolatedCut> enumerate_separation(const KcInstance& instance, const FractionalSolution& z) {
  std::vector<std::int64_t> caps;
  for (const auto& f : instance.items) caps.push_back(f.segments());
  std::optional<ViolatedCut> best;
  for (std::int64_t d = 1; d <= instance.demand; ++d) {
    odometer(caps, [&](const std::vector<std::int64_t>& a) {
      std::int64_t sum = 0;
      for (auto v : a) sum += v;
      if (sum != instance.demand - d) return;
      Rational lhs(0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t hi = std::min(caps[i], a[i] + d);
        for (std::int64_t j = a[i] + 1; j <= hi; ++j) lhs += z.z[i][static_cast<std::size_t>(j - 1)];
      }
      if (lhs >= d) return;
      const Rational violation = d - lhs;
      if (!best || violation > best->violation() ||
          (violation == best->violation() && (d < best->d || (d == best->d && a < best->a)))) {
        best = ViolatedCut{a, d, lhs};
      }
    });
  }
  return best;
}

namespace {

// Solves A x = b exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

std::optional<VertexOptimum> enumerate_chain_vertices(const std::vector<std::vector<Rational>>& marginals,
                                                      const Rational& target) {
  // Variables flattened; constraints as rows a.x >= b.
  std::size_t vars = 0;
  std::vector<std::size_t> offset;
  for (const auto& g : marginals) {
    offset.push_back(vars);
    vars += g.size();
  }
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  const auto add = [&](std::vector<Rational> row, Rational b) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  };
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    const std::size_t s = marginals[i].size();
    for (std::size_t j = 0; j < s; ++j) {
      std::vector<Rational> row(vars, Rational(0));
      if (j == 0) {
        row[offset[i]] = -1;  // -z_1 >= -1
        add(row, Rational(-1));
      } else {
        row[offset[i] + j - 1] = 1;  // z_{j-1} - z_j >= 0
        row[offset[i] + j] = -1;
        add(row, Rational(0));
      }
    }
    if (s > 0) {
      std::vector<Rational> row(vars, Rational(0));
      row[offset[i] + s - 1] = 1;  // z_s >= 0
      add(row, Rational(0));
    }
  }
  add(std::vector<Rational>(vars, Rational(1)), target);

  std::optional<VertexOptimum> best;
  if (vars == 0) {
    if (target <= 0) best = VertexOptimum{Rational(0), std::vector<std::vector<Rational>>(marginals.size())};
    return best;
  }
  std::vector<bool> pick(rows.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(vars), true);
  std::sort(pick.begin(), pick.end());  // first permutation in lexicographic order
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (pick[r]) {
        a.push_back(rows[r]);
        b.push_back(rhs[r]);
      }
    }
    const auto x = solve_square(a, b);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t r = 0; r < rows.size() && feasible; ++r) {
      Rational lhs(0);
      for (std::size_t v = 0; v < vars; ++v) lhs += rows[r][v] * (*x)[v];
      feasible = lhs >= rhs[r];
    }
    if (!feasible) continue;
    Rational cost(0);
    for (std::size_t i = 0; i < marginals.size(); ++i) {
      for (std::size_t j = 0; j < marginals[i].size(); ++j) cost += marginals[i][j] * (*x)[offset[i] + j];
    }
    if (!best || cost < best->cost) {
      VertexOptimum v{cost, {}};
      for (std::size_t i = 0; i < marginals.size(); ++i) {
        v.z.emplace_back(x->begin() + static_cast<std::ptrdiff_t>(offset[i]),
                         x->begin() + static_cast<std::ptrdiff_t>(offset[i] + marginals[i].size()));
      }
      best = std::move(v);
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

KcInstance random_kc(std::uint64_t seed, std::int64_t n_max, std::int64_t m_max, std::int64_t g_max,
                     std::int64_t d_max, CostFamily family) {
  GenSpec spec;
  spec.kind = InstanceKind::kKc;
  spec.n = {1, n_max};
  spec.m = {1, m_max};
  spec.demand = {1, d_max};
  spec.max_marginal = g_max;
  spec.family = family;
  spec.seed = seed;
  return std::get<KcInstance>(generate(spec));
}

UfpInstance random_ufp(std::uint64_t seed, std::int64_t n_max, std::int64_t k_max, std::int64_t m_max,
                       std::int64_t d_max, std::int64_t g_max) {
  GenSpec spec;
  spec.kind = InstanceKind::kUfp;
  spec.n = {1, n_max};
  spec.k = {1, k_max};
  spec.m = {1, m_max};
  spec.demand = {0, d_max};
  spec.max_marginal = g_max;
  spec.seed = seed;
  return std::get<UfpInstance>(generate(spec));
}

CostFunction from_marginals(const std::vector<std::int64_t>& g) {
  std::vector<Cost> values;
  std::int64_t total = 0;
  for (auto v : g) {
    total += v;
    values.emplace_back(total);
  }
  return CostFunction::list(std::move(values));
}

}  // namespace cover::testing
