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

#include "cover/lp_round.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "cover/error.hpp"
#include "cover/simplex.hpp"

namespace cover {

FractionalSolution normalize(const FractionalSolution& raw) {
  FractionalSolution out = raw;
  for (auto& item : out.z) {
    for (std::size_t j = 1; j < item.size(); ++j) {
      if (item[j] > item[j - 1]) item[j] = item[j - 1];
    }
    for (auto& v : item) {
      if (v > 1) v = 1;
    }
  }
  return out;
}

KcInstance lp_view(const KcInstance& instance) {
  KcInstance out;
  out.demand = instance.demand;
  out.items.reserve(instance.items.size());
  for (const auto& f : instance.items) {
    const std::int64_t m = std::min(f.finite_segments(), std::max<std::int64_t>(instance.demand, 0));
    std::vector<Cost> values;
    values.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 1; j <= m; ++j) values.push_back(f.value(j));
    out.items.push_back(CostFunction::list(std::move(values)));
  }
  return out;
}

Rational fractional_cost(const KcInstance& lp_instance, const FractionalSolution& z) {
  Rational total(0);
  for (std::size_t i = 0; i < lp_instance.items.size(); ++i) {
    for (std::size_t j = 0; j < z.z[i].size(); ++j) {
      total += lp_instance.items[i].marginal(static_cast<std::int64_t>(j + 1)).value() * z.z[i][j];
    }
  }
  return total;
}

namespace {

using Lp = LinearProgram<Rational>;

Lp::Row cut_row(const KcInstance& lp, const std::vector<std::size_t>& offset, std::size_t vars,
                const std::vector<std::int64_t>& a, std::int64_t d) {
  Lp::Row row{std::vector<Rational>(vars, Rational(0)), Sense::kGreaterEqual, Rational(d)};
  for (std::size_t i = 0; i < lp.items.size(); ++i) {
    const std::int64_t hi = std::min(lp.items[i].segments(), a[i] + d);
    for (std::int64_t j = a[i] + 1; j <= hi; ++j) row.coeffs[offset[i] + static_cast<std::size_t>(j - 1)] = 1;
  }
  return row;
}

}  // namespace

GkcLpResult solve_gkc_lp(const KcInstance& instance, std::optional<std::size_t> cut_cap) {
  require_valid(instance);
  const KcInstance lp = lp_view(instance);
  const std::size_t n = lp.items.size();
  std::vector<std::size_t> offset(n + 1, 0);
  std::int64_t max_m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    offset[i + 1] = offset[i] + static_cast<std::size_t>(lp.items[i].segments());
    max_m = std::max(max_m, lp.items[i].segments());
  }
  const std::size_t vars = offset[n];
  const std::size_t cap = cut_cap.value_or(
      static_cast<std::size_t>(std::max<std::int64_t>(1, static_cast<std::int64_t>(n) * max_m * lp.demand)));

  GkcLpResult result;
  result.z.z.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.z.z[i].assign(static_cast<std::size_t>(lp.items[i].segments()), Rational(0));
  if (lp.demand == 0) return result;

  Lp program;
  program.objective.assign(vars, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::int64_t j = 1; j <= lp.items[i].segments(); ++j) {
      const std::size_t v = offset[i] + static_cast<std::size_t>(j - 1);
      program.objective[v] = lp.items[i].marginal(j).value();
      Lp::Row chain{std::vector<Rational>(vars, Rational(0)), Sense::kLessEqual, Rational(0)};
      chain.coeffs[v] = 1;
      if (j == 1) {
        chain.rhs = 1;
      } else {
        chain.coeffs[v - 1] = -1;
      }
      program.rows.push_back(std::move(chain));
    }
  }
  std::set<std::pair<std::vector<std::int64_t>, std::int64_t>> seen;
  const std::vector<std::int64_t> zero(n, 0);
  program.rows.push_back(cut_row(lp, offset, vars, zero, lp.demand));
  seen.emplace(zero, lp.demand);

  while (true) {
    const LpSolution<Rational> solution = simplex_exact(program);
    result.round_objectives.push_back(solution.objective);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < result.z.z[i].size(); ++j) result.z.z[i][j] = solution.x[offset[i] + j];
    }
    result.lp_cost = solution.objective;
    const SeparationResult separation = separate_gkc(lp, result.z);
    if (!separation.violated) break;
    const ViolatedCut& cut = *separation.violated;
    if (!seen.emplace(cut.a, cut.d).second) {
      throw Error(Errc::kIterationCapExceeded, "separation returned a cut already in the LP");
    }
    if (result.cuts + 1 > cap) {
      throw Error(Errc::kIterationCapExceeded, "more than " + std::to_string(cap) + " cuts");
    }
    program.rows.push_back(cut_row(lp, offset, vars, cut.a, cut.d));
    result.cut_list.push_back(cut);
    ++result.cuts;
  }
  return result;
}

ResidualContext residual_context(const KcInstance& lp_instance, const FractionalSolution& z_bar) {
  ResidualContext ctx;
  const Rational half(1, 2);
  std::int64_t taken = 0;
  for (const auto& item : z_bar.z) {
    std::int64_t a = 0;
    for (std::size_t j = 0; j < item.size(); ++j) {
      if (item[j] >= half) a = static_cast<std::int64_t>(j + 1);
    }
    ctx.a_bar.push_back(a);
    taken += a;
  }
  ctx.d_bar = std::max<std::int64_t>(lp_instance.demand - taken, 0);
  for (std::size_t i = 0; i < lp_instance.items.size(); ++i) {
    ctx.m_bar.push_back(std::min(lp_instance.items[i].segments(), ctx.a_bar[i] + ctx.d_bar));
  }
  return ctx;
}

EnvelopeSolution solve_chain_mass(const std::vector<std::vector<Rational>>& marginals,
                                  const std::vector<std::int64_t>& offsets, const Rational& target) {
  struct Piece {
    Rational slope;
    std::size_t item;
    std::int64_t from;
    std::int64_t to;
  };
  std::vector<Piece> pieces;
  std::int64_t capacity = 0;
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    const auto& g = marginals[i];
    capacity += static_cast<std::int64_t>(g.size());
    // Lower convex hull of (s, F(s)), F the cumulative marginal.
    std::vector<std::pair<std::int64_t, Rational>> hull;
    Rational cumulative(0);
    for (std::int64_t s = 0; s <= static_cast<std::int64_t>(g.size()); ++s) {
      if (s > 0) cumulative += g[static_cast<std::size_t>(s - 1)];
      while (hull.size() >= 2) {
        const auto& [x0, y0] = hull[hull.size() - 2];
        const auto& [x1, y1] = hull.back();
        const Rational cross = Rational(x1 - x0) * (cumulative - y0) - (y1 - y0) * Rational(s - x0);
        if (cross > 0) break;
        hull.pop_back();
      }
      hull.emplace_back(s, cumulative);
    }
    for (std::size_t h = 1; h < hull.size(); ++h) {
      const auto& [x0, y0] = hull[h - 1];
      const auto& [x1, y1] = hull[h];
      pieces.push_back(Piece{Rational((y1 - y0) / (x1 - x0)), i, x0, x1});
    }
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return std::tie(a.item, a.from) < std::tie(b.item, b.from);
  });

  EnvelopeSolution out;
  out.target = target;
  if (target > capacity) {
    out.target = capacity;
    out.capped = true;
  }
  out.items.resize(marginals.size());
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    out.items[i].offset = offsets[i];
    out.items[i].z.assign(marginals[i].size(), Rational(0));
  }
  Rational remaining = out.target;
  for (const Piece& piece : pieces) {
    if (remaining <= 0) break;
    EnvelopeItem& item = out.items[piece.item];
    const Rational length(piece.to - piece.from);
    Rational block_cost(0);
    for (std::int64_t s = piece.from; s < piece.to; ++s) block_cost += marginals[piece.item][static_cast<std::size_t>(s)];
    if (length <= remaining) {
      for (std::int64_t s = piece.from; s < piece.to; ++s) item.z[static_cast<std::size_t>(s)] = 1;
      item.ones = piece.to;
      out.cost += block_cost;
      remaining -= length;
      continue;
    }
    const Rational weight = remaining / length;
    for (std::int64_t s = piece.from; s < piece.to; ++s) item.z[static_cast<std::size_t>(s)] = weight;
    item.first_fractional = item.offset + piece.from + 1;
    item.last_fractional = item.offset + piece.to;
    item.weight = weight;
    item.block_cost = block_cost;
    out.cost += weight * block_cost;
    out.fractional_item = piece.item;
    remaining = 0;
  }
  return out;
}

EnvelopeSolution solve_residual(const KcInstance& lp_instance, const ResidualContext& ctx) {
  std::vector<std::vector<Rational>> marginals(lp_instance.items.size());
  for (std::size_t i = 0; i < lp_instance.items.size(); ++i) {
    for (std::int64_t j = ctx.a_bar[i] + 1; j <= ctx.m_bar[i]; ++j) {
      marginals[i].push_back(lp_instance.items[i].marginal(j).value());
    }
  }
  return solve_chain_mass(marginals, ctx.a_bar, Rational(2 * ctx.d_bar));
}

IntegralSolution assemble_rounded(const KcInstance& lp_instance, const FractionalSolution& z_bar,
                                  const ResidualContext& ctx, const EnvelopeSolution& envelope) {
  IntegralSolution out;
  for (std::size_t i = 0; i < lp_instance.items.size(); ++i) {
    std::int64_t level = ctx.a_bar[i];
    if (!envelope.fractional_item || *envelope.fractional_item != i) level += envelope.items[i].ones;
    out.levels.push_back(level);
  }
  if (!is_feasible(lp_instance, out)) {
    throw Error(Errc::kAssemblyInfeasible, "rounded levels do not cover the demand");
  }
  const Cost cost = solution_cost(lp_instance, out);
  if (cost.is_infinite() || cost.value() > 2 * fractional_cost(lp_instance, z_bar)) {
    throw Error(Errc::kAssemblyInfeasible, "rounded cost exceeds twice the fractional cost");
  }
  return out;
}

RoundResult round_2apx(const KcInstance& instance) {
  const KcInstance lp = lp_view(instance);
  GkcLpResult relaxation = solve_gkc_lp(instance);
  RoundResult out;
  out.lp_cost = relaxation.lp_cost;
  out.cuts = relaxation.cuts;
  out.cut_list = std::move(relaxation.cut_list);
  out.z_bar = normalize(relaxation.z);
  out.context = residual_context(lp, out.z_bar);
  out.envelope = solve_residual(lp, out.context);
  out.solution = assemble_rounded(lp, out.z_bar, out.context, out.envelope);
  out.cost = solution_cost(instance, out.solution);
  return out;
}

}  // namespace cover
