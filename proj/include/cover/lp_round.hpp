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
#include <cstdint>
#include <optional>
#include <vector>

#include "cover/model.hpp"
#include "cover/oracles.hpp"
#include "cover/rational.hpp"

namespace cover {

/// Prefix minimum per item followed by clamping to 1. Never increases the
/// cost and keeps every knapsack-cover inequality satisfied.
FractionalSolution normalize(const FractionalSolution& raw);

/// The list-model instance the LP works on: infinite tails dropped and every
/// item truncated to min(m_i, D) segments. Step-form costs are expanded.
KcInstance lp_view(const KcInstance& instance);

struct GkcLpResult {
  FractionalSolution z;
  Rational lp_cost;
  /// Cuts added after the initial covering constraint.
  std::size_t cuts = 0;
  std::vector<ViolatedCut> cut_list;
  /// Optimum of the restricted LP at every round, in order.
  std::vector<Rational> round_objectives;
};

/// Cutting-plane solution of the chain-form relaxation: chain constraints
/// plus knapsack-cover cuts separated lazily until none is violated.
/// Throws Error(kIterationCapExceeded) past `cut_cap` cuts (default n*m*D).
GkcLpResult solve_gkc_lp(const KcInstance& instance,
                         std::optional<std::size_t> cut_cap = std::nullopt);

/// Threshold data: a_bar_i = max{j : z_ij >= 1/2}, D_bar = D(a_bar),
/// m_bar_i = min(m_i, a_bar_i + D_bar).
struct ResidualContext {
  std::vector<std::int64_t> a_bar;
  std::int64_t d_bar = 0;
  std::vector<std::int64_t> m_bar;
};

ResidualContext residual_context(const KcInstance& lp_instance, const FractionalSolution& z_bar);

/// One item of an optimal extreme point of the residual LP: ones on
/// segments (offset, first_fractional), `weight` on
/// [first_fractional, last_fractional], zero above. Segment indices are
/// absolute; first_fractional == 0 when the item has no block at weight.
struct EnvelopeItem {
  std::int64_t offset = 0;
  std::int64_t ones = 0;
  std::int64_t first_fractional = 0;
  std::int64_t last_fractional = 0;
  Rational weight;
  /// z* on segments offset+1 .. offset+z.size().
  std::vector<Rational> z;
  /// Marginal cost of the block at weight (sum of its marginals).
  Rational block_cost;
};

struct EnvelopeSolution {
  std::vector<EnvelopeItem> items;
  std::optional<std::size_t> fractional_item;
  Rational cost;
  Rational target;
  /// True when the mass target had to be capped at the total residual size.
  bool capped = false;
};

/// min sum g z  s.t.  sum z >= target, 1 >= z_1 >= ... >= z_s >= 0 per
/// item, solved by buying lower-convex-envelope pieces of the cumulative
/// marginals in increasing slope. marginals[i] lists g over the item's
/// residual segments; offsets shift the reported segment indices.
EnvelopeSolution solve_chain_mass(const std::vector<std::vector<Rational>>& marginals,
                                  const std::vector<std::int64_t>& offsets, const Rational& target);

/// Residual LP with doubled residual demand over segments a_bar+1..m_bar.
EnvelopeSolution solve_residual(const KcInstance& lp_instance, const ResidualContext& ctx);

/// Ones up to a_bar, the integral residual blocks of every item except the
/// fractional one. Throws Error(kAssemblyInfeasible) if the result does
/// not cover D or costs more than twice z_bar.
IntegralSolution assemble_rounded(const KcInstance& lp_instance, const FractionalSolution& z_bar,
                                  const ResidualContext& ctx, const EnvelopeSolution& envelope);

struct RoundResult {
  IntegralSolution solution;
  Cost cost;
  Rational lp_cost;
  std::size_t cuts = 0;
  std::vector<ViolatedCut> cut_list;
  FractionalSolution z_bar;
  ResidualContext context;
  EnvelopeSolution envelope;
};

/// LP, normalize, threshold, residual envelope, assembly.
RoundResult round_2apx(const KcInstance& instance);

/// sum_ij g_ij z_ij over a list-model instance.
Rational fractional_cost(const KcInstance& lp_instance, const FractionalSolution& z);

}  // namespace cover
