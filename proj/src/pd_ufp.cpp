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

#include "cover/pd_ufp.hpp"

#include <algorithm>

namespace cover {

std::string_view to_string(PruneDecision decision) {
  return decision == PruneDecision::kKept ? "kept" : "removed";
}

std::string_view to_string(PruneReason reason) {
  switch (reason) {
    case PruneReason::kRedundant: return "redundant";
    case PruneReason::kDemandNeeded: return "demand-needed";
    case PruneReason::kSuperiorBlock: return "superior-block";
  }
  return "unknown";
}

namespace {

std::vector<std::reference_wrapper<const CostFunction>> cost_refs(const UfpInstance& instance) {
  std::vector<std::reference_wrapper<const CostFunction>> out;
  out.reserve(instance.items.size());
  for (const auto& item : instance.items) out.emplace_back(item.cost);
  return out;
}

// D_t(a) for t = 1..k at index t-1.
std::vector<std::int64_t> residuals(const UfpInstance& instance, const std::vector<std::int64_t>& a) {
  const std::int64_t k = instance.horizon();
  std::vector<std::int64_t> diff(static_cast<std::size_t>(k + 2), 0);
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    diff[static_cast<std::size_t>(instance.items[i].first)] += a[i];
    diff[static_cast<std::size_t>(instance.items[i].last + 1)] -= a[i];
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(k));
  std::int64_t covered = 0;
  for (std::int64_t t = 1; t <= k; ++t) {
    covered += diff[static_cast<std::size_t>(t)];
    out[static_cast<std::size_t>(t - 1)] = std::max<std::int64_t>(instance.demand_at(t) - covered, 0);
  }
  return out;
}

}  // namespace

PdUfpResult solve_pd_ufp(const UfpInstance& original, const PdUfpOptions& options) {
  require_valid(original);
  const CompressedUfp compressed = compress_coordinates(original);
  const UfpInstance& instance = compressed.instance;
  const std::size_t n = instance.items.size();

  WaterFilling engine(build_stairs(cost_refs(instance), instance.max_demand(), options.mode),
                      options.audit);
  PdUfpResult result;
  std::vector<std::int64_t> active_hi(n);
  while (true) {
    const std::vector<std::int64_t> a = engine.levels();
    const std::vector<std::int64_t> residual = residuals(instance, a);
    if (residual.empty()) break;
    // max_element returns the first maximum, i.e. the smallest t.
    const auto it = std::max_element(residual.begin(), residual.end());
    if (*it == 0) break;
    const std::int64_t t = (it - residual.begin()) + 1;
    for (std::size_t i = 0; i < n; ++i) {
      active_hi[i] = instance.items[i].covers(t) ? std::min(engine.stair(i).top(), a[i] + *it) : a[i];
    }
    engine.advance(active_hi, *it, compressed.original_point(t), TieOrder::kSegmentFirst);
    ++result.iterations;
  }

  result.grown.levels = engine.levels();
  result.blocks = engine.blocks();
  std::vector<std::int64_t> levels = result.grown.levels;
  if (options.prune) {
    for (auto block = result.blocks.rbegin(); block != result.blocks.rend(); ++block) {
      std::int64_t& level = levels[block->item];
      const std::int64_t saved = level;
      level -= block->size();
      const bool redundant = !first_uncovered(original, levels).has_value();
      level = saved;
      PruneEntry entry{*block, PruneDecision::kKept, PruneReason::kDemandNeeded};
      if (redundant) {
        if (level == block->last) {
          entry.decision = PruneDecision::kRemoved;
          entry.reason = PruneReason::kRedundant;
          level -= block->size();
        } else {
          entry.reason = PruneReason::kSuperiorBlock;
        }
      }
      result.prune_log.push_back(entry);
    }
  }
  result.solution.levels = std::move(levels);
  result.primal_cost = solution_cost(original, result.solution);
  result.certificate = engine.release_certificate();
  result.ratio_bound_ok = result.primal_cost.is_finite() &&
                          result.primal_cost.value() <= 4 * result.certificate.dual_objective;
  return result;
}

CheckReport check_certificate_ufp(const UfpInstance& instance, const IntegralSolution& solution,
                                  const Cost& claimed_cost, const Certificate& certificate) {
  CheckReport report;
  if (solution.levels.size() == instance.items.size()) {
    if (const auto t = first_uncovered(instance, solution.levels)) {
      report.fail("primal infeasible: point " + std::to_string(*t) + " uncovered");
    }
  }
  CheckReport dual = check_dual_certificate(cost_refs(instance), solution, claimed_cost, certificate, 4);
  report.failures.insert(report.failures.end(), dual.failures.begin(), dual.failures.end());
  return report;
}

CheckReport check_certificate_ufp(const UfpInstance& instance, const PdUfpResult& result) {
  return check_certificate_ufp(instance, result.solution, result.primal_cost, result.certificate);
}

}  // namespace cover
