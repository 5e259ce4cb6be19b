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

#include "cover/pd_kc.hpp"

#include <algorithm>
#include <numeric>

namespace cover {

namespace {

std::vector<std::reference_wrapper<const CostFunction>> cost_refs(const KcInstance& instance) {
  return {instance.items.begin(), instance.items.end()};
}

}  // namespace

PdKcResult solve_pd_kc(const KcInstance& instance, const PdOptions& options) {
  require_valid(instance);
  WaterFilling engine(build_stairs(cost_refs(instance), instance.demand, options.mode),
                      options.audit);
  const std::size_t n = instance.items.size();
  PdKcResult result;
  std::vector<std::int64_t> active_hi(n);
  while (true) {
    const std::vector<std::int64_t> a = engine.levels();
    const std::int64_t residual =
        std::max<std::int64_t>(instance.demand - std::accumulate(a.begin(), a.end(), std::int64_t{0}), 0);
    if (residual == 0) break;
    for (std::size_t i = 0; i < n; ++i) {
      active_hi[i] = std::min(engine.stair(i).top(), a[i] + residual);
    }
    if (options.audit) result.truncation_trace.push_back(active_hi);
    engine.advance(active_hi, residual, std::nullopt, TieOrder::kItemFirst);
    ++result.iterations;
  }
  result.solution.levels = engine.levels();
  result.primal_cost = solution_cost(instance, result.solution);
  result.blocks = engine.blocks();
  result.certificate = engine.release_certificate();
  result.ratio_bound_ok = result.primal_cost.is_finite() &&
                          result.primal_cost.value() <= 2 * result.certificate.dual_objective;
  return result;
}

CheckReport check_certificate_kc(const KcInstance& instance, const IntegralSolution& solution,
                                 const Cost& claimed_cost, const Certificate& certificate) {
  CheckReport report;
  if (!is_feasible(instance, solution)) report.fail("primal infeasible: levels do not cover demand");
  CheckReport dual = check_dual_certificate(cost_refs(instance), solution, claimed_cost, certificate, 2);
  report.failures.insert(report.failures.end(), dual.failures.begin(), dual.failures.end());
  return report;
}

CheckReport check_certificate_kc(const KcInstance& instance, const PdKcResult& result) {
  return check_certificate_kc(instance, result.solution, result.primal_cost, result.certificate);
}

}  // namespace cover
