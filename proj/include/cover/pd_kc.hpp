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
#include <vector>

#include "cover/certificate.hpp"
#include "cover/engine.hpp"
#include "cover/model.hpp"

namespace cover {

struct PdOptions {
  bool audit = false;
  BucketMode mode = BucketMode::kAuto;
};

struct PdKcResult {
  IntegralSolution solution;
  Cost primal_cost;
  Certificate certificate;
  /// primal_cost <= 2 * dual objective, checked exactly.
  bool ratio_bound_ok = false;
  std::vector<Block> blocks;
  std::size_t iterations = 0;
  /// m_i(a) per iteration; recorded in audit mode only.
  std::vector<std::vector<std::int64_t>> truncation_trace;
};

/// Primal-dual water-filling 2-approximation for non-linear knapsack
/// cover. Throws Error(kInvalidInput / kInfeasible) on bad instances.
PdKcResult solve_pd_kc(const KcInstance& instance, const PdOptions& options = {});

/// Feasibility plus the full certificate check with factor 2.
CheckReport check_certificate_kc(const KcInstance& instance, const PdKcResult& result);

CheckReport check_certificate_kc(const KcInstance& instance, const IntegralSolution& solution,
                                 const Cost& claimed_cost, const Certificate& certificate);

}  // namespace cover
