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
#include <string_view>
#include <vector>

#include "cover/certificate.hpp"
#include "cover/engine.hpp"
#include "cover/model.hpp"
#include "cover/pd_kc.hpp"

namespace cover {

enum class PruneDecision { kKept, kRemoved };

enum class PruneReason {
  kRedundant,      ///< removed: demand stays covered without it
  kDemandNeeded,   ///< kept: some point becomes uncovered without it
  kSuperiorBlock,  ///< kept: redundant, but a higher block of its item remains
};

std::string_view to_string(PruneDecision decision);
std::string_view to_string(PruneReason reason);

struct PruneEntry {
  Block block;
  PruneDecision decision = PruneDecision::kKept;
  PruneReason reason = PruneReason::kDemandNeeded;

  friend bool operator==(const PruneEntry&, const PruneEntry&) = default;
};

/// Reverse-delete decisions, in exact reverse order of block creation.
using PruneLog = std::vector<PruneEntry>;

struct PdUfpOptions : PdOptions {
  bool prune = true;
};

struct PdUfpResult {
  IntegralSolution solution;
  Cost primal_cost;
  Certificate certificate;
  PruneLog prune_log;
  /// Levels at the end of the growing phase.
  IntegralSolution grown;
  std::vector<Block> blocks;
  /// primal_cost <= 4 * dual objective, checked exactly.
  bool ratio_bound_ok = false;
  std::size_t iterations = 0;
};

/// Primal-dual 4-approximation for non-linear flow cover on a line:
/// growing phase on the most-demanding point, then reverse-delete pruning.
/// Points in the certificate refer to the original coordinates.
PdUfpResult solve_pd_ufp(const UfpInstance& instance, const PdUfpOptions& options = {});

/// Feasibility plus the full certificate check with factor 4.
CheckReport check_certificate_ufp(const UfpInstance& instance, const PdUfpResult& result);

CheckReport check_certificate_ufp(const UfpInstance& instance, const IntegralSolution& solution,
                                  const Cost& claimed_cost, const Certificate& certificate);

}  // namespace cover
