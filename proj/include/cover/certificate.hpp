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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cover/model.hpp"
#include "cover/rational.hpp"

namespace cover {

/// One entry of a raise's fill-rate vector: bucket (item, segment) filled at
/// `rate` units per unit of dual increase. `segment` is the 1-based index of
/// the first unit segment the bucket covers.
struct TauEntry {
  std::size_t item = 0;
  std::int64_t segment = 0;
  std::int64_t rate = 0;

  friend bool operator==(const TauEntry&, const TauEntry&) = default;
};

/// One dual raise: the variable grew by `delta` while the residual demand
/// (at `point`, for the flow-cover variant) was `residual`.
struct AuditRecord {
  Rational delta;
  std::int64_t residual = 0;
  std::optional<std::int64_t> point;
  std::vector<TauEntry> tau;

  friend bool operator==(const AuditRecord&, const AuditRecord&) = default;
};

/// Dual ledger of a primal-dual run. With `audited` set, every raise
/// (including zero ones) carries its full tau vector and the ledger can be
/// replayed to prove dual feasibility and the approximation ratio.
struct Certificate {
  Rational dual_objective;
  std::vector<AuditRecord> raises;
  bool audited = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CheckReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
};

/// Certificate checks shared by both covering variants:
///  - dual feasibility by ledger replay (no bucket ends above its marginal),
///  - dual objective equals sum of delta * residual,
///  - every bought segment's bucket is tight,
///  - per positive raise, sum of tau * z over bought segments is at most
///    factor * residual,
///  - the claimed cost matches the levels and is at most factor * dual.
/// Primal feasibility is checked by the variant-specific wrappers.
CheckReport check_dual_certificate(
    const std::vector<std::reference_wrapper<const CostFunction>>& costs,
    const IntegralSolution& solution, const Cost& claimed_cost,
    const Certificate& certificate, std::int64_t factor);

}  // namespace cover
