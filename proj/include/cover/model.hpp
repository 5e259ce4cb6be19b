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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cover/rational.hpp"

namespace cover {

/// One constant piece of a step-form cost function: f(j) = value for every
/// j in (previous upto, upto].
struct StepPiece {
  std::int64_t upto = 0;
  Cost value;

  friend bool operator==(const StepPiece&, const StepPiece&) = default;
};

/// A non-decreasing cost curve f : {0..m} -> Q>=0 u {inf} with f(0) = 0,
/// stored either as the explicit list f(1..m) or as strictly increasing
/// constant pieces. Construction does not validate; see validate().
class CostFunction {
 public:
  enum class Form { kList, kSteps };

  CostFunction() = default;

  static CostFunction list(std::vector<Cost> values);
  static CostFunction steps(std::vector<StepPiece> pieces);

  Form form() const { return form_; }
  bool is_list() const { return form_ == Form::kList; }

  /// Number of unit segments m.
  std::int64_t segments() const;

  /// f(j) for j in 0..m.
  Cost value(std::int64_t j) const;

  /// g_j = f(j) - f(j-1) for j in 1..m.
  Cost marginal(std::int64_t j) const;

  /// Largest j with f(j) finite. Segments from the first infinite marginal
  /// on are never bought by an optimal solution and are dropped by solvers.
  std::int64_t finite_segments() const;

  /// Segment indices j (ascending, within 1..m) at which g_j may be
  /// non-zero. Every other segment has marginal zero.
  std::vector<std::int64_t> breakpoints() const;

  const std::vector<Cost>& list_values() const { return values_; }
  const std::vector<StepPiece>& step_pieces() const { return pieces_; }

  /// Structural problems (monotonicity, piece ordering, negative values).
  std::vector<std::string> problems() const;

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  Form form_ = Form::kList;
  std::vector<Cost> values_;
  std::vector<StepPiece> pieces_;
};

struct KcInstance {
  std::vector<CostFunction> items;
  std::int64_t demand = 0;

  friend bool operator==(const KcInstance&, const KcInstance&) = default;
};

struct UfpItem {
  CostFunction cost;
  /// Inclusive 1-based interval [first, last] of covered points.
  std::int64_t first = 1;
  std::int64_t last = 1;

  bool covers(std::int64_t t) const { return first <= t && t <= last; }
  friend bool operator==(const UfpItem&, const UfpItem&) = default;
};

struct UfpInstance {
  std::vector<UfpItem> items;
  /// D_t for t = 1..k, stored at index t-1.
  std::vector<std::int64_t> demands;

  std::int64_t horizon() const { return static_cast<std::int64_t>(demands.size()); }
  std::int64_t demand_at(std::int64_t t) const { return demands[static_cast<std::size_t>(t - 1)]; }
  std::int64_t max_demand() const;

  friend bool operator==(const UfpInstance&, const UfpInstance&) = default;
};

using Instance = std::variant<KcInstance, UfpInstance>;

/// Integral levels x_i; z_ij = 1 iff j <= x_i.
struct IntegralSolution {
  std::vector<std::int64_t> levels;

  friend bool operator==(const IntegralSolution&, const IntegralSolution&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;

  void fail(std::string issue) {
    ok = false;
    issues.push_back(std::move(issue));
  }
};

ValidationReport validate(const KcInstance& instance);
ValidationReport validate(const UfpInstance& instance);
ValidationReport validate(const Instance& instance);

/// Throws Error(kInvalidInput) or Error(kInfeasible) when validate fails.
void require_valid(const KcInstance& instance);
void require_valid(const UfpInstance& instance);

/// Classical knapsack cover (capacity u_i, cost c_i) as a non-linear
/// instance: f_i(1) = ... = f_i(min(u_i, D)) = c_i.
KcInstance from_classic_kc(std::span<const std::int64_t> capacities,
                           std::span<const Rational> costs, std::int64_t demand);

inline constexpr std::int64_t kDefaultMaterializationCap = std::int64_t{1} << 20;

/// List form with the same f(j) for every j. Throws
/// Error(kMaterializationTooLarge) when m exceeds cap.
CostFunction expand_steps_to_list(const CostFunction& cost,
                                  std::int64_t cap = kDefaultMaterializationCap);
KcInstance expand_steps_to_list(const KcInstance& instance,
                                std::int64_t cap = kDefaultMaterializationCap);
UfpInstance expand_steps_to_list(const UfpInstance& instance,
                                 std::int64_t cap = kDefaultMaterializationCap);

/// Sum of f_i(x_i); throws Error(kLevelOutOfRange) when some x_i > m_i.
Cost solution_cost(const KcInstance& instance, const IntegralSolution& solution);
Cost solution_cost(const UfpInstance& instance, const IntegralSolution& solution);

bool is_feasible(const KcInstance& instance, const IntegralSolution& solution);
bool is_feasible(const UfpInstance& instance, const IntegralSolution& solution);

/// First point t (1-based) whose demand is not covered, if any.
std::optional<std::int64_t> first_uncovered(const UfpInstance& instance,
                                            std::span<const std::int64_t> levels);

/// A run of original points merged into one compressed point.
struct PointRun {
  std::int64_t first = 0;
  std::int64_t last = 0;
  /// Original point in the run carrying the maximum demand (smallest such).
  std::int64_t representative = 0;

  friend bool operator==(const PointRun&, const PointRun&) = default;
};

struct CompressedUfp {
  UfpInstance instance;
  /// runs[t'-1] is the original run behind compressed point t'.
  std::vector<PointRun> runs;

  std::int64_t original_point(std::int64_t compressed_t) const {
    return runs[static_cast<std::size_t>(compressed_t - 1)].representative;
  }
};

/// Merges maximal runs of points covered by the same item set into a single
/// point carrying the run's maximum demand, and drops points that no item
/// covers and that have zero demand. Items keep their order, so level
/// vectors carry over unchanged.
CompressedUfp compress_coordinates(const UfpInstance& instance);

}  // namespace cover
