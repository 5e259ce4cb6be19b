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

#include "cover/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cover/error.hpp"

namespace cover {

CostFunction CostFunction::list(std::vector<Cost> values) {
  CostFunction f;
  f.form_ = Form::kList;
  f.values_ = std::move(values);
  return f;
}

CostFunction CostFunction::steps(std::vector<StepPiece> pieces) {
  CostFunction f;
  f.form_ = Form::kSteps;
  f.pieces_ = std::move(pieces);
  return f;
}

std::int64_t CostFunction::segments() const {
  if (form_ == Form::kList) return static_cast<std::int64_t>(values_.size());
  return pieces_.empty() ? 0 : pieces_.back().upto;
}

Cost CostFunction::value(std::int64_t j) const {
  if (j == 0) return Cost(0);
  if (j < 0 || j > segments()) {
    throw Error(Errc::kLevelOutOfRange,
                "level " + std::to_string(j) + " outside 0.." + std::to_string(segments()));
  }
  if (form_ == Form::kList) return values_[static_cast<std::size_t>(j - 1)];
  const auto it = std::lower_bound(pieces_.begin(), pieces_.end(), j,
                                   [](const StepPiece& p, std::int64_t x) { return p.upto < x; });
  return it->value;
}

Cost CostFunction::marginal(std::int64_t j) const {
  return cover::marginal(value(j), value(j - 1));
}

std::int64_t CostFunction::finite_segments() const {
  if (form_ == Form::kList) {
    const auto it = std::find_if(values_.begin(), values_.end(),
                                 [](const Cost& c) { return c.is_infinite(); });
    return static_cast<std::int64_t>(it - values_.begin());
  }
  std::int64_t last_finite = 0;
  for (const auto& piece : pieces_) {
    if (piece.value.is_infinite()) break;
    last_finite = piece.upto;
  }
  return last_finite;
}

std::vector<std::int64_t> CostFunction::breakpoints() const {
  std::vector<std::int64_t> out;
  if (form_ == Form::kList) {
    out.resize(values_.size());
    std::iota(out.begin(), out.end(), std::int64_t{1});
    return out;
  }
  std::int64_t start = 1;
  for (const auto& piece : pieces_) {
    if (piece.upto >= start) out.push_back(start);
    start = piece.upto + 1;
  }
  return out;
}

std::vector<std::string> CostFunction::problems() const {
  std::vector<std::string> out;
  auto check_sign = [&](const Cost& c, const std::string& where) {
    if (c.is_finite() && c.value() < 0) out.push_back("negative cost at " + where);
  };
  if (form_ == Form::kList) {
    Cost previous(0);
    for (std::size_t j = 0; j < values_.size(); ++j) {
      const std::string where = "segment " + std::to_string(j + 1);
      check_sign(values_[j], where);
      if (values_[j] < previous) out.push_back("decreasing cost at " + where);
      previous = values_[j];
    }
    return out;
  }
  std::int64_t previous_upto = 0;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const std::string where = "piece " + std::to_string(k + 1);
    check_sign(pieces_[k].value, where);
    if (pieces_[k].upto <= previous_upto) out.push_back("non-increasing upto at " + where);
    if (k > 0 && !(pieces_[k - 1].value < pieces_[k].value)) {
      out.push_back("non-increasing piece value at " + where);
    }
    previous_upto = pieces_[k].upto;
  }
  return out;
}

std::int64_t UfpInstance::max_demand() const {
  return demands.empty() ? 0 : *std::max_element(demands.begin(), demands.end());
}

ValidationReport validate(const KcInstance& instance) {
  ValidationReport report;
  if (instance.demand < 0) report.fail("negative demand");
  std::int64_t capacity = 0;
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    for (const auto& p : instance.items[i].problems()) {
      report.fail("item " + std::to_string(i) + ": " + p);
    }
    capacity += std::min(instance.items[i].finite_segments(), std::max<std::int64_t>(instance.demand, 0));
  }
  if (report.ok && capacity < instance.demand) {
    report.fail("infeasible: finite-cost capacity " + std::to_string(capacity) +
                " below demand " + std::to_string(instance.demand));
  }
  return report;
}

ValidationReport validate(const UfpInstance& instance) {
  ValidationReport report;
  const std::int64_t k = instance.horizon();
  if (k < 1) report.fail("horizon must be positive");
  for (std::int64_t t = 1; t <= k; ++t) {
    if (instance.demand_at(t) < 0) report.fail("negative demand at point " + std::to_string(t));
  }
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const auto& item = instance.items[i];
    for (const auto& p : item.cost.problems()) {
      report.fail("item " + std::to_string(i) + ": " + p);
    }
    if (item.first < 1 || item.first > item.last || item.last > k) {
      report.fail("item " + std::to_string(i) + ": interval [" + std::to_string(item.first) +
                  ", " + std::to_string(item.last) + "] outside [1, " + std::to_string(k) + "]");
    }
  }
  if (!report.ok) return report;
  std::vector<std::int64_t> capacity(static_cast<std::size_t>(k), 0);
  for (const auto& item : instance.items) {
    const std::int64_t m = item.cost.finite_segments();
    for (std::int64_t t = item.first; t <= item.last; ++t) {
      capacity[static_cast<std::size_t>(t - 1)] += m;
    }
  }
  for (std::int64_t t = 1; t <= k; ++t) {
    if (capacity[static_cast<std::size_t>(t - 1)] < instance.demand_at(t)) {
      report.fail("infeasible: point " + std::to_string(t) + " has capacity " +
                  std::to_string(capacity[static_cast<std::size_t>(t - 1)]) + " below demand " +
                  std::to_string(instance.demand_at(t)));
    }
  }
  return report;
}

ValidationReport validate(const Instance& instance) {
  return std::visit([](const auto& x) { return validate(x); }, instance);
}

namespace {

template <typename InstanceT>
void require_valid_impl(const InstanceT& instance) {
  const ValidationReport report = validate(instance);
  if (report.ok) return;
  std::string joined;
  bool infeasible_only = true;
  for (const auto& issue : report.issues) {
    if (!joined.empty()) joined += "; ";
    joined += issue;
    if (issue.rfind("infeasible", 0) != 0) infeasible_only = false;
  }
  throw Error(infeasible_only ? Errc::kInfeasible : Errc::kInvalidInput, joined);
}

}  // namespace

void require_valid(const KcInstance& instance) { require_valid_impl(instance); }
void require_valid(const UfpInstance& instance) { require_valid_impl(instance); }

KcInstance from_classic_kc(std::span<const std::int64_t> capacities,
                           std::span<const Rational> costs, std::int64_t demand) {
  if (capacities.size() != costs.size()) {
    throw Error(Errc::kInvalidInput, "capacities and costs differ in length");
  }
  KcInstance out;
  out.demand = demand;
  for (std::size_t i = 0; i < capacities.size(); ++i) {
    if (capacities[i] < 1) throw Error(Errc::kInvalidInput, "item " + std::to_string(i) + " has capacity 0");
    if (costs[i] < 0) throw Error(Errc::kInvalidInput, "item " + std::to_string(i) + " has negative cost");
    const auto m = static_cast<std::size_t>(std::min(capacities[i], demand));
    out.items.push_back(CostFunction::list(std::vector<Cost>(m, Cost(costs[i]))));
  }
  return out;
}

CostFunction expand_steps_to_list(const CostFunction& cost, std::int64_t cap) {
  if (cost.is_list()) return cost;
  if (cost.segments() > cap) {
    throw Error(Errc::kMaterializationTooLarge,
                "m = " + std::to_string(cost.segments()) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<Cost> values;
  values.reserve(static_cast<std::size_t>(cost.segments()));
  std::int64_t j = 1;
  for (const auto& piece : cost.step_pieces()) {
    for (; j <= piece.upto; ++j) values.push_back(piece.value);
  }
  return CostFunction::list(std::move(values));
}

KcInstance expand_steps_to_list(const KcInstance& instance, std::int64_t cap) {
  KcInstance out = instance;
  for (auto& f : out.items) f = expand_steps_to_list(f, cap);
  return out;
}

UfpInstance expand_steps_to_list(const UfpInstance& instance, std::int64_t cap) {
  UfpInstance out = instance;
  for (auto& item : out.items) item.cost = expand_steps_to_list(item.cost, cap);
  return out;
}

namespace {

void check_size(std::size_t items, const IntegralSolution& solution) {
  if (solution.levels.size() != items) {
    throw Error(Errc::kLevelOutOfRange, "solution has " + std::to_string(solution.levels.size()) +
                                            " levels for " + std::to_string(items) + " items");
  }
}

}  // namespace

Cost solution_cost(const KcInstance& instance, const IntegralSolution& solution) {
  check_size(instance.items.size(), solution);
  Cost total(0);
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    total += instance.items[i].value(solution.levels[i]);
  }
  return total;
}

Cost solution_cost(const UfpInstance& instance, const IntegralSolution& solution) {
  check_size(instance.items.size(), solution);
  Cost total(0);
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    total += instance.items[i].cost.value(solution.levels[i]);
  }
  return total;
}

bool is_feasible(const KcInstance& instance, const IntegralSolution& solution) {
  if (solution.levels.size() != instance.items.size()) return false;
  std::int64_t covered = 0;
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    if (solution.levels[i] < 0 || solution.levels[i] > instance.items[i].segments()) return false;
    covered += solution.levels[i];
  }
  return covered >= instance.demand;
}

std::optional<std::int64_t> first_uncovered(const UfpInstance& instance,
                                            std::span<const std::int64_t> levels) {
  const std::int64_t k = instance.horizon();
  // Difference array over points.
  std::vector<std::int64_t> delta(static_cast<std::size_t>(k + 2), 0);
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const auto& item = instance.items[i];
    delta[static_cast<std::size_t>(item.first)] += levels[i];
    delta[static_cast<std::size_t>(item.last + 1)] -= levels[i];
  }
  std::int64_t running = 0;
  for (std::int64_t t = 1; t <= k; ++t) {
    running += delta[static_cast<std::size_t>(t)];
    if (running < instance.demand_at(t)) return t;
  }
  return std::nullopt;
}

bool is_feasible(const UfpInstance& instance, const IntegralSolution& solution) {
  if (solution.levels.size() != instance.items.size()) return false;
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    if (solution.levels[i] < 0 || solution.levels[i] > instance.items[i].cost.segments()) return false;
  }
  return !first_uncovered(instance, solution.levels).has_value();
}

CompressedUfp compress_coordinates(const UfpInstance& instance) {
  const std::int64_t k = instance.horizon();
  // Item sets only change at interval endpoints, so a point starts a new run
  // iff some interval starts at it or some interval ended just before it.
  std::vector<bool> boundary(static_cast<std::size_t>(k + 2), false);
  std::vector<std::int64_t> cover_count(static_cast<std::size_t>(k + 2), 0);
  for (const auto& item : instance.items) {
    boundary[static_cast<std::size_t>(item.first)] = true;
    boundary[static_cast<std::size_t>(item.last + 1)] = true;
    cover_count[static_cast<std::size_t>(item.first)] += 1;
    cover_count[static_cast<std::size_t>(item.last + 1)] -= 1;
  }
  CompressedUfp out;
  std::vector<std::int64_t> run_of(static_cast<std::size_t>(k + 1), 0);
  std::int64_t covering = 0;
  std::vector<std::int64_t> demands;
  for (std::int64_t t = 1; t <= k; ++t) {
    covering += cover_count[static_cast<std::size_t>(t)];
    const std::int64_t d = instance.demand_at(t);
    if (covering == 0) {
      // No item reaches t; on a valid instance its demand is zero.
      if (d == 0) continue;
    }
    const bool extend = !out.runs.empty() && out.runs.back().last == t - 1 &&
                        !boundary[static_cast<std::size_t>(t)];
    if (extend) {
      auto& run = out.runs.back();
      run.last = t;
      if (d > demands.back()) {
        demands.back() = d;
        run.representative = t;
      }
    } else {
      out.runs.push_back(PointRun{t, t, t});
      demands.push_back(d);
    }
    run_of[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(out.runs.size());
  }
  out.instance.demands = std::move(demands);
  out.instance.items.reserve(instance.items.size());
  for (const auto& item : instance.items) {
    UfpItem mapped = item;
    mapped.first = run_of[static_cast<std::size_t>(item.first)];
    mapped.last = run_of[static_cast<std::size_t>(item.last)];
    out.instance.items.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace cover
