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
#include <random>
#include <string>

#include "cover/model.hpp"

namespace cover {

enum class InstanceKind { kKc, kUfp };
enum class CostFamily { kUniform, kFacility, kQuadratic, kSteps, kAdversarial };

std::string to_string(InstanceKind kind);
std::string to_string(CostFamily family);
InstanceKind parse_instance_kind(const std::string& name);
CostFamily parse_cost_family(const std::string& name);

/// Inclusive integer range.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Range&, const Range&) = default;
};

/// Marginals stay within max_marginal except where a family cannot:
/// quadratic needs at least 2m - 1.
/// uniform:     independent marginals in [0, max_marginal]
/// facility:    f(x) = b + c x, marginals (b+c, c, c, ...)
/// quadratic:   f(x) = a x^2 + b x, strictly increasing marginals
/// steps:       step form with a handful of random pieces over m segments
/// adversarial: one large first marginal followed by marginals in {0, 1}
struct GenSpec {
  InstanceKind kind = InstanceKind::kKc;
  Range n{1, 4};
  Range m{1, 4};
  Range k{1, 6};
  Range demand{1, 10};
  CostFamily family = CostFamily::kUniform;
  std::int64_t max_marginal = 20;
  std::uint64_t seed = 0;
  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// mt19937_64 with a rejection-sampled bounded draw. Standard
/// distributions differ between library vendors; this does not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::int64_t uniform(const Range& range) { return uniform(range.lo, range.hi); }
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::mt19937_64 engine_;
};

/// A validated, feasible instance; a pure function of `spec` and its
/// seed. Flow-cover demands are capped by the capacity covering each point.
/// Throws Error(kUnsatisfiableSpec) for empty ranges or demands that no
/// drawn instance can reach.
Instance generate(const GenSpec& spec);

/// Trial t of a benchmark: `spec` with its seed mixed with t.
GenSpec trial_spec(const GenSpec& spec, std::uint64_t trial);

}  // namespace cover
