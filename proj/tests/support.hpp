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
#include <optional>
#include <vector>

#include "cover/gen.hpp"
#include "cover/model.hpp"
#include "cover/oracles.hpp"
#include "cover/rational.hpp"

namespace cover::testing {

/// Optimum by enumerating every level vector. Slow; small instances only.
Cost enumerate_kc(const KcInstance& instance);

/// Optimum of a flow-cover instance by enumerating every level vector.
Cost enumerate_ufp(const UfpInstance& instance);

/// Most violated knapsack-cover cut by enumerating every a in prod {0..m_i}
/// and every d, with ties to smaller d then lexicographically smaller a.
std::optional<ViolatedCut> enumerate_separation(const KcInstance& instance, const FractionalSolution& z);

/// Optimum of min sum g z s.t. sum z >= target and per-item chains
/// 1 >= z_1 >= ... >= z_s >= 0, by enumerating every basis of the
/// constraint system and solving it exactly.
struct VertexOptimum {
  Rational cost;
  std::vector<std::vector<Rational>> z;
};
std::optional<VertexOptimum> enumerate_chain_vertices(const std::vector<std::vector<Rational>>& marginals,
                                                      const Rational& target);

KcInstance random_kc(std::uint64_t seed, std::int64_t n_max, std::int64_t m_max, std::int64_t g_max,
                     std::int64_t d_max, CostFamily family = CostFamily::kUniform);
UfpInstance random_ufp(std::uint64_t seed, std::int64_t n_max, std::int64_t k_max, std::int64_t m_max,
                       std::int64_t d_max, std::int64_t g_max = 10);

/// Canonical a/b.
inline Rational q(std::int64_t a, std::int64_t b) {
  Rational r(static_cast<long>(a), static_cast<long>(b));
  r.canonicalize();
  return r;
}

/// List built from marginals.
CostFunction from_marginals(const std::vector<std::int64_t>& g);

}  // namespace cover::testing
