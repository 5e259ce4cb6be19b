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

#include "cover/gen.hpp"

#include <algorithm>
#include <set>

#include "cover/error.hpp"

namespace cover {

std::string to_string(InstanceKind kind) { return kind == InstanceKind::kKc ? "kc" : "ufp"; }

std::string to_string(CostFamily family) {
  switch (family) {
    case CostFamily::kUniform: return "uniform";
    case CostFamily::kFacility: return "facility";
    case CostFamily::kQuadratic: return "quadratic";
    case CostFamily::kSteps: return "steps";
    case CostFamily::kAdversarial: return "adversarial";
  }
  return "?";
}

InstanceKind parse_instance_kind(const std::string& name) {
  if (name == "kc") return InstanceKind::kKc;
  if (name == "ufp") return InstanceKind::kUfp;
  throw Error(Errc::kInvalidInput, "unknown instance kind '" + name + "'");
}

CostFamily parse_cost_family(const std::string& name) {
  for (auto f : {CostFamily::kUniform, CostFamily::kFacility, CostFamily::kQuadratic, CostFamily::kSteps,
                 CostFamily::kAdversarial}) {
    if (to_string(f) == name) return f;
  }
  throw Error(Errc::kInvalidInput, "unknown cost family '" + name + "'");
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
  const std::uint64_t size = span + 1;
  // Reject the incomplete top bucket so every residue is equally likely.
  const std::uint64_t buckets = ~std::uint64_t{0} / size;
  std::uint64_t draw = next();
  while (draw / size >= buckets) draw = next();
  return lo + static_cast<std::int64_t>(draw % size);
}

bool Rng::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(denominator) - 1)) < numerator;
}

namespace {

void require_range(const Range& range, const char* name, std::int64_t floor) {
  if (range.lo > range.hi || range.lo < floor) {
    throw Error(Errc::kUnsatisfiableSpec, std::string("bad ") + name + " range [" + std::to_string(range.lo) + ", " +
                                              std::to_string(range.hi) + "]");
  }
}

CostFunction from_marginals(const std::vector<std::int64_t>& g) {
  std::vector<Cost> values;
  values.reserve(g.size());
  std::int64_t total = 0;
  for (auto v : g) {
    total += v;
    values.emplace_back(total);
  }
  return CostFunction::list(std::move(values));
}

CostFunction draw_cost(Rng& rng, const GenSpec& spec) {
  const std::int64_t m = rng.uniform(spec.m);
  const std::int64_t top = spec.max_marginal;
  std::vector<std::int64_t> g(static_cast<std::size_t>(m));
  switch (spec.family) {
    case CostFamily::kUniform:
      for (auto& v : g) v = rng.uniform(0, top);
      return from_marginals(g);
    case CostFamily::kFacility: {
      const std::int64_t c = rng.uniform(0, top / 4);
      const std::int64_t b = rng.uniform(0, top - c);
      for (auto& v : g) v = c;
      g[0] += b;
      return from_marginals(g);
    }
    case CostFamily::kQuadratic: {
      // Largest marginal a (2m - 1) + b stays within top when top allows it.
      const std::int64_t a = rng.uniform(1, std::max<std::int64_t>(1, std::min<std::int64_t>(3, top / (2 * m - 1))));
      const std::int64_t b = rng.uniform(0, std::max<std::int64_t>(0, std::min(top / 2, top - a * (2 * m - 1))));
      for (std::int64_t j = 1; j <= m; ++j) g[static_cast<std::size_t>(j - 1)] = a * (2 * j - 1) + b;
      return from_marginals(g);
    }
    case CostFamily::kAdversarial:
      for (auto& v : g) v = rng.uniform(0, 1);
      g[0] = rng.uniform(std::max<std::int64_t>(1, top / 2), std::max<std::int64_t>(1, top));
      return from_marginals(g);
    case CostFamily::kSteps: {
      const std::int64_t pieces = rng.uniform(1, std::min<std::int64_t>(m, 6));
      std::set<std::int64_t> ends{m};
      while (static_cast<std::int64_t>(ends.size()) < pieces) ends.insert(rng.uniform(1, m - 1));
      std::vector<StepPiece> out;
      std::int64_t value = rng.uniform(0, top);
      for (auto upto : ends) {
        out.push_back({upto, Cost(value)});
        value += rng.uniform(1, std::max<std::int64_t>(1, top));
      }
      return CostFunction::steps(std::move(out));
    }
  }
  throw Error(Errc::kInvalidInput, "unknown cost family");
}

constexpr int kAttempts = 64;

KcInstance generate_kc(Rng& rng, const GenSpec& spec) {
  if (spec.demand.lo > spec.n.hi * spec.m.hi) {
    throw Error(Errc::kUnsatisfiableSpec, "demand range exceeds the largest possible capacity");
  }
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    KcInstance instance;
    const std::int64_t n = rng.uniform(spec.n);
    std::int64_t capacity = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      instance.items.push_back(draw_cost(rng, spec));
      capacity += instance.items.back().segments();
    }
    if (capacity < spec.demand.lo) continue;
    instance.demand = rng.uniform(spec.demand.lo, std::min(spec.demand.hi, capacity));
    return instance;
  }
  throw Error(Errc::kUnsatisfiableSpec, "no drawn instance reached the minimum demand");
}

UfpInstance generate_ufp(Rng& rng, const GenSpec& spec) {
  UfpInstance instance;
  const std::int64_t n = rng.uniform(spec.n);
  const std::int64_t k = rng.uniform(spec.k);
  std::vector<std::int64_t> capacity(static_cast<std::size_t>(k), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    UfpItem item;
    item.cost = draw_cost(rng, spec);
    std::int64_t s = rng.uniform(1, k), e = rng.uniform(1, k);
    if (s > e) std::swap(s, e);
    item.first = s;
    item.last = e;
    for (std::int64_t t = s; t <= e; ++t) capacity[static_cast<std::size_t>(t - 1)] += item.cost.segments();
    instance.items.push_back(std::move(item));
  }
  for (std::int64_t t = 1; t <= k; ++t) {
    const std::int64_t d = rng.uniform(spec.demand);
    instance.demands.push_back(std::min(d, capacity[static_cast<std::size_t>(t - 1)]));
  }
  return instance;
}

}  // namespace

Instance generate(const GenSpec& spec) {
  require_range(spec.n, "n", 1);
  require_range(spec.m, "m", 1);
  require_range(spec.demand, "demand", 0);
  if (spec.kind == InstanceKind::kUfp) require_range(spec.k, "k", 1);
  if (spec.max_marginal < 0) throw Error(Errc::kUnsatisfiableSpec, "max_marginal must be non-negative");
  Rng rng(spec.seed);
  Instance out;
  if (spec.kind == InstanceKind::kKc) {
    out = generate_kc(rng, spec);
  } else {
    out = generate_ufp(rng, spec);
  }
  const ValidationReport report = validate(out);
  if (!report.ok) throw Error(Errc::kUnsatisfiableSpec, "generated instance is invalid: " + report.issues.front());
  return out;
}

GenSpec trial_spec(const GenSpec& spec, std::uint64_t trial) {
  GenSpec out = spec;
  // splitmix64 finalizer over (seed, trial).
  std::uint64_t z = spec.seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  out.seed = z ^ (z >> 31);
  return out;
}

}  // namespace cover
