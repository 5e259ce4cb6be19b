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

#include "cover/engine.hpp"

#include <algorithm>
#include <tuple>

#include "cover/error.hpp"

namespace cover {

Stair::Stair(std::vector<Bucket> buckets) : buckets_(std::move(buckets)) {}

Stair Stair::from_cost(const CostFunction& cost, std::int64_t cap, BucketMode mode,
                       std::int64_t unit_cap) {
  const std::int64_t m = std::min(cost.finite_segments(), std::max<std::int64_t>(cap, 0));
  if (mode == BucketMode::kAuto) {
    mode = cost.is_list() ? BucketMode::kUnit : BucketMode::kInterval;
  }
  std::vector<Bucket> buckets;
  if (mode == BucketMode::kUnit) {
    if (m > unit_cap) {
      throw Error(Errc::kMaterializationTooLarge,
                  "unit buckets for m = " + std::to_string(m) + " exceed cap " + std::to_string(unit_cap));
    }
    buckets.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 1; j <= m; ++j) {
      buckets.push_back(Bucket{j, j, cost.marginal(j).value(), Rational(0), false, std::nullopt});
    }
    return Stair(std::move(buckets));
  }
  for (const std::int64_t j : cost.breakpoints()) {
    if (j > m) break;
    Rational g = cost.marginal(j).value();
    if (j == 1 || g > 0) {
      if (!buckets.empty()) buckets.back().last = j - 1;
      buckets.push_back(Bucket{j, m, std::move(g), Rational(0), false, std::nullopt});
    }
  }
  return Stair(std::move(buckets));
}

RateMap rates(const Stair& stair, std::int64_t active_hi) {
  RateMap out;
  const auto buckets = stair.buckets();
  // Accumulate per target bucket; targets are always at or above the
  // lowest pending bucket.
  std::vector<std::int64_t> acc(buckets.size(), 0);
  for (std::size_t b = stair.taken_buckets(); b < buckets.size(); ++b) {
    const Bucket& bucket = buckets[b];
    if (bucket.first > active_hi) break;
    const std::int64_t external = std::min(bucket.last, active_hi) - bucket.first + 1;
    const std::size_t target = bucket.full ? *bucket.spill_to : b;
    acc[target] += external;
  }
  for (std::size_t b = stair.taken_buckets(); b < buckets.size(); ++b) {
    if (acc[b] > 0) out.push_back(Rate{b, acc[b]});
  }
  return out;
}

Event next_event(std::span<const Stair> stairs, std::span<const RateMap> rate_maps) {
  std::optional<Rational> best;
  std::vector<BucketRef> tight;
  auto consider = [&](const Rational& delta, BucketRef ref) {
    if (!best || delta < *best) {
      best = delta;
      tight.clear();
      tight.push_back(ref);
    } else if (delta == *best) {
      tight.push_back(ref);
    }
  };
  for (std::size_t i = 0; i < stairs.size(); ++i) {
    const Stair& stair = stairs[i];
    const RateMap& rate_map = rate_maps[i];
    auto rate_it = rate_map.begin();
    for (std::size_t b = stair.taken_buckets(); b < stair.size(); ++b) {
      const Bucket& bucket = stair.bucket(b);
      while (rate_it != rate_map.end() && rate_it->bucket < b) ++rate_it;
      if (bucket.full) continue;
      const std::int64_t rate =
          rate_it != rate_map.end() && rate_it->bucket == b ? rate_it->rate : 0;
      if (bucket.fill == bucket.capacity) {
        consider(Rational(0), BucketRef{i, b});
      } else if (rate > 0) {
        consider(Rational((bucket.capacity - bucket.fill) / rate), BucketRef{i, b});
      }
    }
  }
  if (!best) throw Error(Errc::kStalled, "no bucket receives water");
  return Event{std::move(*best), std::move(tight)};
}

void pour(const Rational& delta, std::span<Stair> stairs, std::span<const RateMap> rate_maps,
          Certificate& certificate, std::int64_t residual, std::optional<std::int64_t> point,
          bool audit) {
  const bool positive = delta > 0;
  if (!positive && !audit) return;
  AuditRecord record{delta, residual, point, {}};
  for (std::size_t i = 0; i < stairs.size(); ++i) {
    for (const Rate& r : rate_maps[i]) {
      Bucket& bucket = stairs[i].buckets_[r.bucket];
      if (positive) {
        bucket.fill += delta * r.rate;
        if (bucket.fill > bucket.capacity) {
          throw Error(Errc::kOverfillDetected, "item " + std::to_string(i) + " segment " +
                                                   std::to_string(bucket.first) + " overfilled");
        }
      }
      if (audit) record.tau.push_back(TauEntry{i, bucket.first, r.rate});
    }
  }
  certificate.dual_objective += delta * residual;
  certificate.raises.push_back(std::move(record));
}

FullOutcome on_full(Stair& stair, std::size_t b) {
  auto& buckets = stair.buckets_;
  buckets[b].full = true;
  if (b == stair.taken_) {
    std::size_t q = b;
    while (q + 1 < buckets.size() && buckets[q + 1].full) ++q;
    for (std::size_t r = b; r <= q; ++r) buckets[r].spill_to.reset();
    stair.taken_ = q + 1;
    BlockTaken taken{buckets[b].first, buckets[q].last};
    stair.blocks_.push_back(taken);
    return taken;
  }
  // The lowest pending bucket is not full, so p always exists.
  std::size_t p = b - 1;
  while (buckets[p].full) --p;
  std::size_t q = b + 1;
  while (q < buckets.size() && buckets[q].full) ++q;
  for (std::size_t l = b; l < q; ++l) buckets[l].spill_to = p;
  return SpillUpdate{p, b, q};
}

WaterFilling::WaterFilling(std::vector<Stair> stairs, bool audit)
    : stairs_(std::move(stairs)), audit_(audit) {
  certificate_.audited = audit;
}

WaterFilling::Step WaterFilling::advance(std::span<const std::int64_t> active_hi,
                                         std::int64_t residual, std::optional<std::int64_t> point,
                                         TieOrder order) {
  std::vector<RateMap> rate_maps(stairs_.size());
  for (std::size_t i = 0; i < stairs_.size(); ++i) rate_maps[i] = rates(stairs_[i], active_hi[i]);
  Event event = next_event(stairs_, rate_maps);
  pour(event.delta, stairs_, rate_maps, certificate_, residual, point, audit_);

  BucketRef chosen = event.tight.front();
  if (order == TieOrder::kSegmentFirst) {
    auto key = [&](const BucketRef& r) {
      return std::make_tuple(stairs_[r.item].bucket(r.bucket).first, r.item);
    };
    chosen = *std::min_element(event.tight.begin(), event.tight.end(),
                               [&](const BucketRef& x, const BucketRef& y) { return key(x) < key(y); });
  }
  Step step{chosen, event.delta, std::nullopt};
  const FullOutcome outcome = on_full(stairs_[chosen.item], chosen.bucket);
  if (const auto* taken = std::get_if<BlockTaken>(&outcome)) {
    Block block{chosen.item, taken->first, taken->last, blocks_.size()};
    blocks_.push_back(block);
    step.taken = block;
  }
  return step;
}

std::vector<std::int64_t> WaterFilling::levels() const {
  std::vector<std::int64_t> out;
  out.reserve(stairs_.size());
  for (const auto& stair : stairs_) out.push_back(stair.taken_segments());
  return out;
}

std::vector<Stair> build_stairs(const std::vector<std::reference_wrapper<const CostFunction>>& costs,
                                std::int64_t cap, BucketMode mode) {
  std::vector<Stair> out;
  out.reserve(costs.size());
  for (const CostFunction& cost : costs) out.push_back(Stair::from_cost(cost, cap, mode));
  return out;
}

}  // namespace cover
