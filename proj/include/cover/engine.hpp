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
#include <variant>
#include <vector>

#include "cover/certificate.hpp"
#include "cover/model.hpp"
#include "cover/rational.hpp"

namespace cover {

/// kUnit: one bucket per unit segment. kInterval: one bucket per run of
/// segments that starts at a positive marginal (or at segment 1) and spans
/// the zero marginals after it; the bucket's width is the run length.
/// kAuto picks kInterval for step-form costs and kUnit for lists.
enum class BucketMode { kAuto, kUnit, kInterval };

/// Dual constraint of a run of segments [first, last]. Only the first
/// segment carries capacity; the rest have marginal zero.
struct Bucket {
  std::int64_t first = 1;
  std::int64_t last = 1;
  Rational capacity;
  Rational fill;
  bool full = false;
  /// Set iff full and not yet taken: nearest non-full bucket below.
  std::optional<std::size_t> spill_to;

  std::int64_t width() const { return last - first + 1; }
};

/// A run of buckets bought together when the lowest pending bucket filled.
struct Block {
  std::size_t item = 0;
  std::int64_t first = 0;
  std::int64_t last = 0;
  /// Global creation order across all items.
  std::size_t seq = 0;

  std::int64_t size() const { return last - first + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

class Stair;

struct Rate {
  std::size_t bucket = 0;
  std::int64_t rate = 0;

  friend bool operator==(const Rate&, const Rate&) = default;
};
/// Sparse per-bucket fill rates of one stair, ascending by bucket.
using RateMap = std::vector<Rate>;

struct SpillUpdate {
  /// Buckets [from, to) now spill into `target`.
  std::size_t target = 0;
  std::size_t from = 0;
  std::size_t to = 0;
};

struct BlockTaken {
  std::int64_t first = 0;
  std::int64_t last = 0;
};

using FullOutcome = std::variant<SpillUpdate, BlockTaken>;

/// The buckets of one item, lowest segment first.
class Stair {
 public:
  Stair() = default;
  explicit Stair(std::vector<Bucket> buckets);

  /// Buckets for segments 1..min(finite_segments, cap) of `cost`.
  /// Throws Error(kMaterializationTooLarge) for kUnit beyond unit_cap.
  static Stair from_cost(const CostFunction& cost, std::int64_t cap, BucketMode mode,
                         std::int64_t unit_cap = kDefaultMaterializationCap);

  std::span<const Bucket> buckets() const { return buckets_; }
  const Bucket& bucket(std::size_t b) const { return buckets_[b]; }
  std::size_t size() const { return buckets_.size(); }

  /// Number of leading buckets already bought.
  std::size_t taken_buckets() const { return taken_; }
  /// a_i: number of leading segments already bought.
  std::int64_t taken_segments() const { return taken_ == 0 ? 0 : buckets_[taken_ - 1].last; }
  /// m_i: highest segment that can still be bought.
  std::int64_t top() const { return buckets_.empty() ? 0 : buckets_.back().last; }

  const std::vector<BlockTaken>& blocks() const { return blocks_; }

  friend void pour(const Rational& delta, std::span<Stair> stairs, std::span<const RateMap> rates,
                   Certificate& certificate, std::int64_t residual,
                   std::optional<std::int64_t> point, bool audit);
  friend FullOutcome on_full(Stair& stair, std::size_t bucket);

 private:
  std::vector<Bucket> buckets_;
  std::size_t taken_ = 0;
  std::vector<BlockTaken> blocks_;
};

/// Fill rates when segments (a_i, active_hi] receive external water: each
/// such segment sends one unit to its bucket, or to the bucket that bucket
/// spills into when full.
RateMap rates(const Stair& stair, std::int64_t active_hi);

struct BucketRef {
  std::size_t item = 0;
  std::size_t bucket = 0;

  friend bool operator==(const BucketRef&, const BucketRef&) = default;
};

struct Event {
  Rational delta;
  /// Every bucket reaching capacity after delta, sorted by (item, bucket).
  std::vector<BucketRef> tight;
};

/// Smallest dual increase that makes a non-full bucket tight. A bucket
/// that is already at capacity (zero-capacity buckets, or ties left over
/// from an earlier event) yields delta = 0 regardless of its rate.
/// Throws Error(kStalled) when no bucket can become tight.
Event next_event(std::span<const Stair> stairs, std::span<const RateMap> rates);

/// Adds delta * rate to every bucket and appends the raise to the ledger.
/// Zero raises are recorded only in audit mode; tau is kept only in audit
/// mode. Throws Error(kOverfillDetected) if a bucket exceeds capacity.
void pour(const Rational& delta, std::span<Stair> stairs, std::span<const RateMap> rates,
          Certificate& certificate, std::int64_t residual, std::optional<std::int64_t> point,
          bool audit);

/// Marks a tight bucket full. At the lowest pending position it buys the
/// maximal run of full buckets above it (truncated ones included);
/// elsewhere it redirects the spill of itself and the full run above it to
/// the nearest non-full bucket below.
FullOutcome on_full(Stair& stair, std::size_t bucket);

/// How simultaneous tight buckets are ordered.
enum class TieOrder {
  kItemFirst,     ///< smallest item, then lowest segment
  kSegmentFirst,  ///< lowest segment, then smallest item
};

/// The event loop shared by both primal-dual drivers: owns the stairs, the
/// global block list and the dual ledger.
class WaterFilling {
 public:
  WaterFilling(std::vector<Stair> stairs, bool audit);

  struct Step {
    BucketRef bucket;
    Rational delta;
    std::optional<Block> taken;
  };

  /// One main-loop iteration. active_hi[i] <= stair i's taken_segments()
  /// means item i receives no external water.
  Step advance(std::span<const std::int64_t> active_hi, std::int64_t residual,
               std::optional<std::int64_t> point, TieOrder order);

  std::span<const Stair> stairs() const { return stairs_; }
  const Stair& stair(std::size_t i) const { return stairs_[i]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Certificate& certificate() const { return certificate_; }
  Certificate release_certificate() { return std::move(certificate_); }

  /// Current a_i for every item.
  std::vector<std::int64_t> levels() const;

 private:
  std::vector<Stair> stairs_;
  std::vector<Block> blocks_;
  Certificate certificate_;
  bool audit_;
};

/// Builds one stair per item for the given cap on useful segments.
std::vector<Stair> build_stairs(const std::vector<std::reference_wrapper<const CostFunction>>& costs,
                                std::int64_t cap, BucketMode mode);

}  // namespace cover
