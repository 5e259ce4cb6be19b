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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cover/model.hpp"
#include "cover/rational.hpp"

namespace cover {

/// Point-query access to a non-decreasing cost function on {1..m}.
struct CostOracle {
  std::function<Cost(std::int64_t)> eval;
  std::int64_t m = 0;
};

/// Oracle view of an explicit cost function.
CostOracle oracle_of(const CostFunction& cost);

enum class OracleFamily { kPolynomial, kFacility, kQuadratic };

/// polynomial: params {c, p}, f(j) = c * j^p (p a non-negative integer).
/// facility:   params {b, c}, f(j) = b + c * j.
/// quadratic:  params {a, b, c0}, f(j) = a * j^2 + b * j + c0.
struct OracleSpec {
  OracleFamily family = OracleFamily::kFacility;
  std::vector<Rational> params;
  std::int64_t m = 0;
  friend bool operator==(const OracleSpec&, const OracleSpec&) = default;
};

std::string to_string(OracleFamily family);
OracleFamily parse_oracle_family(const std::string& name);

/// Throws Error(kInvalidInput) on a bad parameter list or negative values.
CostOracle make_oracle(const OracleSpec& spec);

/// Samples random pairs j < j' and throws Error(kNonMonotoneOracle) on a
/// witnessed decrease.
void spot_check_monotone(const CostOracle& oracle, int pairs, std::uint64_t seed);

struct Compression {
  CostFunction function;
  std::uint64_t queries = 0;
};

/// Smallest power (1+eps)^k >= value for value > 0, k possibly negative.
/// Memoizes the powers it walks through.
class PowerLadder {
 public:
  explicit PowerLadder(Rational eps);
  std::pair<std::int64_t, Rational> ceil_power(const Rational& value);

 private:
  Rational base_;
  std::vector<Rational> up_;    // base^0, base^1, ...
  std::vector<Rational> down_;  // base^-1, base^-2, ...
};

/// Steps-form f~ with f <= f~ <= (1+eps) f: zero stays zero, infinity stays
/// infinity and every other value is rounded up to a power of (1+eps).
/// Piece ends are located by binary search. Throws Error(kInvalidInput)
/// for eps <= 0 and Error(kNonMonotoneOracle) when a query witnesses a
/// decrease.
Compression compress_function(const CostOracle& oracle, const Rational& eps);

/// max(ceil(log_{1+eps} top), 0) + 2 plus one for an infinite tail, where
/// top is the largest finite value of the oracle. Values below 1 add
/// -ceil(log_{1+eps} low) for the smallest positive value low.
std::int64_t piece_bound(const CostOracle& oracle, const Rational& eps);

struct CompressionReport {
  bool ok = true;
  std::optional<std::int64_t> witness;
  std::string message;
  std::int64_t pieces = 0;
  std::int64_t bound = 0;
};

/// Checks f <= f~ <= (1+eps) f at every piece boundary and at `samples`
/// random points, and the piece count bound.
CompressionReport verify_compression(const CostOracle& oracle, const CostFunction& compressed,
                                     const Rational& eps, int samples, std::uint64_t seed = 1);

}  // namespace cover
