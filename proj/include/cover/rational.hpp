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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace cover {

using Rational = mpq_class;

/// Parses "n", "-n" or "p/q" into a canonical rational. Throws
/// Error(kInvalidInput) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is one, else "p/q".
std::string to_string(const Rational& value);

/// Decimal rendering with a fixed number of digits after the point
/// (truncated toward zero). Used for human-facing reports only.
std::string to_decimal(const Rational& value, int digits = 6);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

/// Exact ceiling/floor of a rational as a 64-bit integer.
std::int64_t ceil_to_int(const Rational& value);
std::int64_t floor_to_int(const Rational& value);

struct Infinite {
  friend constexpr bool operator==(Infinite, Infinite) { return true; }
};

/// A cost in Q>=0 extended with a distinguished infinity. Infinity compares
/// above every finite value and absorbs addition.
class Cost {
 public:
  Cost() : value_(Rational(0)) {}
  Cost(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit
  Cost(std::int64_t value) : value_(Rational(static_cast<long>(value))) {}  // NOLINT
  Cost(int value) : value_(Rational(value)) {}  // NOLINT
  Cost(Infinite) : value_(Infinite{}) {}  // NOLINT

  static Cost infinite() { return Cost(Infinite{}); }

  bool is_infinite() const { return std::holds_alternative<Infinite>(value_); }
  bool is_finite() const { return !is_infinite(); }

  /// The finite value; throws Error(kInvalidInput) when infinite.
  const Rational& value() const;

  friend Cost operator+(const Cost& a, const Cost& b);
  Cost& operator+=(const Cost& other) { return *this = *this + other; }

  /// Marginal f(j) - f(j-1) of a non-decreasing function. Infinite minus
  /// finite is infinite; infinite minus infinite is zero by convention.
  friend Cost marginal(const Cost& upper, const Cost& lower);

  friend bool operator==(const Cost& a, const Cost& b);
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);

 private:
  std::variant<Rational, Infinite> value_;
};

Cost marginal(const Cost& upper, const Cost& lower);

/// JSON-facing text: "inf" or the rational text.
std::string to_string(const Cost& cost);
Cost parse_cost(std::string_view text);

}  // namespace cover
