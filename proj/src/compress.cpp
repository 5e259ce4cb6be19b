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

#include "cover/compress.hpp"

#include <random>

#include "cover/error.hpp"

namespace cover {

CostOracle oracle_of(const CostFunction& cost) {
  return CostOracle{[cost](std::int64_t j) { return cost.value(j); }, cost.segments()};
}

std::string to_string(OracleFamily family) {
  switch (family) {
    case OracleFamily::kPolynomial: return "polynomial";
    case OracleFamily::kFacility: return "facility";
    case OracleFamily::kQuadratic: return "quadratic";
  }
  return "?";
}

OracleFamily parse_oracle_family(const std::string& name) {
  if (name == "polynomial") return OracleFamily::kPolynomial;
  if (name == "facility") return OracleFamily::kFacility;
  if (name == "quadratic") return OracleFamily::kQuadratic;
  throw Error(Errc::kInvalidInput, "unknown oracle family '" + name + "'");
}

CostOracle make_oracle(const OracleSpec& spec) {
  if (spec.m < 1) throw Error(Errc::kInvalidInput, "oracle m must be positive");
  for (const auto& p : spec.params) {
    if (p < 0) throw Error(Errc::kInvalidInput, "oracle parameters must be non-negative");
  }
  const auto arity = [&](std::size_t n) {
    if (spec.params.size() != n) {
      throw Error(Errc::kInvalidInput, to_string(spec.family) + " oracle takes " + std::to_string(n) + " parameters");
    }
  };
  const auto& p = spec.params;
  switch (spec.family) {
    case OracleFamily::kPolynomial: {
      arity(2);
      if (!is_integer(p[1])) throw Error(Errc::kInvalidInput, "polynomial degree must be an integer");
      const Rational c = p[0];
      const unsigned long degree = p[1].get_num().get_ui();
      return CostOracle{[c, degree](std::int64_t j) {
                          mpz_class power;
                          mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), degree);
                          return Cost(Rational(c * Rational(power)));
                        },
                        spec.m};
    }
    case OracleFamily::kFacility: {
      arity(2);
      const Rational b = p[0], c = p[1];
      return CostOracle{[b, c](std::int64_t j) { return Cost(Rational(b + c * j)); }, spec.m};
    }
    case OracleFamily::kQuadratic: {
      arity(3);
      const Rational a = p[0], b = p[1], c0 = p[2];
      return CostOracle{[a, b, c0](std::int64_t j) {
                          const Rational x(static_cast<long>(j));
                          return Cost(Rational(a * x * x + b * x + c0));
                        },
                        spec.m};
    }
  }
  throw Error(Errc::kInvalidInput, "unknown oracle family");
}

void spot_check_monotone(const CostOracle& oracle, int pairs, std::uint64_t seed) {
  if (oracle.m < 2) return;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(1, oracle.m);
  for (int k = 0; k < pairs; ++k) {
    std::int64_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (oracle.eval(b) < oracle.eval(a)) {
      throw Error(Errc::kNonMonotoneOracle,
                  "f(" + std::to_string(b) + ") < f(" + std::to_string(a) + ")");
    }
  }
}

PowerLadder::PowerLadder(Rational eps) : base_(1 + eps) {
  if (eps <= 0) throw Error(Errc::kInvalidInput, "epsilon must be positive");
  up_.push_back(Rational(1));
}

std::pair<std::int64_t, Rational> PowerLadder::ceil_power(const Rational& value) {
  if (value >= 1) {
    std::size_t k = 0;
    while (true) {
      if (k == up_.size()) up_.push_back(Rational(up_.back() * base_));
      if (up_[k] >= value) return {static_cast<std::int64_t>(k), up_[k]};
      ++k;
    }
  }
  // value < 1: largest k <= 0 with base^k >= value.
  std::size_t k = 0;
  while (true) {
    if (k == down_.size()) down_.push_back(Rational((k == 0 ? Rational(1) : down_.back()) / base_));
    if (down_[k] < value) {
      if (k == 0) return {0, up_[0]};
      return {-static_cast<std::int64_t>(k), down_[k - 1]};
    }
    ++k;
  }
}

Compression compress_function(const CostOracle& oracle, const Rational& eps) {
  if (eps <= 0) throw Error(Errc::kInvalidInput, "epsilon must be positive");
  Compression out;
  const auto query = [&](std::int64_t j) {
    ++out.queries;
    return oracle.eval(j);
  };
  PowerLadder ladder(eps);
  std::vector<StepPiece> pieces;
  std::int64_t j = 1;
  while (j <= oracle.m) {
    const Cost v = query(j);
    if (v.is_infinite()) {
      pieces.push_back({oracle.m, Cost::infinite()});
      break;
    }
    const Rational rounded = v.value() == 0 ? Rational(0) : ladder.ceil_power(v.value()).second;
    std::int64_t lo = j, hi = oracle.m;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo + 1) / 2;
      const Cost at = query(mid);
      if (at < v) {
        throw Error(Errc::kNonMonotoneOracle,
                    "f(" + std::to_string(mid) + ") < f(" + std::to_string(j) + ")");
      }
      if (at <= Cost(rounded)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    pieces.push_back({lo, Cost(rounded)});
    j = lo + 1;
  }
  out.function = CostFunction::steps(std::move(pieces));
  return out;
}

std::int64_t piece_bound(const CostOracle& oracle, const Rational& eps) {
  PowerLadder ladder(eps);
  // Largest finite value: binary search for the last finite point.
  std::int64_t lo = 0, hi = oracle.m;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (oracle.eval(mid).is_finite()) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  std::int64_t bound = 2;
  if (lo >= 1) {
    const Rational top = oracle.eval(lo).value();
    if (top > 0) {
      // First positive point; values below 1 add the negative exponents.
      std::int64_t a = 1, b = lo;
      while (a < b) {
        const std::int64_t mid = a + (b - a) / 2;
        if (oracle.eval(mid).value() > 0) {
          b = mid;
        } else {
          a = mid + 1;
        }
      }
      const std::int64_t low = ladder.ceil_power(oracle.eval(a).value()).first;
      bound += std::max<std::int64_t>(ladder.ceil_power(top).first, 0) - std::min<std::int64_t>(low, 0);
    }
  }
  if (lo < oracle.m) ++bound;
  return bound;
}

CompressionReport verify_compression(const CostOracle& oracle, const CostFunction& compressed,
                                     const Rational& eps, int samples, std::uint64_t seed) {
  if (eps <= 0) throw Error(Errc::kInvalidInput, "epsilon must be positive");
  CompressionReport report;
  report.pieces = compressed.form() == CostFunction::Form::kSteps
                      ? static_cast<std::int64_t>(compressed.step_pieces().size())
                      : compressed.segments();
  report.bound = piece_bound(oracle, eps);
  const auto fail = [&](std::int64_t j, std::string message) {
    if (!report.ok) return;
    report.ok = false;
    report.witness = j;
    report.message = std::move(message);
  };
  if (compressed.segments() != oracle.m) {
    fail(0, "compressed function has " + std::to_string(compressed.segments()) + " segments, oracle has " +
                std::to_string(oracle.m));
    return report;
  }
  const Rational factor = 1 + eps;
  const auto check = [&](std::int64_t j) {
    const Cost f = oracle.eval(j);
    const Cost g = compressed.value(j);
    const std::string at = " at j=" + std::to_string(j);
    if (f.is_infinite() || g.is_infinite()) {
      if (f.is_infinite() != g.is_infinite()) fail(j, "infinity not preserved" + at);
      return;
    }
    if (g.value() < f.value()) fail(j, "lower bound f <= f~ violated" + at);
    if (g.value() > factor * f.value()) fail(j, "upper bound f~ <= (1+eps) f violated" + at);
  };
  std::int64_t previous = 0;
  if (compressed.form() == CostFunction::Form::kSteps) {
    for (const auto& piece : compressed.step_pieces()) {
      check(previous + 1);
      check(piece.upto);
      previous = piece.upto;
    }
  } else {
    check(1);
    check(oracle.m);
  }
  if (oracle.m >= 1) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(1, oracle.m);
    for (int s = 0; s < samples; ++s) check(pick(rng));
  }
  if (report.pieces > report.bound) {
    fail(0, std::to_string(report.pieces) + " pieces exceed the bound " + std::to_string(report.bound));
  }
  return report;
}

}  // namespace cover
