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

#include "cover/rational.hpp"

#include <cctype>

#include "cover/error.hpp"

namespace cover {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidInput: return "InvalidInput";
    case Errc::kInfeasible: return "Infeasible";
    case Errc::kLevelOutOfRange: return "LevelOutOfRange";
    case Errc::kMaterializationTooLarge: return "MaterializationTooLarge";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kChainViolated: return "ChainViolated";
    case Errc::kStalled: return "Stalled";
    case Errc::kOverfillDetected: return "OverfillDetected";
    case Errc::kIterationCapExceeded: return "IterationCapExceeded";
    case Errc::kInfeasibleMaster: return "InfeasibleMaster";
    case Errc::kAssemblyInfeasible: return "AssemblyInfeasible";
    case Errc::kNonMonotoneOracle: return "NonMonotoneOracle";
    case Errc::kUnsatisfiableSpec: return "UnsatisfiableSpec";
  }
  return "Unknown";
}

namespace {

bool is_integer_text(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) return false;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw Error(Errc::kInvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::kInvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class scaled = value.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value.get_den().get_mpz_t());
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits_text = scaled.get_str();
  if (static_cast<int>(digits_text.size()) <= digits) {
    digits_text.insert(0, static_cast<std::size_t>(digits + 1) - digits_text.size(), '0');
  }
  std::string out = negative && value != 0 ? "-" : "";
  out += digits_text.substr(0, digits_text.size() - static_cast<std::size_t>(digits));
  if (digits > 0) {
    out += ".";
    out += digits_text.substr(digits_text.size() - static_cast<std::size_t>(digits));
  }
  return out;
}

std::int64_t floor_to_int(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw Error(Errc::kInvalidInput, "integer overflow in floor");
  return q.get_si();
}

std::int64_t ceil_to_int(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw Error(Errc::kInvalidInput, "integer overflow in ceil");
  return q.get_si();
}

const Rational& Cost::value() const {
  if (is_infinite()) throw Error(Errc::kInvalidInput, "value() of an infinite cost");
  return std::get<Rational>(value_);
}

Cost operator+(const Cost& a, const Cost& b) {
  if (a.is_infinite() || b.is_infinite()) return Cost::infinite();
  return Cost(Rational(a.value() + b.value()));
}

Cost marginal(const Cost& upper, const Cost& lower) {
  if (upper.is_infinite()) return lower.is_infinite() ? Cost(0) : Cost::infinite();
  if (lower.is_infinite()) return Cost(0);
  return Cost(Rational(upper.value() - lower.value()));
}

bool operator==(const Cost& a, const Cost& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return a.value() == b.value();
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.is_infinite()) {
    return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  }
  if (b.is_infinite()) return std::strong_ordering::less;
  const int c = cmp(a.value(), b.value());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Cost& cost) {
  return cost.is_infinite() ? std::string("inf") : to_string(cost.value());
}

Cost parse_cost(std::string_view text) {
  if (text == "inf") return Cost::infinite();
  return Cost(parse_rational(text));
}

}  // namespace cover
