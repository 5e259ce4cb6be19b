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

#include "cover/certificate.hpp"

#include <map>
#include <utility>

#include "cover/error.hpp"

namespace cover {

CheckReport check_dual_certificate(
    const std::vector<std::reference_wrapper<const CostFunction>>& costs,
    const IntegralSolution& solution, const Cost& claimed_cost, const Certificate& certificate,
    std::int64_t factor) {
  CheckReport report;
  const std::size_t n = costs.size();
  if (!certificate.audited) {
    report.fail("certificate was produced without audit mode; tau vectors missing");
    return report;
  }
  if (solution.levels.size() != n) {
    report.fail("solution has " + std::to_string(solution.levels.size()) + " levels for " +
                std::to_string(n) + " items");
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const CostFunction& f = costs[i];
    if (solution.levels[i] < 0 || solution.levels[i] > f.segments()) {
      report.fail("level of item " + std::to_string(i) + " out of range");
      return report;
    }
  }

  // Replay: fills per bucket, flagging the first raise that overfills.
  std::map<std::pair<std::size_t, std::int64_t>, Rational> fill;
  Rational dual(0);
  bool replay_ok = true;
  for (std::size_t r = 0; r < certificate.raises.size() && replay_ok; ++r) {
    const AuditRecord& raise = certificate.raises[r];
    const std::string tag = "raise #" + std::to_string(r);
    if (raise.delta < 0) {
      report.fail(tag + ": negative delta");
      replay_ok = false;
      break;
    }
    if (raise.residual < 0) report.fail(tag + ": negative residual");
    dual += raise.delta * raise.residual;
    Rational covered(0);
    for (const TauEntry& e : raise.tau) {
      if (e.item >= n || e.segment < 1 || e.segment > costs[e.item].get().segments() || e.rate <= 0) {
        report.fail(tag + ": malformed tau entry (item " + std::to_string(e.item) + ", segment " +
                    std::to_string(e.segment) + ", rate " + std::to_string(e.rate) + ")");
        replay_ok = false;
        break;
      }
      Rational& bucket_fill = fill[{e.item, e.segment}];
      bucket_fill += raise.delta * e.rate;
      const Cost g = costs[e.item].get().marginal(e.segment);
      if (g.is_finite() && bucket_fill > g.value()) {
        report.fail(tag + ": dual infeasible, bucket (item " + std::to_string(e.item) + ", segment " +
                    std::to_string(e.segment) + ") filled to " + to_string(bucket_fill) +
                    " above capacity " + to_string(g.value()));
        replay_ok = false;
      }
      if (solution.levels[e.item] >= e.segment) covered += e.rate;
    }
    if (raise.delta > 0 && covered > Rational(factor * raise.residual)) {
      report.fail(tag + ": slackness violated, sum tau*z = " + to_string(covered) + " > " +
                  std::to_string(factor) + " * " + std::to_string(raise.residual));
    }
  }
  if (dual != certificate.dual_objective) {
    report.fail("dual objective " + to_string(certificate.dual_objective) +
                " differs from ledger sum " + to_string(dual));
  }

  // Every bought segment with non-zero marginal must have a tight bucket.
  if (replay_ok) {
    for (std::size_t i = 0; i < n; ++i) {
      const CostFunction& f = costs[i];
      for (const std::int64_t s : f.breakpoints()) {
        if (s > solution.levels[i]) break;
        const Cost g = f.marginal(s);
        const auto it = fill.find({i, s});
        const Rational got = it == fill.end() ? Rational(0) : it->second;
        if (g.is_infinite() || got != g.value()) {
          report.fail("bought segment (item " + std::to_string(i) + ", segment " + std::to_string(s) +
                      ") is not tight: fill " + to_string(got) + ", capacity " + to_string(g));
        }
      }
    }
  }

  Cost actual(0);
  for (std::size_t i = 0; i < n; ++i) actual += costs[i].get().value(solution.levels[i]);
  if (actual != claimed_cost) {
    report.fail("claimed cost " + to_string(claimed_cost) + " differs from cost of levels " +
                to_string(actual));
  }
  if (actual.is_infinite() || actual.value() > factor * certificate.dual_objective) {
    report.fail("primal cost " + to_string(actual) + " exceeds " + std::to_string(factor) +
                " * dual objective " + to_string(certificate.dual_objective));
  }
  return report;
}

}  // namespace cover
