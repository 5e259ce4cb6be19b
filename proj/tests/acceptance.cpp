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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "cover/compress.hpp"
#include "cover/error.hpp"
#include "cover/json_io.hpp"
#include "cover/lp_round.hpp"
#include "cover/oracles.hpp"
#include "cover/pd_kc.hpp"
#include "cover/pd_ufp.hpp"
#include "support.hpp"

using namespace cover;
namespace ct = cover::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

const PdOptions kAudit{true, BucketMode::kAuto};

PdUfpOptions ufp_audit() {
  PdUfpOptions o;
  o.audit = true;
  return o;
}

// Shared suites, generated once.
std::vector<KcInstance> kc_suite() {
  std::vector<KcInstance> out;
  for (std::uint64_t s = 0; s < 500; ++s) {
    out.push_back(ct::random_kc(s, 6, 6, 20, 20, static_cast<CostFamily>(s % 5)));
  }
  return out;
}

std::vector<UfpInstance> ufp_suite() {
  std::vector<UfpInstance> out;
  for (std::uint64_t s = 0; s < 300; ++s) out.push_back(ct::random_ufp(1000 + s, 5, 8, 4, 6));
  return out;
}

const std::vector<KcInstance>& kcs() {
  static const auto suite = kc_suite();
  return suite;
}

const std::vector<UfpInstance>& ufps() {
  static const auto suite = ufp_suite();
  return suite;
}

Outcome kc_ratio() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  Rational worst(0);
  for (const auto& kc : kcs()) {
    const PdKcResult r = solve_pd_kc(kc, kAudit);
    const Cost opt = exact_kc(kc).cost;
    if (r.primal_cost.is_infinite() || r.primal_cost.value() > 2 * opt.value()) ++violations;
    if (opt.value() > 0) worst = std::max(worst, Rational(r.primal_cost.value() / opt.value()));
  }
  const double t = seconds_since(start);
  Outcome o{violations == 0 && t < 30.0, ""};
  o.detail = std::to_string(kcs().size()) + " instances, " + std::to_string(violations) +
             " violations, max ratio " + to_string(worst) + " (" + to_decimal(worst) + "), " + std::to_string(t) + " s";
  return o;
}

Outcome kc_sandwich() {
  std::size_t violations = 0;
  for (const auto& kc : kcs()) {
    const PdKcResult r = solve_pd_kc(kc, kAudit);
    const Rational opt = exact_kc(kc).cost.value();
    const Rational& dual = r.certificate.dual_objective;
    const Rational& primal = r.primal_cost.value();
    if (!(dual <= opt && opt <= primal && primal <= 2 * dual)) ++violations;
  }
  return {violations == 0, std::to_string(kcs().size()) + " instances, " + std::to_string(violations) +
                               " violations of dual <= OPT <= primal <= 2 dual"};
}

// Rational fill of every bucket after replaying the ledger.
std::map<std::pair<std::size_t, std::int64_t>, Rational> replay(const Certificate& c) {
  std::map<std::pair<std::size_t, std::int64_t>, Rational> fill;
  for (const auto& r : c.raises) {
    for (const auto& t : r.tau) fill[{t.item, t.segment}] += r.delta * t.rate;
  }
  return fill;
}

struct FaultTally {
  std::size_t clean_fail = 0;
  std::size_t inflated_missed = 0, inflated_skipped = 0;
  std::size_t decrement_missed = 0, decrement_skipped = 0;
  std::size_t forged_missed = 0, forged_skipped = 0;
  std::size_t runs = 0;
};

using Checker = std::function<CheckReport(const IntegralSolution&, const Cost&, const Certificate&)>;

void inject_faults(const std::vector<std::reference_wrapper<const CostFunction>>& costs, const IntegralSolution& sol,
                   const Cost& cost, const Certificate& cert, const Checker& check,
                   const std::function<bool(const IntegralSolution&)>& feasible, FaultTally& tally) {
  ++tally.runs;
  if (!check(sol, cost, cert).ok()) ++tally.clean_fail;
  const auto fill = replay(cert);
  const auto tight = [&](const TauEntry& e) {
    const Cost g = costs[e.item].get().marginal(e.segment);
    const auto it = fill.find({e.item, e.segment});
    return g.is_finite() && it != fill.end() && it->second == g.value();
  };

  // Inflated delta: the last raise touching a bucket that ends tight; the
  // dual objective is kept consistent so only the replay can object.
  {
    std::optional<std::size_t> target;
    for (std::size_t r = cert.raises.size(); r-- > 0 && !target;) {
      for (const auto& e : cert.raises[r].tau) {
        if (tight(e)) {
          target = r;
          break;
        }
      }
    }
    if (!target) {
      ++tally.inflated_skipped;
    } else {
      Certificate bad = cert;
      bad.raises[*target].delta += 1;
      bad.dual_objective += bad.raises[*target].residual;
      if (check(sol, cost, bad).ok()) ++tally.inflated_missed;
    }
  }

  // Decremented level: prefer a decrement that uncovers demand; otherwise a
  // decrement that changes the cost while the claimed cost stays the same.
  {
    std::optional<IntegralSolution> bad;
    for (std::size_t i = 0; i < sol.levels.size() && !bad; ++i) {
      if (sol.levels[i] == 0) continue;
      IntegralSolution s = sol;
      --s.levels[i];
      if (!feasible(s)) bad = s;
    }
    for (std::size_t i = 0; i < sol.levels.size() && !bad; ++i) {
      if (sol.levels[i] == 0) continue;
      const Cost g = costs[i].get().marginal(sol.levels[i]);
      if (g != Cost(0)) {
        IntegralSolution s = sol;
        --s.levels[i];
        bad = s;
      }
    }
    if (!bad) {
      ++tally.decrement_skipped;
    } else if (check(*bad, cost, cert).ok()) {
      ++tally.decrement_missed;
    }
  }

  // Forged tau: one more unit of rate on a tight bucket in a positive raise.
  {
    std::optional<std::pair<std::size_t, std::size_t>> target;
    for (std::size_t r = cert.raises.size(); r-- > 0 && !target;) {
      if (cert.raises[r].delta <= 0) continue;
      for (std::size_t e = 0; e < cert.raises[r].tau.size(); ++e) {
        if (tight(cert.raises[r].tau[e])) {
          target = {r, e};
          break;
        }
      }
    }
    if (!target) {
      ++tally.forged_skipped;
    } else {
      Certificate bad = cert;
      bad.raises[target->first].tau[target->second].rate += 1;
      if (check(sol, cost, bad).ok()) ++tally.forged_missed;
    }
  }
}

Outcome certificate_soundness() {
  FaultTally kc_tally, ufp_tally;
  for (const auto& kc : kcs()) {
    const PdKcResult r = solve_pd_kc(kc, kAudit);
    std::vector<std::reference_wrapper<const CostFunction>> costs(kc.items.begin(), kc.items.end());
    if (!check_certificate_kc(kc, r).ok()) ++kc_tally.clean_fail;
    inject_faults(
        costs, r.solution, r.primal_cost, r.certificate,
        [&](const IntegralSolution& s, const Cost& c, const Certificate& cert) {
          return check_certificate_kc(kc, s, c, cert);
        },
        [&](const IntegralSolution& s) { return is_feasible(kc, s); }, kc_tally);
  }
  for (const auto& u : ufps()) {
    const PdUfpResult r = solve_pd_ufp(u, ufp_audit());
    std::vector<std::reference_wrapper<const CostFunction>> costs;
    for (const auto& it : u.items) costs.emplace_back(it.cost);
    if (!check_certificate_ufp(u, r).ok()) ++ufp_tally.clean_fail;
    inject_faults(
        costs, r.solution, r.primal_cost, r.certificate,
        [&](const IntegralSolution& s, const Cost& c, const Certificate& cert) {
          return check_certificate_ufp(u, s, c, cert);
        },
        [&](const IntegralSolution& s) { return is_feasible(u, s); }, ufp_tally);
  }
  const auto line = [](const char* name, const FaultTally& t) {
    std::ostringstream os;
    os << name << ": " << t.runs << " outputs, " << t.clean_fail << " clean failures; missed faults "
       << "inflated=" << t.inflated_missed << " decremented=" << t.decrement_missed << " forged=" << t.forged_missed
       << "; not applicable " << t.inflated_skipped << "/" << t.decrement_skipped << "/" << t.forged_skipped;
    return os.str();
  };
  const auto ok = [](const FaultTally& t) {
    const std::size_t tested_each = t.runs - std::max({t.inflated_skipped, t.decrement_skipped, t.forged_skipped});
    return t.clean_fail == 0 && t.inflated_missed == 0 && t.decrement_missed == 0 && t.forged_missed == 0 &&
           tested_each > 0;
  };
  return {ok(kc_tally) && ok(ufp_tally), line("kc", kc_tally) + " | " + line("ufp", ufp_tally)};
}

Outcome ufp_ratio() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  Rational worst(0);
  for (const auto& u : ufps()) {
    const PdUfpResult r = solve_pd_ufp(u, ufp_audit());
    const Cost opt = brute_force_ufp(u).cost;
    if (r.primal_cost.is_infinite() || r.primal_cost.value() > 4 * opt.value()) ++violations;
    if (opt.value() > 0) worst = std::max(worst, Rational(r.primal_cost.value() / opt.value()));
  }
  const double t = seconds_since(start);
  return {violations == 0 && t < 60.0, std::to_string(ufps().size()) + " instances, " + std::to_string(violations) +
                                           " violations, max ratio " + to_string(worst) + " (" + to_decimal(worst) +
                                           "), " + std::to_string(t) + " s"};
}

Outcome engine_equivalence() {
  std::size_t mismatches = 0, count = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    GenSpec spec;
    spec.family = CostFamily::kSteps;
    spec.n = {1, 5};
    spec.m = {1, 64};
    spec.demand = {1, 120};
    spec.seed = 5000 + s;
    const KcInstance kc = std::get<KcInstance>(generate(spec));
    const PdKcResult interval = solve_pd_kc(kc, PdOptions{true, BucketMode::kInterval});
    const PdKcResult unit = solve_pd_kc(kc, PdOptions{true, BucketMode::kUnit});
    const PdKcResult listed = solve_pd_kc(expand_steps_to_list(kc), PdOptions{true, BucketMode::kUnit});
    ++count;
    if (interval.primal_cost != unit.primal_cost || interval.certificate.dual_objective != unit.certificate.dual_objective ||
        unit.primal_cost != listed.primal_cost ||
        unit.certificate.dual_objective != listed.certificate.dual_objective) {
      ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(count) + " step instances (m <= 64), " + std::to_string(mismatches) +
                               " cost or dual mismatches between interval and unit buckets"};
}

// Random monotone integer oracle over m points.
CostOracle random_oracle(Rng& rng, std::int64_t m) {
  switch (rng.uniform(0, 3)) {
    case 0:
      return make_oracle(OracleSpec{OracleFamily::kPolynomial, {Rational(rng.uniform(1, 9)), Rational(rng.uniform(0, 3))}, m});
    case 1:
      return make_oracle(OracleSpec{OracleFamily::kFacility, {Rational(rng.uniform(0, 40)), Rational(rng.uniform(0, 6))}, m});
    case 2:
      return make_oracle(OracleSpec{
          OracleFamily::kQuadratic, {Rational(rng.uniform(1, 3)), Rational(rng.uniform(0, 9)), Rational(rng.uniform(0, 9))}, m});
    default: {
      m = std::min<std::int64_t>(m, 2000);
      std::vector<Cost> values;
      std::int64_t total = 0;
      for (std::int64_t j = 0; j < m; ++j) {
        total += rng.chance(1, 3) ? rng.uniform(0, 50) : 0;
        values.emplace_back(total);
      }
      return oracle_of(CostFunction::list(std::move(values)));
    }
  }
}

// ceil(log_{1+eps} v) for v >= 1 by repeated multiplication.
std::int64_t ceil_log(const Rational& v, const Rational& eps) {
  std::int64_t k = 0;
  Rational p(1);
  while (p < v) {
    p *= 1 + eps;
    ++k;
  }
  return k;
}

Outcome compression_bounds() {
  Rng rng(606);
  std::size_t oracles = 0, bound_fail = 0, count_fail = 0, e2e = 0, e2e_fail = 0;
  std::size_t ufp_e2e = 0, ufp_fail = 0;
  const std::vector<Rational> epsilons{Rational(1, 10), Rational(1, 2), Rational(1)};
  for (int trial = 0; trial < 120; ++trial) {
    const CostOracle oracle = random_oracle(rng, rng.uniform(1, trial % 4 == 0 ? 1000000 : 200));
    ++oracles;
    for (const auto& eps : epsilons) {
      const Compression c = compress_function(oracle, eps);
      const CompressionReport report = verify_compression(oracle, c.function, eps, 300, static_cast<std::uint64_t>(trial));
      if (!report.ok) ++bound_fail;
      const Rational top = oracle.eval(oracle.m).value();
      const std::int64_t bound = (top >= 1 ? ceil_log(top, eps) : 0) + 2;
      if (static_cast<std::int64_t>(c.function.step_pieces().size()) > bound) ++count_fail;
    }
  }
  for (std::uint64_t s = 0; s < 100; ++s) {
    KcInstance kc;
    const std::int64_t n = rng.uniform(1, 4);
    for (std::int64_t i = 0; i < n; ++i) {
      const CostOracle o = random_oracle(rng, rng.uniform(1, 200));
      std::vector<Cost> values;
      for (std::int64_t j = 1; j <= o.m; ++j) values.push_back(o.eval(j));
      kc.items.push_back(CostFunction::list(std::move(values)));
    }
    std::int64_t cap = 0;
    for (const auto& f : kc.items) cap += f.segments();
    kc.demand = rng.uniform(1, std::min<std::int64_t>(cap, 150));
    const Rational opt = exact_kc(kc).cost.value();
    for (const auto& eps : epsilons) {
      KcInstance compressed = kc;
      for (auto& f : compressed.items) f = compress_function(oracle_of(f), eps).function;
      const PdKcResult r = solve_pd_kc(compressed);
      ++e2e;
      if (solution_cost(kc, r.solution).value() > 2 * (1 + eps) * opt) ++e2e_fail;
    }
  }
  for (std::uint64_t s = 0; s < 60; ++s) {
    const UfpInstance u = ct::random_ufp(9000 + s, 4, 6, 4, 5, 40);
    const Rational opt = brute_force_ufp(u).cost.value();
    for (const auto& eps : epsilons) {
      UfpInstance compressed = u;
      for (auto& it : compressed.items) it.cost = compress_function(oracle_of(it.cost), eps).function;
      const PdUfpResult r = solve_pd_ufp(compressed);
      ++ufp_e2e;
      if (solution_cost(u, r.solution).value() > 4 * (1 + eps) * opt) ++ufp_fail;
    }
  }
  std::ostringstream os;
  os << oracles << " oracles x 3 eps: " << bound_fail << " two-sided bound failures, " << count_fail
     << " piece-count failures; knapsack end-to-end " << e2e << " runs, " << e2e_fail
     << " above 2(1+eps) OPT; flow-cover end-to-end " << ufp_e2e << " runs, " << ufp_fail << " above 4(1+eps) OPT";
  return {bound_fail == 0 && count_fail == 0 && e2e_fail == 0 && ufp_fail == 0, os.str()};
}

Outcome rounding() {
  std::size_t infeasible = 0, over = 0, lp_above = 0, too_many_cuts = 0, count = 0;
  std::size_t max_cuts = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const KcInstance kc = ct::random_kc(7000 + s, 5, 5, 20, 15, static_cast<CostFamily>(s % 5));
    const RoundResult r = round_2apx(kc);
    ++count;
    const Rational opt = exact_kc(kc).cost.value();
    if (!is_feasible(kc, r.solution)) ++infeasible;
    if (r.cost.value() > 2 * r.lp_cost) ++over;
    if (r.lp_cost > opt) ++lp_above;
    std::int64_t m = 0;
    for (const auto& f : kc.items) m = std::max(m, f.segments());
    if (static_cast<std::int64_t>(r.cuts) > static_cast<std::int64_t>(kc.items.size()) * m * kc.demand) ++too_many_cuts;
    max_cuts = std::max(max_cuts, r.cuts);
  }
  std::ostringstream os;
  os << count << " instances: " << infeasible << " infeasible, " << over << " above 2 lp_cost, " << lp_above
     << " with lp_cost > OPT, " << too_many_cuts << " over the n*m*D cut cap (max cuts " << max_cuts << ")";
  return {infeasible + over + lp_above + too_many_cuts == 0, os.str()};
}

// Every non-increasing vector over `grid` of length m.
void chains(std::size_t m, const std::vector<Rational>& grid, std::vector<Rational>& cur,
            std::vector<std::vector<Rational>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (const auto& v : grid) {
    if (!cur.empty() && v > cur.back()) continue;
    cur.push_back(v);
    chains(m, grid, cur, out);
    cur.pop_back();
  }
}

Outcome separation() {
  const std::vector<Rational> grid{Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)};
  std::map<std::size_t, std::vector<std::vector<Rational>>> chain_sets;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<Rational> cur;
    chains(m, grid, cur, chain_sets[m]);
  }
  std::size_t cases = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::size_t> ms(n, 1);
    while (true) {
      KcInstance kc;
      std::int64_t cap = 0;
      for (auto m : ms) {
        kc.items.push_back(ct::from_marginals(std::vector<std::int64_t>(m, 1)));
        cap += static_cast<std::int64_t>(m);
      }
      // Every chain point per item.
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        FractionalSolution z;
        for (std::size_t i = 0; i < n; ++i) z.z.push_back(chain_sets[ms[i]][pick[i]]);
        for (std::int64_t d = 1; d <= cap; ++d) {
          kc.demand = d;
          const SeparationResult got = separate_gkc(kc, z);
          const auto want = ct::enumerate_separation(kc, z);
          ++cases;
          if (got.violated.has_value() != want.has_value() ||
              (want && (got.violated->a != want->a || got.violated->d != want->d || got.violated->lhs != want->lhs))) {
            ++mismatches;
          }
        }
        std::size_t i = 0;
        while (i < n && pick[i] + 1 == chain_sets[ms[i]].size()) pick[i++] = 0;
        if (i == n) break;
        ++pick[i];
      }
      std::size_t i = 0;
      while (i < n && ms[i] == 3) ms[i++] = 1;
      if (i == n) break;
      ++ms[i];
    }
  }
  return {mismatches == 0, std::to_string(cases) + " (instance, point, D) cases over n, m <= 3 with z in {0,1/3,1/2,1}: " +
                               std::to_string(mismatches) + " mismatches"};
}

std::size_t fractional_items(const EnvelopeSolution& e) {
  std::size_t count = 0;
  for (const auto& item : e.items) {
    bool f = false;
    for (const auto& x : item.z) f = f || (x > 0 && x < 1);
    count += f;
  }
  return count;
}

Outcome residual() {
  std::size_t cases = 0, mismatches = 0, structure = 0;
  const std::vector<Rational> values{Rational(0), Rational(1), Rational(2), Rational(5, 2)};
  // Every split of up to 4 residual variables into items.
  for (std::size_t total = 1; total <= 4; ++total) {
    for (std::uint32_t cuts = 0; cuts < (1u << (total - 1)); ++cuts) {
      std::vector<std::size_t> sizes{1};
      for (std::size_t b = 0; b + 1 < total; ++b) {
        if (cuts >> b & 1) {
          sizes.push_back(1);
        } else {
          ++sizes.back();
        }
      }
      std::size_t combos = 1;
      for (std::size_t v = 0; v < total; ++v) combos *= values.size();
      for (std::size_t code = 0; code < combos; ++code) {
        std::vector<std::vector<Rational>> g;
        std::size_t c = code;
        for (auto s : sizes) {
          std::vector<Rational> row;
          for (std::size_t j = 0; j < s; ++j) {
            row.push_back(values[c % values.size()]);
            c /= values.size();
          }
          g.push_back(row);
        }
        for (std::int64_t target = 0; target <= static_cast<std::int64_t>(total); ++target) {
          const EnvelopeSolution got = solve_chain_mass(g, std::vector<std::int64_t>(g.size(), 0), Rational(target));
          const auto want = ct::enumerate_chain_vertices(g, Rational(target));
          ++cases;
          if (!want || got.cost != want->cost) ++mismatches;
          if (fractional_items(got) > 1) ++structure;
        }
      }
    }
  }
  // Residual problems that arise from real LP optima.
  std::size_t pipeline = 0;
  for (std::uint64_t s = 0; s < 400 && pipeline < 150; ++s) {
    const KcInstance kc = ct::random_kc(20000 + s, 4, 4, 12, 10, static_cast<CostFamily>(s % 5));
    const KcInstance lp = lp_view(kc);
    const FractionalSolution z = normalize(solve_gkc_lp(kc).z);
    const ResidualContext ctx = residual_context(lp, z);
    std::vector<std::vector<Rational>> g(lp.items.size());
    std::size_t vars = 0;
    for (std::size_t i = 0; i < lp.items.size(); ++i) {
      for (std::int64_t j = ctx.a_bar[i] + 1; j <= ctx.m_bar[i]; ++j) g[i].push_back(lp.items[i].marginal(j).value());
      vars += g[i].size();
    }
    if (vars > 4) continue;
    ++pipeline;
    const EnvelopeSolution got = solve_residual(lp, ctx);
    const auto want = ct::enumerate_chain_vertices(g, got.target);
    ++cases;
    if (!want || got.cost != want->cost) ++mismatches;
    if (fractional_items(got) > 1) ++structure;
  }
  return {mismatches == 0 && structure == 0,
          std::to_string(cases) + " residual problems (" + std::to_string(pipeline) + " from LP optima): " +
              std::to_string(mismatches) + " cost mismatches, " + std::to_string(structure) +
              " with more than one fractional item"};
}

Outcome determinism() {
  std::size_t diffs = 0, runs = 0;
  const auto same = [&](const std::function<std::string()>& f) {
    ++runs;
    if (f() != f()) ++diffs;
  };
  for (std::size_t k = 0; k < 40; ++k) {
    const KcInstance& kc = kcs()[k];
    const UfpInstance& u = ufps()[k];
    same([&] {
      const PdKcResult r = solve_pd_kc(kc, kAudit);
      return to_json(r.solution, r.primal_cost).dump() + to_json(r.certificate).dump();
    });
    same([&] {
      const PdUfpResult r = solve_pd_ufp(u, ufp_audit());
      return to_json(r.solution, r.primal_cost).dump() + to_json(r.certificate).dump() + to_json(r.prune_log).dump();
    });
    same([&] {
      const ExactResult r = exact_kc(kc);
      return to_json(r.solution, r.cost).dump();
    });
    same([&] {
      const ExactResult r = brute_force_ufp(u);
      return to_json(r.solution, r.cost).dump();
    });
    same([&] {
      const RoundResult r = round_2apx(ct::random_kc(k, 4, 4, 10, 10));
      return to_json(r.solution, r.cost).dump() + to_json(r.z_bar).dump();
    });
    same([&] {
      GenSpec spec;
      spec.kind = k % 2 ? InstanceKind::kKc : InstanceKind::kUfp;
      spec.seed = k;
      return to_json(generate(spec)).dump();
    });
  }
  return {diffs == 0, std::to_string(runs) + " repeated runs, " + std::to_string(diffs) + " byte differences"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"knapsack-cover ratio <= 2 against the exact optimum", kc_ratio},
      {"weak-duality sandwich", kc_sandwich},
      {"certificate soundness and fault injection", certificate_soundness},
      {"flow-cover ratio <= 4 against brute force", ufp_ratio},
      {"interval and unit buckets agree", engine_equivalence},
      {"compression bounds and end-to-end ratio", compression_bounds},
      {"LP rounding guarantee", rounding},
      {"separation matches enumeration", separation},
      {"residual LP matches vertex enumeration", residual},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c + 1 << "] " << criteria[c].first << ": " << o.detail << " ("
              << seconds_since(start) << " s)" << std::endl;
    failed += !o.pass;
  }
  return failed;
}
