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

// cover: generate, solve, verify and benchmark covering instances.
//
// Exit codes: 0 success, 2 invalid input, 3 infeasible, 4 failed check.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "cover/compress.hpp"
#include "cover/error.hpp"
#include "cover/gen.hpp"
#include "cover/json_io.hpp"
#include "cover/lp_round.hpp"
#include "cover/oracles.hpp"
#include "cover/pd_kc.hpp"
#include "cover/pd_ufp.hpp"

namespace {

using namespace cover;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kInfeasibleExit = 3;
constexpr int kCheckFailed = 4;

int exit_code(Errc code) {
  switch (code) {
    case Errc::kInvalidInput:
    case Errc::kMaterializationTooLarge:
    case Errc::kNonMonotoneOracle:
    case Errc::kUnsatisfiableSpec:
    case Errc::kLevelOutOfRange:
    case Errc::kBudgetExceeded:
      return kInvalid;
    case Errc::kInfeasible:
      return kInfeasibleExit;
    default:
      return kCheckFailed;
  }
}

bool audit_forced() {
  const char* env = std::getenv("COVER_AUDIT");
  return env != nullptr && std::string(env) == "1";
}

// A check that did not pass: reported on stderr, exit 4.
struct CheckFailure {
  std::string what;
};

Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const std::int64_t v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error(Errc::kInvalidInput, "bad range '" + text + "', expected lo:hi");
  }
}

Json ratio_json(const Cost& primal, const Cost& opt) {
  if (opt.is_infinite() || primal.is_infinite()) return "inf";
  if (opt.value() == 0) return primal.value() == 0 ? Json(1) : Json("inf");
  return to_json(Rational(primal.value() / opt.value()));
}

std::string decimal(const Json& value) {
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    return s == "inf" ? s : to_decimal(parse_rational(s));
  }
  if (value.is_number_integer()) return to_decimal(Rational(static_cast<long>(value.get<std::int64_t>())));
  return "";
}

Cost opt_of(const Instance& instance) {
  if (const auto* kc = std::get_if<KcInstance>(&instance)) return exact_kc(*kc).cost;
  return brute_force_ufp(std::get<UfpInstance>(instance)).cost;
}

// Cost of levels under the original (uncompressed) functions.
Cost true_cost(const InstanceDocument& doc, const IntegralSolution& solution) {
  const auto cost_of = [&](std::size_t i, const CostFunction& f) {
    const auto it = doc.oracles.find(i);
    const std::int64_t x = solution.levels[i];
    if (x == 0) return Cost(0);
    return it != doc.oracles.end() ? make_oracle(it->second).eval(x) : f.value(x);
  };
  Cost total(0);
  if (const auto* kc = std::get_if<KcInstance>(&doc.instance)) {
    for (std::size_t i = 0; i < kc->items.size(); ++i) total += cost_of(i, kc->items[i]);
  } else {
    const auto& ufp = std::get<UfpInstance>(doc.instance);
    for (std::size_t i = 0; i < ufp.items.size(); ++i) total += cost_of(i, ufp.items[i].cost);
  }
  return total;
}

template <class T>
const T& expect(const Instance& instance, const std::string& algo) {
  const T* x = std::get_if<T>(&instance);
  if (x == nullptr) throw Error(Errc::kInvalidInput, "algorithm " + algo + " does not accept this instance type");
  return *x;
}

UfpInstance as_single_point(const KcInstance& kc) {
  UfpInstance out;
  out.demands = {kc.demand};
  for (const auto& f : kc.items) out.items.push_back(UfpItem{f, 1, 1});
  return out;
}

struct SolveOptions {
  std::string algo;
  bool audit = false;
  std::optional<Rational> epsilon;
  bool oracle = false;
  bool prune = true;
};

struct SolveOutcome {
  IntegralSolution solution;
  Cost primal;
  Json report;
  std::optional<Certificate> certificate;
  std::optional<PruneLog> prune_log;
  std::vector<ViolatedCut> cuts;
  std::optional<Instance> compressed;
};

SolveOutcome solve(const InstanceDocument& doc, const SolveOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome out;
  Json& report = out.report;
  report["algorithm"] = opt.algo;
  report["digest"] = digest(to_json(doc.instance));
  if (!doc.oracles.empty()) {
    Json oracles = Json::object();
    for (const auto& [i, spec] : doc.oracles) {
      oracles[std::to_string(i)] = {{"family", to_string(spec.family)}, {"m", spec.m}};
    }
    report["oracle_items"] = std::move(oracles);
  }

  Instance working;
  if (opt.epsilon) {
    std::uint64_t queries = 0;
    working = compress_instance(doc, *opt.epsilon, &queries);
    report["epsilon"] = to_json(*opt.epsilon);
    report["oracle_queries"] = queries;
    out.compressed = working;
  } else {
    working = materialize(doc);
  }
  const ValidationReport valid = validate(working);
  if (!valid.ok) {
    const bool infeasible = std::all_of(valid.issues.begin(), valid.issues.end(),
                                        [](const std::string& s) { return s.rfind("infeasible", 0) == 0; });
    throw Error(infeasible ? Errc::kInfeasible : Errc::kInvalidInput, valid.issues.front());
  }

  const PdOptions pd{opt.audit, BucketMode::kAuto};
  if (opt.algo == "pd-kc") {
    const auto& kc = expect<KcInstance>(working, opt.algo);
    PdKcResult r = solve_pd_kc(kc, pd);
    if (!r.ratio_bound_ok) throw CheckFailure{"primal cost exceeds twice the dual objective"};
    if (opt.audit) {
      const CheckReport check = check_certificate_kc(kc, r);
      if (!check.ok()) throw CheckFailure{check.failures.front()};
    }
    report["dual_objective"] = to_json(r.certificate.dual_objective);
    report["iterations"] = r.iterations;
    out.solution = std::move(r.solution);
    out.certificate = std::move(r.certificate);
  } else if (opt.algo == "pd-ufp") {
    const auto& ufp = expect<UfpInstance>(working, opt.algo);
    PdUfpOptions options;
    static_cast<PdOptions&>(options) = pd;
    options.prune = opt.prune;
    PdUfpResult r = solve_pd_ufp(ufp, options);
    if (opt.prune && !r.ratio_bound_ok) throw CheckFailure{"primal cost exceeds four times the dual objective"};
    if (opt.audit && opt.prune) {
      const CheckReport check = check_certificate_ufp(ufp, r);
      if (!check.ok()) throw CheckFailure{check.failures.front()};
    }
    report["dual_objective"] = to_json(r.certificate.dual_objective);
    report["iterations"] = r.iterations;
    out.solution = std::move(r.solution);
    out.certificate = std::move(r.certificate);
    out.prune_log = std::move(r.prune_log);
  } else if (opt.algo == "dp") {
    out.solution = exact_kc(expect<KcInstance>(working, opt.algo)).solution;
  } else if (opt.algo == "brute") {
    if (const auto* kc = std::get_if<KcInstance>(&working)) {
      out.solution = brute_force_ufp(as_single_point(*kc)).solution;
    } else {
      out.solution = brute_force_ufp(std::get<UfpInstance>(working)).solution;
    }
  } else if (opt.algo == "round") {
    RoundResult r = round_2apx(expect<KcInstance>(working, opt.algo));
    report["lp_cost"] = to_json(r.lp_cost);
    report["lp_cost_decimal"] = to_decimal(r.lp_cost);
    report["cuts"] = r.cuts;
    report["z_bar"] = to_json(r.z_bar);
    out.cuts = std::move(r.cut_list);
    out.solution = std::move(r.solution);
  } else {
    throw Error(Errc::kInvalidInput, "unknown algorithm '" + opt.algo + "'");
  }

  out.primal = true_cost(doc, out.solution);
  report["primal_cost"] = to_json(out.primal);
  report["primal_cost_decimal"] = decimal(report["primal_cost"]);
  if (opt.epsilon) report["compressed_cost"] = to_json(std::visit(
      [&](const auto& x) { return solution_cost(x, out.solution); }, working));
  if (opt.oracle) {
    const Cost opt_cost = opt_of(materialize(doc));
    report["opt"] = to_json(opt_cost);
    report["ratio"] = ratio_json(out.primal, opt_cost);
    report["ratio_decimal"] = decimal(report["ratio"]);
  }
  report["levels"] = out.solution.levels;
  report["wall_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

int cmd_gen(const std::string& spec_path, const std::vector<std::string>& overrides_kind,
            const std::optional<std::uint64_t>& seed, const std::string& out_path, const std::string& family,
            const std::string& n, const std::string& m, const std::string& k, const std::string& demand) {
  GenSpec spec = spec_path.empty() ? GenSpec{} : gen_spec_from_json(read_json_file(spec_path));
  if (!overrides_kind.empty()) spec.kind = parse_instance_kind(overrides_kind.front());
  if (!family.empty()) spec.family = parse_cost_family(family);
  if (!n.empty()) spec.n = parse_range(n);
  if (!m.empty()) spec.m = parse_range(m);
  if (!k.empty()) spec.k = parse_range(k);
  if (!demand.empty()) spec.demand = parse_range(demand);
  if (seed) spec.seed = *seed;
  const Json instance = to_json(generate(spec));
  if (out_path.empty()) {
    std::cout << instance.dump() << '\n';
  } else {
    write_json_file(out_path, instance);
  }
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& solution_path, const std::string& cert_path) {
  const Instance instance = materialize(instance_document_from_json(read_json_file(input)));
  const SolutionDocument doc = solution_from_json(read_json_file(solution_path));
  const auto items = std::visit([](const auto& x) { return x.items.size(); }, instance);
  if (doc.solution.levels.size() != items) {
    throw CheckFailure{"solution has " + std::to_string(doc.solution.levels.size()) + " levels for " +
                       std::to_string(items) + " items"};
  }
  Cost cost;
  try {
    cost = std::visit([&](const auto& x) { return solution_cost(x, doc.solution); }, instance);
  } catch (const Error& e) {
    throw CheckFailure{e.what()};
  }
  if (const auto* kc = std::get_if<KcInstance>(&instance)) {
    if (!is_feasible(*kc, doc.solution)) throw CheckFailure{"infeasible: levels do not cover the demand"};
  } else {
    const auto& ufp = std::get<UfpInstance>(instance);
    if (const auto t = first_uncovered(ufp, doc.solution.levels)) {
      throw CheckFailure{"infeasible: point " + std::to_string(*t) + " is not covered"};
    }
  }
  if (doc.cost && *doc.cost != cost) {
    throw CheckFailure{"claimed cost " + to_string(*doc.cost) + " differs from " + to_string(cost)};
  }
  if (!cert_path.empty()) {
    const Certificate cert = certificate_from_json(read_json_file(cert_path));
    const Cost claimed = doc.cost.value_or(cost);
    const CheckReport check = std::holds_alternative<KcInstance>(instance)
                                  ? check_certificate_kc(std::get<KcInstance>(instance), doc.solution, claimed, cert)
                                  : check_certificate_ufp(std::get<UfpInstance>(instance), doc.solution, claimed, cert);
    if (!check.ok()) {
      for (const auto& f : check.failures) std::cerr << "check failed: " << f << '\n';
      throw CheckFailure{check.failures.front()};
    }
  }
  std::cout << Json{{"ok", true}, {"cost", to_json(cost)}, {"certificate", !cert_path.empty()}}.dump() << '\n';
  return kOk;
}

int cmd_bench(const std::string& spec_path, std::int64_t trials, std::optional<std::uint64_t> seed, bool oracle,
              std::string algo, unsigned threads, bool audit) {
  if (trials < 0) throw Error(Errc::kInvalidInput, "--trials must be non-negative");
  GenSpec spec = gen_spec_from_json(read_json_file(spec_path));
  if (seed) spec.seed = *seed;
  if (algo.empty()) algo = spec.kind == InstanceKind::kKc ? "pd-kc" : "pd-ufp";

  struct Row {
    std::string line;
    std::optional<Rational> ratio;
    std::string error;
  };
  std::vector<Row> rows(static_cast<std::size_t>(trials));
  const auto run = [&](std::size_t t) {
    Row& row = rows[t];
    try {
      const GenSpec trial = trial_spec(spec, t);
      InstanceDocument doc{generate(trial), {}};
      const SolveOutcome o = solve(doc, SolveOptions{algo, audit, std::nullopt, oracle, true});
      const Json& r = o.report;
      const auto text = [&](const char* key) {
        if (!r.contains(key)) return std::string();
        return r[key].is_string() ? r[key].get<std::string>() : r[key].dump();
      };
      row.line = std::to_string(t) + "," + std::to_string(trial.seed) + "," + algo + "," + text("digest") + "," +
                 text("primal_cost") + "," + text("dual_objective") + "," + text("lp_cost") + "," + text("opt") + "," +
                 text("ratio") + "," + (r.contains("ratio") ? decimal(r["ratio"]) : "") + "," +
                 to_decimal(Rational(static_cast<long>(r["wall_ms"].get<double>() * 1000)), 0);
      if (r.contains("ratio") && r["ratio"] != "inf") row.ratio = rational_from_json(r["ratio"]);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < rows.size(); t += threads) run(t);
    });
  }
  for (auto& th : pool) th.join();

  std::cout << "trial,seed,algorithm,digest,primal_cost,dual_objective,lp_cost,opt,ratio,ratio_decimal,wall_us\n";
  Rational max_ratio(0), sum(0);
  std::size_t counted = 0;
  for (const Row& row : rows) {
    if (!row.error.empty()) {
      std::cerr << "trial failed: " << row.error << '\n';
      return kCheckFailed;
    }
    std::cout << row.line << '\n';
    if (row.ratio) {
      max_ratio = std::max(max_ratio, *row.ratio);
      sum += *row.ratio;
      ++counted;
    }
  }
  if (oracle && counted > 0) {
    const Rational mean = sum / static_cast<long>(counted);
    std::cout << "# trials=" << trials << " max_ratio=" << to_string(max_ratio) << " (" << to_decimal(max_ratio)
              << ") mean_ratio=" << to_string(mean) << " (" << to_decimal(mean) << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knapsack-cover and flow-cover solvers with dual certificates"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string gen_spec, gen_out, gen_family, gen_n, gen_m, gen_k, gen_demand;
  std::vector<std::string> gen_kind;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("--spec", gen_spec, "GenSpec JSON file");
  gen->add_option("--kind", gen_kind, "kc or ufp")->expected(1);
  gen->add_option("--family", gen_family, "uniform, facility, quadratic, steps or adversarial");
  gen->add_option("--n", gen_n, "item count range lo:hi");
  gen->add_option("--m", gen_m, "segment count range lo:hi");
  gen->add_option("--k", gen_k, "horizon range lo:hi");
  gen->add_option("--demand", gen_demand, "demand range lo:hi");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_out, "output file (default stdout)");

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  SolveOptions solve_opt;
  std::string input, out_path, cert_path, prune_path, cuts_path, compressed_path, eps_text;
  bool no_prune = false;
  solve_cmd->add_option("--algo", solve_opt.algo, "pd-kc, pd-ufp, dp, brute or round")->required();
  solve_cmd->add_option("--input", input)->required();
  solve_cmd->add_flag("--audit", solve_opt.audit, "record and check the full dual certificate");
  solve_cmd->add_option("--epsilon", eps_text, "compress every cost function to (1+eps) steps first");
  solve_cmd->add_option("--out", out_path, "write the solution JSON");
  solve_cmd->add_option("--cert", cert_path, "write the certificate JSON (implies --audit)");
  solve_cmd->add_option("--prune-log", prune_path, "write the pruning decisions (pd-ufp)");
  solve_cmd->add_option("--cuts", cuts_path, "write the generated cuts (round)");
  solve_cmd->add_option("--compressed", compressed_path, "write the compressed instance (--epsilon)");
  solve_cmd->add_flag("--oracle", solve_opt.oracle, "also compute the exact optimum");
  solve_cmd->add_flag("--no-prune", no_prune, "skip reverse-delete pruning (pd-ufp)");

  auto* verify = app.add_subcommand("verify", "Check a solution and optional certificate");
  std::string v_input, v_solution, v_cert;
  verify->add_option("--input", v_input)->required();
  verify->add_option("--solution", v_solution)->required();
  verify->add_option("--cert", v_cert);

  auto* bench = app.add_subcommand("bench", "Run seeded random trials and print CSV");
  std::string b_spec, b_algo;
  std::int64_t b_trials = 0;
  std::optional<std::uint64_t> b_seed;
  bool b_oracle = false;
  unsigned b_threads = 1;
  bench->add_option("--spec", b_spec)->required();
  bench->add_option("--trials", b_trials)->required();
  bench->add_option("--seed", b_seed);
  bench->add_flag("--oracle", b_oracle, "compare against the exact optimum");
  bench->add_option("--algo", b_algo, "default: pd-kc or pd-ufp by instance kind");
  bench->add_option("--threads", b_threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_spec, gen_kind, gen_seed, gen_out, gen_family, gen_n, gen_m, gen_k, gen_demand);
    }
    if (solve_cmd->parsed()) {
      solve_opt.audit = solve_opt.audit || !cert_path.empty() || audit_forced();
      solve_opt.prune = !no_prune;
      if (!eps_text.empty()) solve_opt.epsilon = parse_rational(eps_text);
      const InstanceDocument doc = instance_document_from_json(read_json_file(input));
      const SolveOutcome o = solve(doc, solve_opt);
      if (!out_path.empty()) write_json_file(out_path, to_json(o.solution, o.primal));
      if (!cert_path.empty() && o.certificate) write_json_file(cert_path, to_json(*o.certificate));
      if (!prune_path.empty() && o.prune_log) write_json_file(prune_path, to_json(*o.prune_log));
      if (!cuts_path.empty()) {
        Json cuts = Json::array();
        for (const auto& c : o.cuts) cuts.push_back(to_json(c));
        write_json_file(cuts_path, cuts);
      }
      if (!compressed_path.empty() && o.compressed) write_json_file(compressed_path, to_json(*o.compressed));
      std::cout << o.report.dump() << '\n';
      return kOk;
    }
    if (verify->parsed()) return cmd_verify(v_input, v_solution, v_cert);
    if (bench->parsed()) return cmd_bench(b_spec, b_trials, b_seed, b_oracle, b_algo, b_threads, audit_forced());
  } catch (const CheckFailure& f) {
    std::cerr << "check failed: " << f.what << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
