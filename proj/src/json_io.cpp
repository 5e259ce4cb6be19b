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

#include "cover/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "cover/error.hpp"

namespace cover {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::kInvalidInput, what); }

const Json& field(const Json& object, const char* name) {
  if (!object.is_object()) bad(std::string("expected an object holding '") + name + "'");
  const auto it = object.find(name);
  if (it == object.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t integer(const Json& json, const char* what) {
  if (json.is_number_integer()) {
    if (json.is_number_unsigned() && json.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      bad(std::string(what) + " out of range");
    }
    return json.get<std::int64_t>();
  }
  bad(std::string(what) + " must be an integer");
}

const Json& array(const Json& json, const char* what) {
  if (!json.is_array()) bad(std::string(what) + " must be an array");
  return json;
}

Json range_to_json(const Range& r) { return Json::array({r.lo, r.hi}); }

Range range_from_json(const Json& json, const char* what) {
  array(json, what);
  if (json.size() != 2) bad(std::string(what) + " must be [lo, hi]");
  return Range{integer(json[0], what), integer(json[1], what)};
}

}  // namespace

Json to_json(const Rational& value) {
  if (is_integer(value) && value.get_num().fits_slong_p()) return static_cast<std::int64_t>(value.get_num().get_si());
  return to_string(value);
}

Json to_json(const Cost& cost) {
  if (cost.is_infinite()) return "inf";
  return to_json(cost.value());
}

Rational rational_from_json(const Json& json) {
  if (json.is_number_integer()) return Rational(static_cast<long>(integer(json, "value")));
  if (json.is_string()) return parse_rational(json.get<std::string>());
  bad("a value must be an integer or a \"p/q\" string, got " + json.dump());
}

Cost cost_from_json(const Json& json) {
  if (json.is_string() && json.get<std::string>() == "inf") return Cost::infinite();
  return Cost(rational_from_json(json));
}

Json to_json(const CostFunction& cost) {
  Json out;
  if (cost.is_list()) {
    out["model"] = "list";
    Json values = Json::array();
    for (const auto& v : cost.list_values()) values.push_back(to_json(v));
    out["values"] = std::move(values);
  } else {
    out["model"] = "steps";
    Json pieces = Json::array();
    for (const auto& p : cost.step_pieces()) pieces.push_back({{"upto", p.upto}, {"value", to_json(p.value)}});
    out["pieces"] = std::move(pieces);
  }
  return out;
}

CostFunction cost_function_from_json(const Json& json) {
  const Json& model = field(json, "model");
  if (!model.is_string()) bad("cost model must be a string");
  const std::string name = model.get<std::string>();
  if (name == "list") {
    std::vector<Cost> values;
    for (const auto& v : array(field(json, "values"), "values")) values.push_back(cost_from_json(v));
    return CostFunction::list(std::move(values));
  }
  if (name == "steps") {
    std::vector<StepPiece> pieces;
    for (const auto& p : array(field(json, "pieces"), "pieces")) {
      pieces.push_back({integer(field(p, "upto"), "upto"), cost_from_json(field(p, "value"))});
    }
    return CostFunction::steps(std::move(pieces));
  }
  bad("unknown cost model '" + name + "'");
}

Json to_json(const KcInstance& instance) {
  Json items = Json::array();
  for (const auto& f : instance.items) items.push_back({{"costs", to_json(f)}});
  return {{"type", "kc"}, {"demand", instance.demand}, {"items", std::move(items)}};
}

Json to_json(const UfpInstance& instance) {
  Json items = Json::array();
  for (const auto& item : instance.items) {
    items.push_back({{"costs", to_json(item.cost)}, {"interval", Json::array({item.first, item.last})}});
  }
  return {{"type", "ufp"}, {"demands", instance.demands}, {"items", std::move(items)}};
}

Json to_json(const Instance& instance) {
  return std::visit([](const auto& x) { return to_json(x); }, instance);
}

namespace {

OracleSpec oracle_spec_from_json(const Json& json) {
  OracleSpec spec;
  const Json& family = field(json, "family");
  if (!family.is_string()) bad("oracle family must be a string");
  spec.family = parse_oracle_family(family.get<std::string>());
  spec.m = integer(field(json, "m"), "m");
  for (const auto& p : array(field(json, "params"), "params")) spec.params.push_back(rational_from_json(p));
  make_oracle(spec);  // validates the parameters
  return spec;
}

CostFunction item_costs(const Json& item, std::size_t index, std::map<std::size_t, OracleSpec>& oracles) {
  const Json& costs = field(item, "costs");
  const Json& model = field(costs, "model");
  if (model.is_string() && model.get<std::string>() == "oracle") {
    oracles.emplace(index, oracle_spec_from_json(costs));
    return CostFunction::list({});
  }
  return cost_function_from_json(costs);
}

}  // namespace

InstanceDocument instance_document_from_json(const Json& json) {
  InstanceDocument doc;
  const Json& type = field(json, "type");
  if (!type.is_string()) bad("type must be a string");
  const Json& items = array(field(json, "items"), "items");
  if (type.get<std::string>() == "kc") {
    KcInstance kc;
    kc.demand = integer(field(json, "demand"), "demand");
    for (std::size_t i = 0; i < items.size(); ++i) kc.items.push_back(item_costs(items[i], i, doc.oracles));
    doc.instance = std::move(kc);
  } else if (type.get<std::string>() == "ufp") {
    UfpInstance ufp;
    for (const auto& d : array(field(json, "demands"), "demands")) ufp.demands.push_back(integer(d, "demand"));
    for (std::size_t i = 0; i < items.size(); ++i) {
      UfpItem item;
      item.cost = item_costs(items[i], i, doc.oracles);
      const Json& interval = array(field(items[i], "interval"), "interval");
      if (interval.size() != 2) bad("interval must be [s, e]");
      item.first = integer(interval[0], "interval start");
      item.last = integer(interval[1], "interval end");
      ufp.items.push_back(std::move(item));
    }
    doc.instance = std::move(ufp);
  } else {
    bad("unknown instance type '" + type.get<std::string>() + "'");
  }
  return doc;
}

Instance instance_from_json(const Json& json) {
  InstanceDocument doc = instance_document_from_json(json);
  if (!doc.oracles.empty()) bad("oracle cost models need materialization or --epsilon");
  return std::move(doc.instance);
}

namespace {

std::int64_t relevant_demand(const Instance& instance) {
  if (const auto* kc = std::get_if<KcInstance>(&instance)) return kc->demand;
  return std::get<UfpInstance>(instance).max_demand();
}

CostFunction& item_cost(Instance& instance, std::size_t i) {
  if (auto* kc = std::get_if<KcInstance>(&instance)) return kc->items.at(i);
  return std::get<UfpInstance>(instance).items.at(i).cost;
}

std::size_t item_count(const Instance& instance) {
  return std::visit([](const auto& x) { return x.items.size(); }, instance);
}

}  // namespace

Instance materialize(const InstanceDocument& document, std::int64_t cap) {
  Instance out = document.instance;
  const std::int64_t demand = relevant_demand(out);
  for (const auto& [i, spec] : document.oracles) {
    const std::int64_t m = std::min(spec.m, std::max<std::int64_t>(demand, 1));
    if (m > cap) {
      throw Error(Errc::kMaterializationTooLarge, "oracle item " + std::to_string(i) + " needs " +
                                                      std::to_string(m) + " values");
    }
    const CostOracle oracle = make_oracle(spec);
    std::vector<Cost> values;
    for (std::int64_t j = 1; j <= m; ++j) values.push_back(oracle.eval(j));
    item_cost(out, i) = CostFunction::list(std::move(values));
  }
  return out;
}

Instance compress_instance(const InstanceDocument& document, const Rational& eps, std::uint64_t* queries) {
  Instance out = document.instance;
  for (std::size_t i = 0; i < item_count(out); ++i) {
    const auto it = document.oracles.find(i);
    const CostOracle oracle = it != document.oracles.end() ? make_oracle(it->second) : oracle_of(item_cost(out, i));
    Compression c = compress_function(oracle, eps);
    if (queries) *queries += c.queries;
    item_cost(out, i) = std::move(c.function);
  }
  return out;
}

Json to_json(const IntegralSolution& solution, const Cost& cost) {
  return {{"levels", solution.levels}, {"cost", to_json(cost)}};
}

SolutionDocument solution_from_json(const Json& json) {
  SolutionDocument doc;
  for (const auto& x : array(field(json, "levels"), "levels")) doc.solution.levels.push_back(integer(x, "level"));
  if (json.contains("cost")) doc.cost = cost_from_json(json["cost"]);
  return doc;
}

Json to_json(const Certificate& certificate) {
  Json raises = Json::array();
  for (const auto& r : certificate.raises) {
    Json raise{{"delta", to_json(r.delta)}, {"residual", r.residual}};
    raise["t"] = r.point ? Json(*r.point) : Json(nullptr);
    if (certificate.audited) {
      Json tau = Json::array();
      for (const auto& e : r.tau) tau.push_back(Json::array({e.item, e.segment, e.rate}));
      raise["tau"] = std::move(tau);
    }
    raises.push_back(std::move(raise));
  }
  return {{"dual_objective", to_json(certificate.dual_objective)}, {"raises", std::move(raises)}};
}

Certificate certificate_from_json(const Json& json) {
  Certificate out;
  out.dual_objective = rational_from_json(field(json, "dual_objective"));
  const Json& raises = array(field(json, "raises"), "raises");
  out.audited = !raises.empty();
  for (const auto& r : raises) {
    AuditRecord record;
    record.delta = rational_from_json(field(r, "delta"));
    record.residual = integer(field(r, "residual"), "residual");
    if (r.contains("t") && !r["t"].is_null()) record.point = integer(r["t"], "t");
    if (r.contains("tau")) {
      for (const auto& e : array(r["tau"], "tau")) {
        if (!e.is_array() || e.size() != 3) bad("tau entries must be [item, bucket, rate]");
        const std::int64_t item = integer(e[0], "tau item");
        if (item < 0) bad("tau item must be non-negative");
        record.tau.push_back({static_cast<std::size_t>(item), integer(e[1], "tau bucket"), integer(e[2], "tau rate")});
      }
    } else {
      out.audited = false;
    }
    out.raises.push_back(std::move(record));
  }
  return out;
}

Json to_json(const PruneLog& log) {
  Json out = Json::array();
  for (const auto& e : log) {
    out.push_back({{"item", e.block.item},
                   {"first", e.block.first},
                   {"last", e.block.last},
                   {"decision", std::string(to_string(e.decision))},
                   {"reason", std::string(to_string(e.reason))}});
  }
  return out;
}

Json to_json(const ViolatedCut& cut) {
  return {{"a", cut.a}, {"d", cut.d}, {"lhs", to_json(cut.lhs)}};
}

Json to_json(const FractionalSolution& z) {
  Json out = Json::array();
  for (const auto& item : z.z) {
    Json row = Json::array();
    for (const auto& v : item) row.push_back(to_json(v));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const GenSpec& spec) {
  return {{"kind", to_string(spec.kind)},          {"n", range_to_json(spec.n)},
          {"m", range_to_json(spec.m)},            {"k", range_to_json(spec.k)},
          {"demand", range_to_json(spec.demand)},  {"family", to_string(spec.family)},
          {"max_marginal", spec.max_marginal},     {"seed", spec.seed}};
}

GenSpec gen_spec_from_json(const Json& json) {
  if (!json.is_object()) bad("spec must be an object");
  GenSpec spec;
  if (json.contains("kind")) spec.kind = parse_instance_kind(json["kind"].get<std::string>());
  if (json.contains("n")) spec.n = range_from_json(json["n"], "n");
  if (json.contains("m")) spec.m = range_from_json(json["m"], "m");
  if (json.contains("k")) spec.k = range_from_json(json["k"], "k");
  if (json.contains("demand")) spec.demand = range_from_json(json["demand"], "demand");
  if (json.contains("family")) spec.family = parse_cost_family(json["family"].get<std::string>());
  if (json.contains("max_marginal")) spec.max_marginal = integer(json["max_marginal"], "max_marginal");
  if (json.contains("seed")) {
    if (!json["seed"].is_number_integer()) bad("seed must be an integer");
    spec.seed = json["seed"].get<std::uint64_t>();
  }
  return spec;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

void write_json_file(const std::filesystem::path& path, const Json& json) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kInvalidInput, "cannot write " + path.string());
  out << json.dump() << '\n';
}

std::string digest(const Json& json) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : json.dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char text[17];
  std::snprintf(text, sizeof text, "%016llx", static_cast<unsigned long long>(hash));
  return text;
}

}  // namespace cover
