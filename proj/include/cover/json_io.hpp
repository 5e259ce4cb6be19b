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
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "cover/certificate.hpp"
#include "cover/compress.hpp"
#include "cover/gen.hpp"
#include "cover/model.hpp"
#include "cover/oracles.hpp"
#include "cover/pd_ufp.hpp"
#include "cover/rational.hpp"

namespace cover {

using Json = nlohmann::json;

/// Integer when integral and within int64, "p/q" otherwise, "inf" for
/// infinity. Parsing accepts exactly these shapes.
Json to_json(const Rational& value);
Json to_json(const Cost& cost);
Rational rational_from_json(const Json& json);
Cost cost_from_json(const Json& json);

Json to_json(const CostFunction& cost);
CostFunction cost_function_from_json(const Json& json);

Json to_json(const KcInstance& instance);
Json to_json(const UfpInstance& instance);
Json to_json(const Instance& instance);

/// An instance file whose items may use the "oracle" cost model
/// ({"model": "oracle", "family": f, "m": M, "params": [...]}). Such items
/// hold an empty placeholder in `instance` until resolved.
struct InstanceDocument {
  Instance instance;
  std::map<std::size_t, OracleSpec> oracles;
};

InstanceDocument instance_document_from_json(const Json& json);
/// Throws Error(kInvalidInput) when the document uses oracle items.
Instance instance_from_json(const Json& json);

/// Oracle items replaced by their materialized list form, truncated to the
/// largest relevant demand.
Instance materialize(const InstanceDocument& document, std::int64_t cap = kDefaultMaterializationCap);
/// Every item (oracle or explicit) replaced by its (1+eps) step compression.
/// `queries` accumulates oracle calls when given.
Instance compress_instance(const InstanceDocument& document, const Rational& eps,
                           std::uint64_t* queries = nullptr);

struct SolutionDocument {
  IntegralSolution solution;
  std::optional<Cost> cost;
};

Json to_json(const IntegralSolution& solution, const Cost& cost);
SolutionDocument solution_from_json(const Json& json);

Json to_json(const Certificate& certificate);
Certificate certificate_from_json(const Json& json);

Json to_json(const PruneLog& log);
Json to_json(const ViolatedCut& cut);
Json to_json(const FractionalSolution& z);

Json to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const Json& json);

/// Throws Error(kInvalidInput) on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);
/// Canonical text: sorted keys, no whitespace, trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& json);

/// FNV-1a 64 of the canonical dump, as 16 hex digits.
std::string digest(const Json& json);

}  // namespace cover
