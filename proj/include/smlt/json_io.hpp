// Copyright 2026 The smlt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SMLT_JSON_IO_HPP
#define SMLT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "smlt/abp.hpp"
#include "smlt/circuit.hpp"
#include "smlt/generators.hpp"
#include "smlt/proof_trees.hpp"
#include "smlt/rank.hpp"
#include "smlt/transforms.hpp"

namespace smlt {

using Json = nlohmann::json;

// Schemas are strict: fields outside the documented set (plus the optional
// "kind" tag and "meta" block every tool output carries) are rejected with
// a SchemaError.  Field constants travel as decimal strings.

Json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const Json& j, PrimeField field);

Json abp_to_json(const Abp& abp);
Abp abp_from_json(const Json& j, PrimeField field);

Json polynomial_to_json(const VariablePartition& partition,
                        const Polynomial& p);
struct PolynomialArtifact {
  VariablePartition partition;
  Polynomial polynomial;
};
PolynomialArtifact polynomial_from_json(const Json& j, PrimeField field);

Json assignment_to_json(const VariablePartition& partition,
                        const Assignment& assignment);
Assignment assignment_from_json(const Json& j, PrimeField field);

Json tree_type_to_json(const TreeTypePtr& type);

Json rank_report_to_json(const RankReport& report);
Json fixed_order_report_to_json(const FixedOrderRankReport& report);
Json stage_ledger_to_json(const StageLedger& ledger);
Json good_pair_stats_to_json(const GoodPairStats& stats);

// What kind of artifact a JSON document is, judged by its fields.
enum class ArtifactKind { kCircuit, kAbp, kPolynomial, kAssignment };
ArtifactKind classify_artifact(const Json& j);

// FNV-1a 64-bit content digest, as "fnv1a64:<hex>".
std::string digest(const std::string& bytes);

}  // namespace smlt

#endif  // SMLT_JSON_IO_HPP
