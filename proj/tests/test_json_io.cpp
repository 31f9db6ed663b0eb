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

#include <doctest.h>

#include "smlt/generators.hpp"
#include "smlt/json_io.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"

using namespace smlt;
using smlt_tests::thrown_code;

namespace {

const PrimeField kField;

}  // namespace

TEST_CASE("the documented circuit schema parses") {
  Json j = Json::parse(R"({
    "version": 1, "d": 3, "bucket_sizes": [3, 3, 3],
    "gates": [
      {"id": 0, "op": "input", "var": [1, 1]},
      {"id": 1, "op": "const", "value": "1"},
      {"id": 2, "op": "add", "args": [0]},
      {"id": 3, "op": "mul", "args": [2, 1]}
    ],
    "output": 3})");
  Circuit c = circuit_from_json(j, kField);
  CHECK(c.size() == 4);
  CHECK(c.output() == 3);
}

TEST_CASE("artifact round trips are stable") {
  for (int round = 0; round < 10; ++round) {
    Circuit c = smlt_tests::random_circuit(14000 + round, kField);
    Json j = circuit_to_json(c);
    Json j2 = circuit_to_json(circuit_from_json(j, kField));
    CHECK(j == j2);
  }
  for (int round = 0; round < 10; ++round) {
    Abp abp = smlt_tests::random_abp(15000 + round, kField);
    Json j = abp_to_json(abp);
    Json j2 = abp_to_json(abp_from_json(j, kField));
    CHECK(j == j2);
  }
  std::vector<int> id{1, 2, 3, 4};
  Polynomial p = gen_sigma_p(2, id, kField);
  VariablePartition partition = VariablePartition::uniform(4, 2);
  Json j = polynomial_to_json(partition, p);
  PolynomialArtifact back = polynomial_from_json(j, kField);
  CHECK(polynomial_to_json(back.partition, back.polynomial) == j);
}

TEST_CASE("unknown fields and bad versions are rejected") {
  Json good = circuit_to_json(gen_permanent(2, kField));
  Json bad = good;
  bad["surprise"] = 1;
  CHECK(thrown_code([&] { circuit_from_json(bad, kField); }) == "SchemaError");

  Json old = good;
  old["version"] = 2;
  CHECK(thrown_code([&] { circuit_from_json(old, kField); }) == "SchemaError");

  Json sparse_ids = good;
  sparse_ids["gates"][0]["id"] = 5;
  CHECK(thrown_code([&] { circuit_from_json(sparse_ids, kField); }) ==
        "SchemaError");

  // "kind" and "meta" are tolerated everywhere.
  Json tagged = good;
  tagged["meta"] = {{"note", "x"}};
  CHECK_NOTHROW(circuit_from_json(tagged, kField));
}

TEST_CASE("assignments round trip") {
  BlockDiagonalRestriction r = gen_block_diagonal_restriction(4, 2, kField);
  VariablePartition partition = VariablePartition::uniform(4, 4);
  Json j = assignment_to_json(partition, r.assignment);
  Assignment back = assignment_from_json(j, kField);
  CHECK(back == r.assignment);
}

TEST_CASE("artifact classification") {
  CHECK(classify_artifact(circuit_to_json(gen_permanent(2, kField))) ==
        ArtifactKind::kCircuit);
  CHECK(classify_artifact(abp_to_json(gen_permanent_roabp(2, kField))) ==
        ArtifactKind::kAbp);
  CHECK(thrown_code([] { classify_artifact(Json::object()); }) ==
        "SchemaError");
}

TEST_CASE("digests are deterministic and content-sensitive") {
  CHECK(digest("abc") == digest("abc"));
  CHECK(digest("abc") != digest("abd"));
  CHECK(digest("").rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("tree types serialize with sorted index sets") {
  TreeTypePtr t = TreeType::node(
      TreeType::leaf(IndexSet::single(2)),
      TreeType::node(TreeType::leaf(IndexSet::single(1)),
                     TreeType::leaf(IndexSet::single(3))));
  Json j = tree_type_to_json(t);
  CHECK(j["I"] == Json::array({1, 2, 3}));
  REQUIRE(j["children"].size() == 2);
  // Children are ordered by minimum element.
  CHECK(j["children"][0]["I"] == Json::array({1, 3}));
  CHECK(j["children"][1]["I"] == Json::array({2}));
}
