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

#include <random>

#include "smlt/abp.hpp"
#include "smlt/generators.hpp"
#include "smlt/json_io.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"

using namespace smlt;
using smlt_tests::thrown_code;

namespace {

const PrimeField kField;

// Two-node program computing one linear form.
Abp single_edge(const VariablePartition& partition, int bucket,
                std::map<int, FieldElement> coeffs) {
  Abp abp(partition, kField);
  int s = abp.add_node(0, IndexSet());
  int t = abp.add_node(1, IndexSet::single(bucket));
  abp.add_edge(s, t, LinearForm{bucket, std::move(coeffs)});
  return abp;
}

}  // namespace

TEST_CASE("validate_abp on the sigma-P ladder") {
  std::vector<int> id{1, 2, 3, 4, 5, 6};
  Abp abp = gen_sigma_p_abp(3, id, kField);
  AbpAnnotation ann = validate_abp(abp);
  CHECK(ann.degree == 6);
  CHECK(ann.type_width == std::vector<int>(7, 1));
  CHECK(abp.size() == 10);
}

TEST_CASE("validate_abp rejects malformed programs") {
  VariablePartition partition = VariablePartition::uniform(3, 2);
  {
    Abp abp(partition, kField);
    int s = abp.add_node(0, IndexSet());
    int mid = abp.add_node(1, IndexSet::single(1));
    int t = abp.add_node(3, IndexSet::from_elements({1, 2, 3}));
    abp.add_edge(s, mid, LinearForm{1, {{1, kField.one()}}});
    abp.add_edge(mid, t, LinearForm{2, {{1, kField.one()}}});
    CHECK(thrown_code([&] { validate_abp(abp); }) != "");
  }
  {
    // Edge from layer 1 to layer 3 with layer 2 populated elsewhere.
    Abp abp(partition, kField);
    int s = abp.add_node(0, IndexSet());
    int a = abp.add_node(1, IndexSet::single(1));
    int b = abp.add_node(2, IndexSet::from_elements({1, 2}));
    int t = abp.add_node(3, IndexSet::from_elements({1, 2, 3}));
    abp.add_edge(s, a, LinearForm{1, {{1, kField.one()}}});
    abp.add_edge(a, b, LinearForm{2, {{1, kField.one()}}});
    abp.add_edge(b, t, LinearForm{3, {{1, kField.one()}}});
    abp.add_edge(a, t, LinearForm{3, {{1, kField.one()}}});
    CHECK(thrown_code([&] { validate_abp(abp); }) == "LayerSkip");
  }
  {
    // Form over a bucket other than the index-set step.
    Abp abp(VariablePartition::uniform(2, 2), kField);
    int s = abp.add_node(0, IndexSet());
    int a = abp.add_node(1, IndexSet::single(1));
    int t = abp.add_node(2, IndexSet::from_elements({1, 2}));
    abp.add_edge(s, a, LinearForm{1, {{1, kField.one()}}});
    abp.add_edge(a, t, LinearForm{1, {{1, kField.one()}}});
    CHECK(thrown_code([&] { validate_abp(abp); }) == "WrongBucketForm");
  }
  {
    // Two sources.
    Abp abp(VariablePartition::uniform(1, 2), kField);
    abp.add_node(0, IndexSet());
    abp.add_node(0, IndexSet());
    abp.add_node(1, IndexSet::single(1));
    abp.add_edge(0, 2, LinearForm{1, {{1, kField.one()}}});
    abp.add_edge(1, 2, LinearForm{1, {{1, kField.one()}}});
    CHECK(thrown_code([&] { validate_abp(abp); }) == "MultiSourceOrSink");
  }
}

TEST_CASE("abp_expand of elementary programs") {
  VariablePartition partition = VariablePartition::uniform(1, 2);
  Abp abp = single_edge(partition, 1,
                        {{1, kField.one()}, {2, kField.element(2)}});
  Polynomial p = abp_expand(abp);
  Polynomial expected(kField, IndexSet::single(1));
  expected.set_coefficient(Monomial::variable({1, 1}), kField.one());
  expected.set_coefficient(Monomial::variable({1, 2}), kField.element(2));
  CHECK(p == expected);
}

TEST_CASE("the sigma-P ladder expands to sigma(P)") {
  std::vector<int> id{1, 2, 3, 4};
  CHECK(abp_expand(gen_sigma_p_abp(2, id, kField)) ==
        gen_sigma_p(2, id, kField));
}

TEST_CASE("abp_evaluate agrees with expansion on random programs") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    Abp abp = smlt_tests::random_abp(3000 + round, kField);
    Polynomial p = abp_expand(abp);
    for (int t = 0; t < 5; ++t) {
      Assignment a =
          smlt_tests::random_assignment(abp.partition(), kField, rng);
      CHECK(abp_evaluate(abp, a) == poly_eval(p, a));
    }
  }
}

TEST_CASE("type width and narrowness") {
  Abp roabp = gen_permanent_roabp(3, kField);
  AbpAnnotation ann = validate_abp(roabp);
  for (int k = 0; k <= 3; ++k) CHECK(type_width(roabp, k) == 1);
  CHECK(thrown_code([&] { type_width(roabp, 7); }) == "LayerOutOfRange");

  // Parallel composition of two d=2 read-once programs in opposite orders.
  VariablePartition partition = VariablePartition::uniform(2, 1);
  auto chain = [&](std::vector<int> order) {
    Abp abp(partition, kField);
    int s = abp.add_node(0, IndexSet());
    int mid = abp.add_node(1, IndexSet::single(order[0]));
    int t = abp.add_node(2, IndexSet::full(2));
    abp.add_edge(s, mid, LinearForm{order[0], {{1, kField.one()}}});
    abp.add_edge(mid, t, LinearForm{order[1], {{1, kField.one()}}});
    return abp;
  };
  Abp mixed = compose_parallel(chain({1, 2}), chain({2, 1}));
  CHECK(type_width(mixed, 1) == 2);
  CHECK(is_w_narrow(mixed, 1, 2));
  CHECK_FALSE(is_w_narrow(mixed, 1, 1));
}

TEST_CASE("detect_roabp") {
  CHECK(detect_roabp(gen_permanent_roabp(3, kField)) ==
        std::vector<int>{1, 2, 3});
  std::vector<int> id{1, 2, 3, 4};
  CHECK(detect_roabp(gen_sigma_p_abp(2, id, kField)) ==
        std::vector<int>{1, 3, 2, 4});

  VariablePartition partition = VariablePartition::uniform(2, 1);
  Abp two_types(partition, kField);
  int s = two_types.add_node(0, IndexSet());
  int a = two_types.add_node(1, IndexSet::single(1));
  int b = two_types.add_node(1, IndexSet::single(2));
  int t = two_types.add_node(2, IndexSet::full(2));
  two_types.add_edge(s, a, LinearForm{1, {{1, kField.one()}}});
  two_types.add_edge(s, b, LinearForm{2, {{1, kField.one()}}});
  two_types.add_edge(a, t, LinearForm{2, {{1, kField.one()}}});
  two_types.add_edge(b, t, LinearForm{1, {{1, kField.one()}}});
  CHECK_FALSE(detect_roabp(two_types).has_value());
}

TEST_CASE("composition matches polynomial operations") {
  VariablePartition partition = VariablePartition::uniform(2, 2);
  Abp x11 = single_edge(partition, 1, {{1, kField.one()}});
  Abp x12 = single_edge(partition, 1, {{2, kField.one()}});
  Abp x21 = single_edge(partition, 2, {{1, kField.one()}});

  Polynomial sum = abp_expand(compose_parallel(x11, x12));
  CHECK(sum == poly_add(abp_expand(x11), abp_expand(x12)));
  CHECK(compose_parallel(x11, x12).size() == 2 + 2 - 2);

  Polynomial prod = abp_expand(compose_series(x11, x21));
  CHECK(prod == poly_mul(abp_expand(x11), abp_expand(x21)));

  CHECK(thrown_code([&] { compose_series(x11, x12); }) == "SupportOverlap");

  std::mt19937_64 rng(9);
  for (int round = 0; round < 20; ++round) {
    // Parallel: two full-support programs over one partition.
    VariablePartition p(
        {1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3),
         1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)});
    Abp a = smlt_tests::random_path_abp(p, IndexSet::full(4), kField, rng);
    Abp b = smlt_tests::random_path_abp(p, IndexSet::full(4), kField, rng);
    CHECK(abp_expand(compose_parallel(a, b)) ==
          poly_add(abp_expand(a), abp_expand(b)));

    // Series: disjoint supports over the same partition.
    Abp left =
        smlt_tests::random_path_abp(p, IndexSet::from_elements({1, 3}),
                                    kField, rng);
    Abp right =
        smlt_tests::random_path_abp(p, IndexSet::from_elements({2, 4}),
                                    kField, rng);
    CHECK(abp_expand(compose_series(left, right)) ==
          poly_mul(abp_expand(left), abp_expand(right)));
  }
}

TEST_CASE("substitute_abp identity and contraction") {
  std::vector<int> id{1, 2, 3, 4};
  Abp abp = gen_sigma_p_abp(2, id, kField);
  Abp same = substitute_abp(abp, {});
  CHECK(abp_to_json(same) == abp_to_json(abp));

  // Fully assigning bucket 1 contracts one layer.
  Assignment partial;
  partial.emplace(Variable{1, 1}, kField.one());
  partial.emplace(Variable{1, 2}, kField.zero());
  Abp contracted = substitute_abp(abp, partial);
  AbpAnnotation ann = validate_abp(contracted);
  CHECK(ann.degree == 3);
  CHECK(ann.support == IndexSet::from_elements({2, 3, 4}));
}

TEST_CASE("block-diagonal restriction of the permanent program") {
  BlockDiagonalRestriction r = gen_block_diagonal_restriction(4, 2, kField);
  Abp restricted = substitute_abp(gen_permanent_roabp(4, kField),
                                  r.assignment);
  Polynomial p = abp_expand(restricted);
  CHECK(p.term_count() == 4);  // 2^nu
  for (const auto& [m, c] : p.terms()) {
    (void)m;
    CHECK(c == kField.one());
  }
}

TEST_CASE("substitution contracts several layers at once") {
  // Fully assign buckets 2 and 3 of a row-order permanent program; the
  // surviving program reads buckets 1 and 4 only.
  Abp abp = gen_permanent_roabp(4, kField);
  Assignment partial;
  for (int b = 2; b <= 3; ++b) {
    for (int j = 1; j <= 4; ++j) {
      partial.emplace(Variable{b, j},
                      j == b ? kField.one() : kField.element(2));
    }
  }
  Abp contracted = substitute_abp(abp, partial);
  AbpAnnotation ann = validate_abp(contracted);
  CHECK(ann.degree == 2);
  CHECK(ann.support == IndexSet::from_elements({1, 4}));
  // Reference through the polynomial side.
  Polynomial before = abp_expand(abp);
  Polynomial expected(kField, IndexSet::from_elements({1, 4}));
  for (const auto& [m, c] : before.terms()) {
    FieldElement coeff = c;
    std::vector<Variable> survivors;
    for (const Variable& v : m.variables()) {
      auto it = partial.find(v);
      if (it == partial.end()) {
        survivors.push_back(v);
      } else {
        coeff = coeff * it->second;
      }
    }
    if (coeff.is_zero()) continue;
    Monomial rest{survivors};
    expected.set_coefficient(rest, expected.coefficient(rest) + coeff);
  }
  CHECK(abp_expand(contracted) == expected);
}

TEST_CASE("substitution commutes with expansion on random programs") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 25; ++round) {
    Abp abp = smlt_tests::random_abp(6000 + round, kField);
    const VariablePartition& partition = abp.partition();
    Assignment partial;
    int full_buckets = 0;
    for (int i = 1; i <= partition.degree(); ++i) {
      if (rng() % 3 == 0 && full_buckets + 1 < partition.degree()) {
        ++full_buckets;
        for (int j = 1; j <= partition.bucket_size(i); ++j) {
          partial.emplace(Variable{i, j},
                          kField.element(static_cast<std::int64_t>(rng() % 3)));
        }
      } else if (rng() % 4 == 0 && partition.bucket_size(i) >= 2) {
        partial.emplace(Variable{i, 1}, kField.zero());
      }
    }
    IndexSet dropped;
    for (int i = 1; i <= partition.degree(); ++i) {
      bool full = true;
      for (int j = 1; j <= partition.bucket_size(i); ++j) {
        if (!partial.count(Variable{i, j})) full = false;
      }
      if (full) dropped = dropped.with(i);
    }
    Polynomial before = abp_expand(abp);
    Abp after = substitute_abp(abp, partial);
    // Reference: substitute into the expanded polynomial.
    Polynomial expected(kField, before.index_set() - dropped);
    for (const auto& [m, c] : before.terms()) {
      FieldElement coeff = c;
      std::vector<Variable> survivors;
      for (const Variable& v : m.variables()) {
        auto it = partial.find(v);
        if (it == partial.end()) {
          survivors.push_back(v);
        } else {
          coeff = coeff * it->second;
        }
      }
      if (coeff.is_zero()) continue;
      Monomial rest{survivors};
      expected.set_coefficient(rest, expected.coefficient(rest) + coeff);
    }
    CHECK(abp_expand(after) == expected);
  }
}

TEST_CASE("interval check on programs") {
  std::vector<int> id{1, 2, 3, 4, 5, 6};
  Abp abp = gen_sigma_p_abp(3, id, kField);
  CHECK(abp_is_interval_multilinear(abp, {1, 4, 2, 5, 3, 6})
            .interval_multilinear);
  AbpIntervalCheckResult r = abp_is_interval_multilinear(abp, id);
  CHECK_FALSE(r.interval_multilinear);
  CHECK(r.violating_node.has_value());
}

TEST_CASE("interpolated family type-width profile") {
  std::mt19937_64 rng(55);
  std::vector<std::vector<int>> sigmas;
  for (int c = 0; c < 4; ++c) {
    sigmas.push_back(random_permutation(8, rng));
  }
  Abp f = gen_interpolated_f(4, sigmas, kField);
  AbpAnnotation ann = validate_abp(f);
  CHECK(ann.type_width.front() == 1);
  CHECK(ann.type_width.back() == 1);
  // Selector layers read the same buckets in every branch.
  CHECK(ann.type_width[1] == 1);
  CHECK(ann.type_width[2] == 1);
  // The seeded body orders differ, so some layer carries several types.
  int max_width = 0;
  for (int w : ann.type_width) max_width = std::max(max_width, w);
  CHECK(max_width >= 2);
}

TEST_CASE("node polynomials are set-multilinear with the node's index set") {
  for (int round = 0; round < 10; ++round) {
    Abp abp = smlt_tests::random_abp(7000 + round, kField);
    std::vector<Polynomial> polys = abp_node_polynomials(abp);
    for (int id = 0; id < abp.size(); ++id) {
      CHECK(polys[static_cast<std::size_t>(id)].index_set() ==
            abp.node(id).type);
    }
  }
}
