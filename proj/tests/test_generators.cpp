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

#include <set>

#include "smlt/generators.hpp"
#include "smlt/proof_trees.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"

using namespace smlt;
using smlt_tests::thrown_code;

namespace {

const PrimeField kField;

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("permanent and determinant generators") {
  Polynomial per2 = expand(gen_permanent(2, kField));
  Polynomial det2 = expand(gen_determinant(2, kField));
  Monomial diag({{1, 1}, {2, 2}});
  Monomial anti({{1, 2}, {2, 1}});
  CHECK(per2.coefficient(diag) == kField.one());
  CHECK(per2.coefficient(anti) == kField.one());
  CHECK(det2.coefficient(diag) == kField.one());
  CHECK(det2.coefficient(anti) == kField.element(-1));

  for (int n = 2; n <= 4; ++n) {
    Polynomial per = expand(gen_permanent(n, kField));
    Polynomial det = expand(gen_determinant(n, kField));
    CHECK(per.term_count() == static_cast<std::size_t>(factorial(n)));
    CHECK(det.term_count() == static_cast<std::size_t>(factorial(n)));
    for (const auto& [m, c] : per.terms()) {
      (void)m;
      CHECK(c == kField.one());
    }
    for (const auto& [m, c] : det.terms()) {
      // Sign = parity of the column permutation.
      std::vector<int> cols;
      for (const Variable& v : m.variables()) cols.push_back(v.column);
      int inversions = 0;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        for (std::size_t j = i + 1; j < cols.size(); ++j) {
          if (cols[i] > cols[j]) ++inversions;
        }
      }
      CHECK(c == (inversions % 2 == 0 ? kField.one() : kField.element(-1)));
    }
  }
  CHECK(thrown_code([] { gen_permanent(7, kField); }) == "ScaleExceeded");
}

TEST_CASE("row-order read-once program for the permanent") {
  for (int n = 2; n <= 4; ++n) {
    Abp abp = gen_permanent_roabp(n, kField);
    CHECK(abp.size() == (1 << n));
    CHECK(abp_expand(abp) == expand(gen_permanent(n, kField)));
    std::vector<int> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(i);
    CHECK(detect_roabp(abp) == rows);
  }
}

TEST_CASE("sigma-P polynomials") {
  std::vector<int> id2{1, 2};
  Polynomial p1 = gen_sigma_p(1, id2, kField);
  Polynomial expected(kField, IndexSet::full(2));
  expected.set_coefficient(Monomial({{1, 1}, {2, 1}}), kField.one());
  expected.set_coefficient(Monomial({{1, 2}, {2, 2}}), kField.one());
  CHECK(p1 == expected);

  std::vector<int> id4{1, 2, 3, 4};
  CHECK(gen_sigma_p(2, id4, kField).term_count() == 4);

  // gen_sigma_p(d, sigma) is the bucket relabeling of the identity case.
  std::vector<int> sigma{3, 1, 4, 2};
  Polynomial base = gen_sigma_p(2, id4, kField);
  Polynomial relabeled(kField, IndexSet::full(4));
  for (const auto& [m, c] : base.terms()) {
    std::vector<Variable> vars;
    for (const Variable& v : m.variables()) {
      vars.push_back(Variable{sigma[static_cast<std::size_t>(v.bucket - 1)],
                              v.column});
    }
    relabeled.set_coefficient(Monomial(vars), c);
  }
  CHECK(gen_sigma_p(2, sigma, kField) == relabeled);
}

TEST_CASE("the sigma-P ladder is small, monotone and read-once") {
  std::mt19937_64 rng(41);
  for (int d = 1; d <= 10; ++d) {
    std::vector<int> sigma = random_permutation(2 * d, rng);
    Abp abp = gen_sigma_p_abp(d, sigma, kField);
    CHECK(abp.size() == 3 * d + 1);
    for (const AbpEdge& e : abp.edges()) {
      for (const auto& [col, c] : e.form.coeffs) {
        (void)col;
        CHECK(c == kField.one());
      }
    }
    CHECK(abp_is_monotone(abp));
    if (d <= 6) {
      CHECK(abp_expand(abp) == gen_sigma_p(d, sigma, kField));
    }
    std::vector<int> expected_order;
    for (int i = 1; i <= d; ++i) {
      expected_order.push_back(sigma[static_cast<std::size_t>(i - 1)]);
      expected_order.push_back(sigma[static_cast<std::size_t>(d + i - 1)]);
    }
    CHECK(detect_roabp(abp) == expected_order);
    CHECK(abp_is_interval_multilinear(abp, expected_order)
              .interval_multilinear);
  }
}

TEST_CASE("interpolated family recovers each permuted copy") {
  {
    std::vector<int> id{1, 2, 3, 4};
    Abp f = gen_interpolated_f(2, {id, id}, kField);
    AbpAnnotation ann = validate_abp(f);
    CHECK(ann.degree == 5);  // log d + 2d
    for (int c = 0; c <= 1; ++c) {
      Assignment selector;
      selector.emplace(Variable{5, c + 1}, kField.one());
      selector.emplace(Variable{5, (1 - c) + 1}, kField.zero());
      Abp restricted = substitute_abp(f, selector);
      CHECK(abp_expand(restricted) == gen_sigma_p(2, id, kField));
    }
  }
  {
    std::mt19937_64 rng(43);
    int d = 4;
    std::vector<std::vector<int>> sigmas;
    for (int c = 0; c < d; ++c) {
      sigmas.push_back(random_permutation(2 * d, rng));
    }
    Abp f = gen_interpolated_f(d, sigmas, kField);
    CHECK(f.size() <= 6 * d * d);  // O(d^2) nodes, C measured small
    int log_d = 2;
    std::set<std::string> recovered;
    for (int c = 0; c < d; ++c) {
      Assignment selector;
      for (int j = 1; j <= log_d; ++j) {
        int bit = (c >> (log_d - j)) & 1;
        selector.emplace(Variable{2 * d + j, bit + 1}, kField.one());
        selector.emplace(Variable{2 * d + j, (1 - bit) + 1}, kField.zero());
      }
      Abp restricted = substitute_abp(f, selector);
      Polynomial got = abp_expand(restricted);
      CHECK(got == gen_sigma_p(d, sigmas[static_cast<std::size_t>(c)], kField));
      recovered.insert(got.to_string());
    }
    CHECK(recovered.size() == 4);  // the seeded copies are distinct
  }
  CHECK(thrown_code([] {
          std::vector<int> id{1, 2, 3, 4, 5, 6};
          gen_interpolated_f(3, {id, id, id}, kField);
        }) == "NotPowerOfTwo");
}

TEST_CASE("block-diagonal restriction pins 2^nu monomials") {
  for (auto [n, nu] : std::vector<std::pair<int, int>>{
           {2, 1}, {4, 2}, {6, 3}, {4, 0}}) {
    BlockDiagonalRestriction r = gen_block_diagonal_restriction(n, nu, kField);
    Circuit per = gen_permanent(n, kField);
    Circuit restricted = substitute(per, r.assignment);
    Polynomial p = expand(restricted, {}, ValidationMode::kRelaxed);
    CHECK(p.term_count() == (std::size_t{1} << nu));
    if (nu == 0) {
      CHECK(p.index_set() == IndexSet());
      CHECK(p.coefficient(Monomial::unit()) == kField.one());
    }
  }
  CHECK(thrown_code([] { gen_block_diagonal_restriction(4, 3, kField); }) ==
        "ScaleExceeded");
}

TEST_CASE("good-pair statistics are reproducible and sane") {
  GoodPairStats once = good_pair_stats(8, 1, 99);
  GoodPairStats again = good_pair_stats(8, 1, 99);
  CHECK(once.e1_counts == again.e1_counts);
  CHECK(once.e2_counts == again.e2_counts);
  CHECK(once.f_low_count == again.f_low_count);
  CHECK(once.mean_f == again.mean_f);

  GoodPairStats s = good_pair_stats(16, 2000, 7);
  for (std::uint64_t c : s.e1_counts) {
    CHECK(static_cast<double>(c) / 2000.0 <= 0.25);
  }
  CHECK(s.mean_f >= 0.0);
  CHECK(s.mean_f <= 2.0);

  CHECK(thrown_code([] { good_pair_stats(10, 5, 1); }) == "BadDivisibility");
  CHECK(thrown_code([] { good_pair_stats(8, 0, 1); }) == "BadDivisibility");
}

TEST_CASE("permanent generators have one proof-tree type") {
  CHECK(enumerate_tree_types(gen_permanent(4, kField)).size() == 1);
}

TEST_CASE("the low-f tail is large at d=128 but vanishes at d=1024") {
  // At d = 128 the event f < d/1024 is f = 0, which has probability about
  // e^{-E[f]} with E[f] near 1.  The exponential tail bound only has bite
  // once d/1024 clears a positive threshold.
  GoodPairStats small = good_pair_stats(128, 4000, 5);
  CHECK(small.prob_f_low > 0.2);
  CHECK(small.prob_f_low < 0.5);

  GoodPairStats large = good_pair_stats(1024, 2000, 5);
  CHECK(large.prob_f_low < 0.01);
}
