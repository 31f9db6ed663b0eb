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

#include <algorithm>
#include <random>

#include "smlt/generators.hpp"
#include "smlt/matrix.hpp"
#include "smlt/polynomial.hpp"
#include "smlt/rank.hpp"
#include "support/common.hpp"
#include "support/oracles.hpp"

using namespace smlt;
using smlt_tests::thrown_code;

namespace {

const PrimeField kField;

Polynomial var(int bucket, int column) {
  return Polynomial::variable(kField, Variable{bucket, column});
}

}  // namespace

TEST_CASE("prime field validates its modulus") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(1000000007));
  CHECK(thrown_code([] { PrimeField(1); }) == "BadPrime");
  CHECK(thrown_code([] { PrimeField(91); }) == "BadPrime");  // 7 * 13
  CHECK(thrown_code([] { PrimeField(std::uint64_t{1} << 32); }) == "BadPrime");
}

TEST_CASE("field arithmetic") {
  FieldElement a = kField.element(-1);
  CHECK(a.value() == kField.prime() - 1);
  CHECK(a + kField.one() == kField.zero());
  CHECK(a * a == kField.one());
  CHECK(kField.element(12).inverse() * kField.element(12) == kField.one());
  CHECK(thrown_code([] { kField.zero().inverse(); }) == "DivisionByZero");
  CHECK(thrown_code([] {
          FieldElement x = kField.one() + PrimeField(13).one();
          (void)x;
        }) == "FieldMismatch");
  CHECK(kField.parse("-5") == kField.element(-5));
  CHECK(thrown_code([] { kField.parse("12x"); }) == "BadFieldLiteral");
}

TEST_CASE("poly_add basics") {
  Polynomial x11 = var(1, 1);
  Polynomial sum = poly_add(x11, x11);
  CHECK(sum.term_count() == 1);
  CHECK(sum.coefficient(Monomial::variable({1, 1})) == kField.element(2));

  Polynomial zero = Polynomial::zero(kField, IndexSet::single(1));
  CHECK(poly_add(x11, zero) == x11);

  CHECK(thrown_code([&] { poly_add(x11, var(2, 1)); }) == "IndexSetMismatch");
}

TEST_CASE("poly_mul basics") {
  Polynomial p = poly_mul(var(1, 1), var(2, 2));
  CHECK(p.term_count() == 1);
  CHECK(p.index_set() == IndexSet::from_elements({1, 2}));
  CHECK(p.coefficient(Monomial({{1, 1}, {2, 2}})) == kField.one());

  Polynomial q =
      poly_mul(poly_add(var(1, 1), var(1, 2)), poly_add(var(2, 1), var(2, 2)));
  CHECK(q.term_count() == 4);
  for (const auto& [m, c] : q.terms()) {
    (void)m;
    CHECK(c == kField.one());
  }

  CHECK(thrown_code([&] { poly_mul(var(1, 1), var(1, 2)); }) ==
        "IndexSetOverlap");
}

TEST_CASE("poly_eval on the named families") {
  Assignment ones;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) ones.emplace(Variable{i, j}, kField.one());
  }
  CHECK(poly_eval(expand(gen_permanent(2, kField)), ones) ==
        kField.element(2));
  CHECK(poly_eval(expand(gen_determinant(2, kField)), ones) ==
        kField.zero());
  // P with d = 2 has 4 unit monomials.
  std::vector<int> id{1, 2, 3, 4};
  CHECK(poly_eval(gen_sigma_p(2, id, kField), ones) == kField.element(4));

  Polynomial x11 = var(1, 1);
  CHECK(thrown_code([&] { poly_eval(x11, {}); }) == "MissingAssignment");
}

TEST_CASE("distributivity and eval multiplicativity on random polynomials") {
  std::mt19937_64 rng(7);
  VariablePartition partition({3, 2, 3, 2});
  auto random_poly = [&](IndexSet support) {
    Polynomial p(kField, support);
    for (Monomial& m : enumerate_monomials(partition, support)) {
      if (rng() % 3 != 0) {
        p.set_coefficient(
            m, kField.element(static_cast<std::int64_t>(rng() % 7) - 3));
      }
    }
    return p;
  };
  for (int round = 0; round < 25; ++round) {
    Polynomial p = random_poly(IndexSet::from_elements({1, 3}));
    Polynomial q = random_poly(IndexSet::from_elements({2, 4}));
    Polynomial r = random_poly(IndexSet::from_elements({2, 4}));
    CHECK(poly_mul(p, poly_add(q, r)) ==
          poly_add(poly_mul(p, q), poly_mul(p, r)));
  }
  Polynomial p = random_poly(IndexSet::from_elements({1, 3}));
  Polynomial q = random_poly(IndexSet::from_elements({2, 4}));
  Polynomial pq = poly_mul(p, q);
  for (int round = 0; round < 100; ++round) {
    Assignment a = smlt_tests::random_assignment(partition, kField, rng);
    CHECK(poly_eval(pq, a) == poly_eval(p, a) * poly_eval(q, a));
  }
}

TEST_CASE("matrix rank basics") {
  DenseMatrix eye(kField, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) eye.set(i, i, kField.one());
  CHECK(matrix_rank(eye) == 3);

  DenseMatrix zero(kField, 2, 4);
  CHECK(matrix_rank(zero) == 0);
}

TEST_CASE("Nisan matrix of PER_3 at split k=1 has rank 3") {
  Polynomial per3 = expand(gen_permanent(3, kField));
  VariablePartition partition = VariablePartition::uniform(3, 3);
  DenseMatrix m = fixed_order_matrix(partition, per3, {1, 2, 3}, 1);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 9);
  // Independent elimination over the rationals on the lifted matrix.
  CHECK(smlt_tests::bareiss_rank(smlt_tests::lift_matrix(m)) == 3);
  CHECK(matrix_rank(m) == 3);
}

TEST_CASE("rank is invariant under row and column permutation") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 5;
    DenseMatrix m(kField, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m.set(i, j, kField.element(static_cast<std::int64_t>(rng() % 5) - 2));
      }
    }
    std::vector<std::size_t> rp(rows), cp(cols);
    for (std::size_t i = 0; i < rows; ++i) rp[i] = i;
    for (std::size_t j = 0; j < cols; ++j) cp[j] = j;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    DenseMatrix shuffled(kField, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        shuffled.set(i, j, m.at(rp[i], cp[j]));
      }
    }
    CHECK(matrix_rank(m) == matrix_rank(shuffled));
  }
}

TEST_CASE("rank agrees across two primes on small-integer matrices") {
  PrimeField second(PrimeField::kSecondPrime);
  std::mt19937_64 rng(13);
  for (int round = 0; round < 20; ++round) {
    std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 5;
    DenseMatrix a(kField, rows, cols);
    DenseMatrix b(second, rows, cols);
    std::vector<std::vector<long long>> ints(rows,
                                             std::vector<long long>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        long long v = static_cast<long long>(rng() % 9) - 4;
        ints[i][j] = v;
        a.set(i, j, kField.element(v));
        b.set(i, j, second.element(v));
      }
    }
    std::size_t expected = smlt_tests::bareiss_rank(ints);
    CHECK(matrix_rank(a) == expected);
    CHECK(matrix_rank(b) == expected);
  }
}
