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

#ifndef SMLT_GENERATORS_HPP
#define SMLT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "smlt/abp.hpp"
#include "smlt/circuit.hpp"

namespace smlt {

// Permanent/determinant of an n x n variable matrix under the row-wise
// partition, as a sum over permutations of left-comb products; every proof
// tree has the same type.  Desk scale: n <= 6.
Circuit gen_permanent(int n, PrimeField field);
Circuit gen_determinant(int n, PrimeField field);

// Read-once program for the permanent reading rows 1..n; layer k holds one
// node per k-subset of used columns, 2^n nodes in total.
Abp gen_permanent_roabp(int n, PrimeField field);

// sigma(P) = sum_b sigma(w_b) sigma(w'_b) over 2d buckets of size two.
// Bit b of a monomial selects column b+1.  sigma = identity gives P.
Polynomial gen_sigma_p(int d, const std::vector<int>& sigma, PrimeField field);

// The layered monotone program for sigma(P): one node per even layer, two
// per odd layer, 3d+1 nodes, all coefficients one.
Abp gen_sigma_p_abp(int d, const std::vector<int>& sigma, PrimeField field);

// Interpolation of d permuted copies: branch c is prefixed by the selector
// monomial u_c over log d extra buckets and recovers sigma_c(P) when the
// selector variables are fixed to the bits of c (most significant first).
Abp gen_interpolated_f(int d, const std::vector<std::vector<int>>& sigmas,
                       PrimeField field);

struct BlockDiagonalRestriction {
  int n = 0;
  int nu = 0;
  std::vector<int> y;  // first nu row indices
  std::vector<int> z;  // next nu row indices
  Assignment assignment;
};

// The substitution that pins the permanent to a block-diagonal submatrix
// with 2x2 blocks: identity/zero outside Y u Z, and inside it only the
// diagonal and the paired (i_s, j_s) entries stay free.  Exactly 2^nu
// monomials of PER_n survive.
BlockDiagonalRestriction gen_block_diagonal_restriction(int n, int nu,
                                                        PrimeField field);

struct GoodPairStats {
  int d = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> e1_counts;  // per pair, |{samples: X_i = 1}|
  std::vector<std::uint64_t> e2_counts;
  std::uint64_t f_sum = 0;  // exact accumulators behind the means
  std::uint64_t f_sq_sum = 0;
  std::uint64_t f_prime_sum = 0;
  std::uint64_t f_prime_sq_sum = 0;
  double mean_f = 0.0;
  double mean_f_prime = 0.0;
  std::uint64_t f_low_count = 0;  // samples with 1024 f < d
  double prob_f_low = 0.0;
};

// Monte-Carlo estimates of the good-pair indicators over uniform random
// permutations of [2d], sampled by seeded Fisher-Yates.  Bit-reproducible
// for a given (d, samples, seed).
GoodPairStats good_pair_stats(int d, std::uint64_t samples,
                              std::uint64_t seed);

// Uniform random permutation of [1..n]; the shared sampling primitive.
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace smlt

#endif  // SMLT_GENERATORS_HPP
