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

#ifndef SMLT_RANK_HPP
#define SMLT_RANK_HPP

#include <string>
#include <vector>

#include "smlt/abp.hpp"
#include "smlt/matrix.hpp"

namespace smlt {

// All monomials over the given index set, lexicographic by (bucket, column)
// sequences; the canonical row/column enumeration everywhere.
std::vector<Monomial> enumerate_monomials(const VariablePartition& partition,
                                          IndexSet index_set);

// The Nisan-style witness matrices at layer k of a program: L rows are
// degree-k monomials over the layer's types, columns its nodes; R rows are
// nodes, columns the complementary monomials.  Entries come from the
// forward/backward expansion oracle.
struct LayerMatrices {
  DenseMatrix left;
  DenseMatrix right;
  std::vector<Monomial> row_monomials;  // left rows
  std::vector<Monomial> col_monomials;  // right columns
  std::vector<int> node_ids;            // left columns / right rows
};

LayerMatrices abp_layer_matrices(const Abp& abp, int k,
                                 const Limits& limits = {});

// Coefficient matrix of f under the prefix/suffix split of a fixed bucket
// order: rows are monomials over the first k symbols, columns over the
// rest, entry = coefficient of the product monomial.
DenseMatrix fixed_order_matrix(const VariablePartition& partition,
                               const Polynomial& f,
                               const std::vector<int>& order, int k);

struct LayerRankRecord {
  int layer = 0;
  std::size_t left_rows = 0;
  std::size_t nodes = 0;
  std::size_t right_cols = 0;
  std::size_t rank_left = 0;
  std::size_t rank_right = 0;
};

struct RankReport {
  std::string mode;  // "abp-witness"
  std::vector<LayerRankRecord> layers;
  std::size_t total = 0;  // sum over k of min(rank L_k, rank R_k)
  std::size_t node_count = 0;
};

// Witness ranks from a given program; total is a lower bound on its size.
RankReport rank_lower_bound_report(const Abp& abp, const Limits& limits = {});

struct FixedOrderLayerRecord {
  int layer = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
};

struct FixedOrderRankReport {
  std::string mode;  // "fixed-order"
  std::vector<int> order;
  std::vector<FixedOrderLayerRecord> layers;
  std::size_t total = 0;
};

// Exact per-layer ranks in the uniquely-split fixed-order case; each rank
// lower-bounds the layer width of any ROABP reading in this order.
FixedOrderRankReport fixed_order_rank_report(const VariablePartition& partition,
                                             const Polynomial& f,
                                             const std::vector<int>& order);

}  // namespace smlt

#endif  // SMLT_RANK_HPP
