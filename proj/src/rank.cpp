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

#include "smlt/rank.hpp"

#include <algorithm>
#include <set>

namespace smlt {

std::vector<Monomial> enumerate_monomials(const VariablePartition& partition,
                                          IndexSet index_set) {
  std::vector<int> buckets = index_set.elements();
  std::vector<Monomial> out;
  std::vector<int> columns(buckets.size(), 1);
  while (true) {
    std::vector<Variable> vars;
    vars.reserve(buckets.size());
    for (std::size_t i = 0; i < buckets.size(); ++i) {
      vars.push_back(Variable{buckets[i], columns[i]});
    }
    out.push_back(Monomial(std::move(vars)));
    // Odometer with the last bucket fastest.
    std::size_t i = buckets.size();
    while (i > 0) {
      --i;
      if (columns[i] < partition.bucket_size(buckets[i])) {
        ++columns[i];
        break;
      }
      columns[i] = 1;
      if (i == 0) return out;
    }
    if (buckets.empty()) return out;
  }
}

LayerMatrices abp_layer_matrices(const Abp& abp, int k, const Limits& limits) {
  AbpAnnotation ann = validate_abp(abp);
  if (k < 0 || k > ann.degree) {
    throw validation_error("LayerOutOfRange",
                           "layer " + std::to_string(k) + " outside [0," +
                               std::to_string(ann.degree) + "]");
  }
  std::vector<Polynomial> forward = abp_node_polynomials(abp, limits);
  std::vector<Polynomial> backward = abp_suffix_polynomials(abp, limits);

  const std::vector<int>& nodes = ann.layers[static_cast<std::size_t>(k)];
  std::set<IndexSet> types;
  for (int id : nodes) types.insert(abp.node(id).type);

  std::vector<Monomial> rows;
  std::vector<Monomial> cols;
  for (IndexSet type : types) {
    for (Monomial& m : enumerate_monomials(abp.partition(), type)) {
      rows.push_back(std::move(m));
    }
  }
  for (IndexSet type : types) {
    for (Monomial& m :
         enumerate_monomials(abp.partition(), ann.support - type)) {
      cols.push_back(std::move(m));
    }
  }

  const PrimeField& field = abp.field();
  DenseMatrix left(field, rows.size(), nodes.size());
  DenseMatrix right(field, nodes.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    left.row_labels().push_back(rows[r].to_string());
    for (std::size_t c = 0; c < nodes.size(); ++c) {
      left.set(r, c,
               forward[static_cast<std::size_t>(nodes[c])].coefficient(rows[r]));
    }
  }
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    left.col_labels().push_back("v" + std::to_string(nodes[c]));
    right.row_labels().push_back("v" + std::to_string(nodes[c]));
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    right.col_labels().push_back(cols[c].to_string());
    for (std::size_t r = 0; r < nodes.size(); ++r) {
      right.set(r, c,
                backward[static_cast<std::size_t>(nodes[r])].coefficient(
                    cols[c]));
    }
  }
  return LayerMatrices{std::move(left), std::move(right), std::move(rows),
                       std::move(cols), nodes};
}

DenseMatrix fixed_order_matrix(const VariablePartition& partition,
                               const Polynomial& f,
                               const std::vector<int>& order, int k) {
  IndexSet support = f.index_set();
  if (static_cast<int>(order.size()) != support.count()) {
    throw validation_error("BadOrder",
                           "ordering must list the polynomial's " +
                               std::to_string(support.count()) + " buckets");
  }
  IndexSet seen;
  for (int bucket : order) {
    if (!support.contains(bucket) || seen.contains(bucket)) {
      throw validation_error("BadOrder",
                             "ordering is not a permutation of the support");
    }
    seen = seen.with(bucket);
  }
  if (k < 0 || k > support.count()) {
    throw validation_error("LayerOutOfRange",
                           "split " + std::to_string(k) + " outside [0," +
                               std::to_string(support.count()) + "]");
  }

  IndexSet prefix;
  for (int i = 0; i < k; ++i) {
    prefix = prefix.with(order[static_cast<std::size_t>(i)]);
  }
  std::vector<Monomial> rows = enumerate_monomials(partition, prefix);
  std::vector<Monomial> cols = enumerate_monomials(partition, support - prefix);

  DenseMatrix m(f.field(), rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    m.row_labels().push_back(rows[r].to_string());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      m.set(r, c, f.coefficient(rows[r] * cols[c]));
    }
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    m.col_labels().push_back(cols[c].to_string());
  }
  return m;
}

RankReport rank_lower_bound_report(const Abp& abp, const Limits& limits) {
  AbpAnnotation ann = validate_abp(abp);
  RankReport report;
  report.mode = "abp-witness";
  report.node_count = static_cast<std::size_t>(abp.size());
  for (int k = 0; k <= ann.degree; ++k) {
    LayerMatrices m = abp_layer_matrices(abp, k, limits);
    LayerRankRecord record;
    record.layer = k;
    record.left_rows = m.left.rows();
    record.nodes = m.left.cols();
    record.right_cols = m.right.cols();
    record.rank_left = matrix_rank(m.left);
    record.rank_right = matrix_rank(m.right);
    report.total += std::min(record.rank_left, record.rank_right);
    report.layers.push_back(record);
  }
  if (report.total > report.node_count) {
    throw validation_error("InternalError",
                           "witness rank total exceeds the program size");
  }
  return report;
}

FixedOrderRankReport fixed_order_rank_report(const VariablePartition& partition,
                                             const Polynomial& f,
                                             const std::vector<int>& order) {
  FixedOrderRankReport report;
  report.mode = "fixed-order";
  report.order = order;
  for (int k = 0; k <= static_cast<int>(order.size()); ++k) {
    DenseMatrix m = fixed_order_matrix(partition, f, order, k);
    FixedOrderLayerRecord record;
    record.layer = k;
    record.rows = m.rows();
    record.cols = m.cols();
    record.rank = matrix_rank(m);
    report.total += record.rank;
    report.layers.push_back(record);
  }
  return report;
}

}  // namespace smlt
