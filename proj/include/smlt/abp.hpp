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

#ifndef SMLT_ABP_HPP
#define SMLT_ABP_HPP

#include <map>
#include <optional>
#include <vector>

#include "smlt/limits.hpp"
#include "smlt/polynomial.hpp"

namespace smlt {

// Homogeneous linear form over a single bucket: sum_j coeffs[j] * x_{bucket,j}.
struct LinearForm {
  int bucket = 0;
  std::map<int, FieldElement> coeffs;  // column -> coefficient

  Polynomial to_polynomial(PrimeField field) const {
    return Polynomial::linear_form(field, bucket, coeffs);
  }
};

struct AbpNode {
  int layer = 0;
  IndexSet type;
};

struct AbpEdge {
  int from = 0;
  int to = 0;
  LinearForm form;
};

// Layered set-multilinear branching program.  The sink's index set is the
// "support"; a program computing a degree-d polynomial over the full
// partition has support [d], while intermediate programs produced by
// composition may cover a subset of the buckets.
class Abp {
 public:
  Abp(VariablePartition partition, PrimeField field)
      : partition_(std::move(partition)), field_(field) {}

  int add_node(int layer, IndexSet type);
  // Parallel edges between the same node pair are merged additively.
  void add_edge(int from, int to, LinearForm form);

  const VariablePartition& partition() const { return partition_; }
  const PrimeField& field() const { return field_; }
  const std::vector<AbpNode>& nodes() const { return nodes_; }
  const std::vector<AbpEdge>& edges() const { return edges_; }
  const AbpNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  VariablePartition partition_;
  PrimeField field_;
  std::vector<AbpNode> nodes_;
  std::vector<AbpEdge> edges_;
};

struct AbpAnnotation {
  int source = 0;
  int sink = 0;
  IndexSet support;                      // sink type
  int degree = 0;                        // number of layers minus one
  std::vector<std::vector<int>> layers;  // node ids per layer
  std::vector<int> type_width;           // distinct types per layer
};

// Checks the layering/typing invariants and returns the type-width profile.
// Errors: LayerSkip, IndexSetStep, MultiSourceOrSink, WrongBucketForm.
AbpAnnotation validate_abp(const Abp& abp);

// Polynomial computed from the source to each node (forward dynamic
// program) or from each node to the sink (backward).
std::vector<Polynomial> abp_node_polynomials(const Abp& abp,
                                             const Limits& limits = {});
std::vector<Polynomial> abp_suffix_polynomials(const Abp& abp,
                                               const Limits& limits = {});

Polynomial abp_expand(const Abp& abp, const Limits& limits = {});
FieldElement abp_evaluate(const Abp& abp, const Assignment& assignment);

int type_width(const Abp& abp, int layer);
// type_width(degree - w) <= threshold.
bool is_w_narrow(const Abp& abp, int w, int threshold);

// For a type-width-1 program, the bucket reading order I_k \ I_{k-1}.
std::optional<std::vector<int>> detect_roabp(const Abp& abp);

Abp compose_parallel(const Abp& a, const Abp& b);
Abp compose_series(const Abp& a, const Abp& b);
// n-ary variants used by the formula lowering; equivalent to folding the
// binary compositions but cheaper.
Abp compose_parallel_many(const std::vector<Abp>& parts);

// Scales the computed polynomial by c (source-outgoing forms are scaled).
Abp abp_scale(const Abp& abp, FieldElement c);

// Substitutes into edge linear forms.  Fully assigned buckets turn their
// edges into scalars, which are contracted away so the result is again a
// layered program over the surviving buckets.
Abp substitute_abp(const Abp& abp, const Assignment& partial);

struct AbpIntervalCheckResult {
  bool interval_multilinear;
  std::optional<int> violating_node;
};

AbpIntervalCheckResult abp_is_interval_multilinear(
    const Abp& abp, const std::vector<int>& order);

// True iff every edge coefficient is non-negative under the same sign
// window as circuit monotonicity.
bool abp_is_monotone(const Abp& abp);

}  // namespace smlt

#endif  // SMLT_ABP_HPP
