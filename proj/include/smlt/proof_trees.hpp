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

#ifndef SMLT_PROOF_TREES_HPP
#define SMLT_PROOF_TREES_HPP

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "smlt/circuit.hpp"

namespace smlt {

class TreeType;
using TreeTypePtr = std::shared_ptr<const TreeType>;

// Index-set-labeled tree classifying the multiplicative skeleton of proof
// trees.  Fully built types are binary with singleton leaves; truncated
// types may have unary spine nodes.  Children are ordered by minimum
// element, so equality and ordering are structural.  A leaf with an empty
// label stands for the skeleton of a constant-only subcircuit.
class TreeType {
 public:
  static TreeTypePtr leaf(IndexSet label);
  static TreeTypePtr node(const TreeTypePtr& a, const TreeTypePtr& b);
  static TreeTypePtr unary(IndexSet label, const TreeTypePtr& child);
  // node() with empty-label absorption: join(eps, t) = t.
  static TreeTypePtr join(const TreeTypePtr& a, const TreeTypePtr& b);

  IndexSet label() const { return label_; }
  const TreeTypePtr& left() const { return left_; }
  const TreeTypePtr& right() const { return right_; }
  bool is_leaf() const { return left_ == nullptr && right_ == nullptr; }
  bool is_empty() const { return is_leaf() && label_.empty(); }

  int leaf_count() const;
  // All node labels, the root included.
  std::vector<IndexSet> labels() const;

  std::string to_string() const;

 private:
  TreeType(IndexSet label, TreeTypePtr left, TreeTypePtr right)
      : label_(label), left_(std::move(left)), right_(std::move(right)) {}

  IndexSet label_;
  TreeTypePtr left_;
  TreeTypePtr right_;
};

// Structural three-way comparison; defines the canonical enumeration order.
int compare_tree_types(const TreeTypePtr& a, const TreeTypePtr& b);

struct TreeTypeLess {
  bool operator()(const TreeTypePtr& a, const TreeTypePtr& b) const {
    return compare_tree_types(a, b) < 0;
  }
};
using TreeTypeSet = std::set<TreeTypePtr, TreeTypeLess>;

// All proof-tree types of the circuit, canonically ordered.  Gates that are
// syntactically zero contribute no types (their proof trees compute nothing).
std::vector<TreeTypePtr> enumerate_tree_types(const Circuit& circuit,
                                              const Limits& limits = {});

// Deletes every node v with 3|I_v| <= d.  The result has at most two leaves.
TreeTypePtr truncate_type(const TreeTypePtr& type, int d);

struct PropertyUResult {
  bool holds;
  std::optional<Monomial> violating_monomial;
};

// Property U: each monomial's proof trees share one truncated type.
PropertyUResult check_property_U(const Circuit& circuit,
                                 const Limits& limits = {});

struct SliceResult {
  Circuit circuit;
  // Copy of check_property_U on the input; the slice contract (the slice
  // holds exactly the monomials whose truncated type has leaf I, original
  // coefficients) is only guaranteed when this is true.
  bool property_u;
};

// Equation-style slice C' = sum_{g in G^I_{d/3}} C_g * d_g C, with the
// derivative circuits obtained by the gate-zeroing edits.
SliceResult slice_by_index_set(const Circuit& circuit, IndexSet index_set,
                               const Limits& limits = {});

// One component per proof-tree type: gates whose index set labels no node
// of the type are zeroed.  Components come in canonical type order and sum
// to the original polynomial.
std::vector<Circuit> decompose_by_type(const Circuit& circuit,
                                       const Limits& limits = {});

// Balanced-split recursion turning a unique-type circuit into a formula
// with a unique type that depends only on the input type: pick the type
// node u with d/3 <= |I_u| <= 2d/3, write the polynomial as
// sum_{v: I_v = I_u} P_v Q_v, and recurse on both factors.
Circuit unique_type_to_formula(const Circuit& circuit,
                               const Limits& limits = {});

}  // namespace smlt

#endif  // SMLT_PROOF_TREES_HPP
