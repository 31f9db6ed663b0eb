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

#include "smlt/proof_trees.hpp"

#include <algorithm>
#include <map>

#include "smlt/transforms.hpp"

namespace smlt {

TreeTypePtr TreeType::leaf(IndexSet label) {
  return TreeTypePtr(new TreeType(label, nullptr, nullptr));
}

TreeTypePtr TreeType::node(const TreeTypePtr& a, const TreeTypePtr& b) {
  if (!a->label().disjoint_with(b->label())) {
    throw validation_error("IndexSetOverlap",
                           "tree-type children overlap on " +
                               (a->label() & b->label()).to_string());
  }
  const TreeTypePtr& first =
      a->label().min_element() <= b->label().min_element() ? a : b;
  const TreeTypePtr& second = first == a ? b : a;
  return TreeTypePtr(
      new TreeType(a->label() | b->label(), first, second));
}

TreeTypePtr TreeType::unary(IndexSet label, const TreeTypePtr& child) {
  return TreeTypePtr(new TreeType(label, child, nullptr));
}

TreeTypePtr TreeType::join(const TreeTypePtr& a, const TreeTypePtr& b) {
  if (a->is_empty()) return b;
  if (b->is_empty()) return a;
  return node(a, b);
}

int TreeType::leaf_count() const {
  if (is_leaf()) return 1;
  int n = left_ ? left_->leaf_count() : 0;
  if (right_) n += right_->leaf_count();
  return n;
}

std::vector<IndexSet> TreeType::labels() const {
  std::vector<IndexSet> out{label_};
  if (left_) {
    auto sub = left_->labels();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  if (right_) {
    auto sub = right_->labels();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::string TreeType::to_string() const {
  if (is_leaf()) return label_.to_string();
  std::string s = label_.to_string() + "(" + left_->to_string();
  if (right_) s += "," + right_->to_string();
  return s + ")";
}

int compare_tree_types(const TreeTypePtr& a, const TreeTypePtr& b) {
  if (a == b) return 0;
  if (a == nullptr) return -1;
  if (b == nullptr) return 1;
  if (a->label() != b->label()) return a->label() < b->label() ? -1 : 1;
  int arity_a = (a->left() != nullptr) + (a->right() != nullptr);
  int arity_b = (b->left() != nullptr) + (b->right() != nullptr);
  if (arity_a != arity_b) return arity_a < arity_b ? -1 : 1;
  if (int c = compare_tree_types(a->left(), b->left()); c != 0) return c;
  return compare_tree_types(a->right(), b->right());
}

namespace {

// Bottom-up sets of proof-tree skeletons per gate.  The empty type stands
// for constant-only subtrees; zero constants contribute nothing, so dead
// branches drop out without any flag plumbing.
std::vector<TreeTypeSet> type_sets(const Circuit& circuit,
                                   const Limits& limits) {
  std::vector<TreeTypeSet> sets(static_cast<std::size_t>(circuit.size()));
  TreeTypePtr eps = TreeType::leaf(IndexSet());
  for (int id = 0; id < circuit.size(); ++id) {
    std::size_t i = static_cast<std::size_t>(id);
    const Gate& g = circuit.gate(id);
    TreeTypeSet& out = sets[i];
    switch (g.kind) {
      case GateKind::kInput:
        out.insert(TreeType::leaf(IndexSet::single(g.var.bucket)));
        break;
      case GateKind::kConstant:
        if (!g.value.is_zero()) out.insert(eps);
        break;
      case GateKind::kAdd:
        for (int a : g.args) {
          const TreeTypeSet& child = sets[static_cast<std::size_t>(a)];
          out.insert(child.begin(), child.end());
        }
        break;
      case GateKind::kMul:
        for (const TreeTypePtr& ta : sets[static_cast<std::size_t>(g.args[0])]) {
          for (const TreeTypePtr& tb :
               sets[static_cast<std::size_t>(g.args[1])]) {
            out.insert(TreeType::join(ta, tb));
          }
        }
        break;
    }
    if (out.size() > limits.max_types) {
      throw ceiling_error("TypeCountCeiling",
                          "gate " + std::to_string(id) + " carries more than " +
                              std::to_string(limits.max_types) +
                              " proof-tree types");
    }
  }
  return sets;
}

}  // namespace

std::vector<TreeTypePtr> enumerate_tree_types(const Circuit& circuit,
                                              const Limits& limits) {
  Circuit pruned = prune_unreachable(circuit);
  validate(pruned, ValidationMode::kRelaxed);
  auto sets = type_sets(pruned, limits);
  const TreeTypeSet& out = sets[static_cast<std::size_t>(pruned.output())];
  return std::vector<TreeTypePtr>(out.begin(), out.end());
}

TreeTypePtr truncate_type(const TreeTypePtr& type, int d) {
  if (type == nullptr || 3 * type->label().count() <= d) return nullptr;
  TreeTypePtr left = truncate_type(type->left(), d);
  TreeTypePtr right = truncate_type(type->right(), d);
  TreeTypePtr out;
  if (left && right) {
    // Surviving siblings keep their labels, so the union is the original.
    out = TreeType::node(left, right);
  } else if (left || right) {
    out = TreeType::unary(type->label(), left ? left : right);
  } else {
    out = TreeType::leaf(type->label());
  }
  if (out->leaf_count() > 2) {
    throw validation_error("InternalError",
                           "truncated type with more than two leaves");
  }
  return out;
}

PropertyUResult check_property_U(const Circuit& circuit,
                                 const Limits& limits) {
  Circuit pruned = prune_unreachable(circuit);
  CircuitAnnotation ann = validate(pruned, ValidationMode::kRelaxed);
  int d = ann.degree_of(pruned.output());

  using MonomialTypes = std::map<Monomial, TreeTypeSet>;
  std::vector<MonomialTypes> table(static_cast<std::size_t>(pruned.size()));
  TreeTypePtr eps = TreeType::leaf(IndexSet());
  for (int id = 0; id < pruned.size(); ++id) {
    std::size_t i = static_cast<std::size_t>(id);
    const Gate& g = pruned.gate(id);
    MonomialTypes& out = table[i];
    switch (g.kind) {
      case GateKind::kInput:
        out[Monomial::variable(g.var)].insert(
            TreeType::leaf(IndexSet::single(g.var.bucket)));
        break;
      case GateKind::kConstant:
        if (!g.value.is_zero()) out[Monomial::unit()].insert(eps);
        break;
      case GateKind::kAdd:
        for (int a : g.args) {
          for (const auto& [m, types] : table[static_cast<std::size_t>(a)]) {
            out[m].insert(types.begin(), types.end());
          }
        }
        break;
      case GateKind::kMul:
        for (const auto& [ma, ta] : table[static_cast<std::size_t>(g.args[0])]) {
          for (const auto& [mb, tb] :
               table[static_cast<std::size_t>(g.args[1])]) {
            TreeTypeSet& slot = out[ma * mb];
            for (const TreeTypePtr& x : ta) {
              for (const TreeTypePtr& y : tb) {
                slot.insert(TreeType::join(x, y));
              }
            }
          }
        }
        break;
    }
    std::size_t total = 0;
    for (const auto& [m, types] : out) total += types.size();
    if (total > limits.max_types) {
      throw ceiling_error("TypeCountCeiling",
                          "gate " + std::to_string(id) +
                              " carries more than " +
                              std::to_string(limits.max_types) +
                              " monomial/type pairs");
    }
  }

  for (const auto& [m, types] :
       table[static_cast<std::size_t>(pruned.output())]) {
    TreeTypeSet truncated;
    for (const TreeTypePtr& t : types) {
      truncated.insert(truncate_type(t, d));
    }
    if (truncated.size() > 1) {
      return {false, m};
    }
  }
  return {true, std::nullopt};
}

namespace {

// Appends a copy of src into dst (ids shifted) and returns the copied
// output gate.
int append_circuit(Circuit& dst, const Circuit& src) {
  int offset = dst.size();
  for (int id = 0; id < src.size(); ++id) {
    const Gate& g = src.gate(id);
    switch (g.kind) {
      case GateKind::kInput:
        dst.add_input(g.var);
        break;
      case GateKind::kConstant:
        dst.add_constant(g.value);
        break;
      case GateKind::kAdd: {
        std::vector<int> args;
        args.reserve(g.args.size());
        for (int a : g.args) args.push_back(a + offset);
        dst.add_sum(std::move(args));
        break;
      }
      case GateKind::kMul:
        dst.add_product(g.args[0] + offset, g.args[1] + offset);
        break;
    }
  }
  return src.output() + offset;
}

// Copy of the circuit with some gates replaced by constants.
Circuit replace_gates(const Circuit& circuit,
                      const std::map<int, FieldElement>& replacements) {
  Circuit out(circuit.partition(), circuit.field());
  for (int id = 0; id < circuit.size(); ++id) {
    auto it = replacements.find(id);
    if (it != replacements.end()) {
      out.add_constant(it->second);
      continue;
    }
    const Gate& g = circuit.gate(id);
    switch (g.kind) {
      case GateKind::kInput:
        out.add_input(g.var);
        break;
      case GateKind::kConstant:
        out.add_constant(g.value);
        break;
      case GateKind::kAdd:
        out.add_sum(g.args);
        break;
      case GateKind::kMul:
        out.add_product(g.args[0], g.args[1]);
        break;
    }
  }
  out.set_output(circuit.output());
  return out;
}

Circuit subcircuit_at(const Circuit& circuit, int root) {
  Circuit copy = replace_gates(circuit, {});
  copy.set_output(root);
  return prune_unreachable(copy);
}

}  // namespace

SliceResult slice_by_index_set(const Circuit& circuit, IndexSet index_set,
                               const Limits& limits) {
  Circuit pruned = prune_unreachable(circuit);
  CircuitAnnotation ann = validate(pruned, ValidationMode::kRelaxed);
  const PrimeField& field = pruned.field();
  int d = ann.degree_of(pruned.output());
  IndexSet complement = ann.index_set[static_cast<std::size_t>(pruned.output())] -
                        index_set;

  GateFrontier frontier =
      gate_frontier(pruned, d / 3, ValidationMode::kRelaxed);
  std::vector<int> slice_gates;
  for (int t : frontier.gates) {
    if (ann.index_set[static_cast<std::size_t>(t)] == index_set) {
      slice_gates.push_back(t);
    }
  }
  if (slice_gates.empty()) {
    throw validation_error("EmptyFrontier",
                           "no frontier gate has index set " +
                               index_set.to_string());
  }

  Circuit out(pruned.partition(), field);
  std::vector<int> terms;
  for (int g : slice_gates) {
    // The derivative circuit d_g C: other frontier gates with this index
    // set are zeroed, g becomes the constant 1, and frontier gates whose
    // index set is neither this one nor its complement are zeroed.
    std::map<int, FieldElement> edits;
    for (int t : frontier.gates) {
      IndexSet type = ann.index_set[static_cast<std::size_t>(t)];
      if (t == g) {
        edits.emplace(t, field.one());
      } else if (type == index_set) {
        edits.emplace(t, field.zero());
      } else if (type != complement) {
        edits.emplace(t, field.zero());
      }
    }
    Circuit derivative = prune_unreachable(replace_gates(pruned, edits));
    CircuitAnnotation der_ann = validate(derivative, ValidationMode::kRelaxed);
    if (der_ann.syntactic_zero[static_cast<std::size_t>(derivative.output())]) {
      continue;
    }
    int left = append_circuit(out, subcircuit_at(pruned, g));
    int right = append_circuit(out, derivative);
    terms.push_back(out.add_product(left, right));
  }
  if (terms.empty()) {
    // Every derivative collapsed; the slice is the zero polynomial, kept
    // as a zeroed copy of the circuit so the index set is preserved.
    int copy = append_circuit(out, pruned);
    int zero = out.add_constant(field.zero());
    terms.push_back(out.add_product(zero, copy));
  }
  out.set_output(out.add_sum(std::move(terms)));
  validate(out, ValidationMode::kRelaxed);

  bool property_u = check_property_U(pruned, limits).holds;
  return SliceResult{std::move(out), property_u};
}

std::vector<Circuit> decompose_by_type(const Circuit& circuit,
                                       const Limits& limits) {
  Circuit pruned = prune_unreachable(circuit);
  CircuitAnnotation ann = validate(pruned, ValidationMode::kRelaxed);
  std::vector<TreeTypePtr> types = enumerate_tree_types(pruned, limits);
  const PrimeField& field = pruned.field();

  std::vector<Circuit> components;
  components.reserve(types.size());
  for (const TreeTypePtr& type : types) {
    std::set<IndexSet> allowed;
    for (IndexSet label : type->labels()) allowed.insert(label);
    std::map<int, FieldElement> edits;
    for (int id = 0; id < pruned.size(); ++id) {
      IndexSet s = ann.index_set[static_cast<std::size_t>(id)];
      if (s.empty()) continue;  // constants stay
      if (!allowed.count(s)) edits.emplace(id, field.zero());
    }
    components.push_back(prune_unreachable(replace_gates(pruned, edits)));
  }
  return components;
}

namespace {

// Materializes a degree <= 1 polynomial as a fanout-1 subcircuit of dst;
// returns the root gate.
int materialize_linear(Circuit& dst, const Polynomial& p) {
  if (p.index_set().empty() || p.is_zero()) {
    return dst.add_constant(p.coefficient(Monomial::unit()));
  }
  std::vector<int> parts;
  for (const auto& [m, c] : p.terms()) {
    int leaf = dst.add_input(m.variables().front());
    parts.push_back(c.is_one() ? leaf
                               : dst.add_product(dst.add_constant(c), leaf));
  }
  return dst.add_sum(std::move(parts));
}

// Balanced-split recursion; returns nullopt for circuits whose polynomial
// is identically zero.
std::optional<Circuit> unique_type_formula_rec(const Circuit& circuit,
                                               const Limits& limits,
                                               int depth_budget) {
  if (depth_budget < 0) {
    throw ceiling_error("SizeCeilingExceeded",
                        "unique-type recursion exceeded its depth budget");
  }
  Circuit pruned = prune_unreachable(circuit);
  CircuitAnnotation ann = validate(pruned, ValidationMode::kRelaxed);
  const PrimeField& field = pruned.field();
  int out_gate = pruned.output();
  int d = ann.degree_of(out_gate);

  std::vector<TreeTypePtr> types = enumerate_tree_types(pruned, limits);
  if (types.empty()) return std::nullopt;  // no live proof trees
  if (types.size() > 1) {
    throw validation_error("NotUniqueType",
                           "circuit has " + std::to_string(types.size()) +
                               " proof-tree types");
  }

  if (d <= 1) {
    Polynomial p = expand(pruned, limits, ValidationMode::kRelaxed);
    if (p.is_zero() && !p.index_set().empty()) return std::nullopt;
    Circuit formula(pruned.partition(), field);
    formula.set_output(materialize_linear(formula, p));
    return formula;
  }

  // Balanced split vertex of the type: walk down the heavier child until
  // the label size falls to at most 2d/3; it then still exceeds d/3.
  TreeTypePtr u = types.front();
  while (3 * u->label().count() > 2 * d) {
    const TreeTypePtr& l = u->left();
    const TreeTypePtr& r = u->right();
    u = (r == nullptr || l->label().count() >= r->label().count()) ? l : r;
  }
  IndexSet split_set = u->label();

  std::vector<int> split_gates;
  for (int id = 0; id < pruned.size(); ++id) {
    if (ann.index_set[static_cast<std::size_t>(id)] == split_set &&
        !ann.syntactic_zero[static_cast<std::size_t>(id)]) {
      split_gates.push_back(id);
    }
  }
  if (split_gates.empty()) {
    throw validation_error("InternalError",
                           "no gate carries the split index set " +
                               split_set.to_string());
  }

  Circuit formula(pruned.partition(), field);
  std::vector<int> terms;
  for (int v : split_gates) {
    std::map<int, FieldElement> edits;
    for (int other : split_gates) {
      if (other != v) edits.emplace(other, field.zero());
    }
    edits.emplace(v, field.one());
    Circuit quotient = prune_unreachable(replace_gates(pruned, edits));

    std::optional<Circuit> left =
        unique_type_formula_rec(subcircuit_at(pruned, v), limits,
                                depth_budget - 1);
    if (!left) continue;
    std::optional<Circuit> right =
        unique_type_formula_rec(quotient, limits, depth_budget - 1);
    if (!right) continue;

    int l = append_circuit(formula, *left);
    int r = append_circuit(formula, *right);
    terms.push_back(formula.add_product(l, r));
    if (formula.size() > static_cast<int>(limits.max_gates)) {
      throw ceiling_error("SizeCeilingExceeded",
                          "unique-type formula passed " +
                              std::to_string(limits.max_gates) + " gates");
    }
  }
  if (terms.empty()) return std::nullopt;
  formula.set_output(formula.add_sum(std::move(terms)));
  return formula;
}

}  // namespace

Circuit unique_type_to_formula(const Circuit& circuit, const Limits& limits) {
  std::vector<TreeTypePtr> types = enumerate_tree_types(circuit, limits);
  if (types.size() != 1) {
    throw validation_error("NotUniqueType",
                           "circuit has " + std::to_string(types.size()) +
                               " proof-tree types");
  }
  std::optional<Circuit> formula =
      unique_type_formula_rec(circuit, limits, 4 * IndexSet::kMaxBuckets);
  if (formula) return std::move(*formula);
  // A unique-type circuit whose polynomial cancels to zero: emit the
  // fanout-1 typed zero const0 * x_{b1,1} * ... over the output index set.
  Circuit pruned = prune_unreachable(circuit);
  CircuitAnnotation ann = validate(pruned, ValidationMode::kRelaxed);
  IndexSet support =
      ann.index_set[static_cast<std::size_t>(pruned.output())];
  Circuit zero(pruned.partition(), pruned.field());
  int acc = zero.add_constant(pruned.field().zero());
  for (int bucket : support.elements()) {
    acc = zero.add_product(acc, zero.add_input(Variable{bucket, 1}));
  }
  zero.set_output(acc);
  return zero;
}

}  // namespace smlt
