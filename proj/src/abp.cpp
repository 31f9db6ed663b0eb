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

#include "smlt/abp.hpp"

#include <algorithm>
#include <set>

namespace smlt {

namespace {

constexpr std::uint64_t kMonotoneWindow = 1'000'000;

std::string node_str(int id) { return "node " + std::to_string(id); }

}  // namespace

int Abp::add_node(int layer, IndexSet type) {
  if (layer < 0) {
    throw validation_error("LayerOutOfRange", "negative layer");
  }
  nodes_.push_back(AbpNode{layer, type});
  return size() - 1;
}

void Abp::add_edge(int from, int to, LinearForm form) {
  if (from < 0 || from >= size() || to < 0 || to >= size()) {
    throw validation_error("BadGate", "edge endpoint out of range");
  }
  for (auto it = form.coeffs.begin(); it != form.coeffs.end();) {
    if (it->second.is_zero()) {
      it = form.coeffs.erase(it);
    } else {
      ++it;
    }
  }
  for (AbpEdge& e : edges_) {
    if (e.from == from && e.to == to) {
      if (e.form.bucket != form.bucket) {
        throw validation_error("WrongBucketForm",
                               "parallel edges over different buckets");
      }
      for (const auto& [col, c] : form.coeffs) {
        auto [it, inserted] = e.form.coeffs.emplace(col, c);
        if (!inserted) {
          it->second = it->second + c;
          if (it->second.is_zero()) e.form.coeffs.erase(it);
        }
      }
      return;
    }
  }
  edges_.push_back(AbpEdge{from, to, std::move(form)});
}

AbpAnnotation validate_abp(const Abp& abp) {
  if (abp.size() == 0) {
    throw validation_error("MultiSourceOrSink", "empty program");
  }
  int max_layer = 0;
  for (const AbpNode& n : abp.nodes()) max_layer = std::max(max_layer, n.layer);

  AbpAnnotation ann;
  ann.degree = max_layer;
  ann.layers.assign(static_cast<std::size_t>(max_layer) + 1, {});
  for (int id = 0; id < abp.size(); ++id) {
    const AbpNode& n = abp.node(id);
    if (n.type.count() != n.layer) {
      throw validation_error("IndexSetStep",
                             node_str(id) + " at layer " +
                                 std::to_string(n.layer) + " has |type| = " +
                                 std::to_string(n.type.count()));
    }
    ann.layers[static_cast<std::size_t>(n.layer)].push_back(id);
  }
  for (int k = 0; k <= max_layer; ++k) {
    if (ann.layers[static_cast<std::size_t>(k)].empty()) {
      throw validation_error("MultiSourceOrSink",
                             "no nodes at layer " + std::to_string(k));
    }
  }
  if (ann.layers[0].size() != 1) {
    throw validation_error("MultiSourceOrSink",
                           "layer 0 must hold exactly the source");
  }
  if (ann.layers[static_cast<std::size_t>(max_layer)].size() != 1) {
    throw validation_error("MultiSourceOrSink",
                           "the last layer must hold exactly the sink");
  }
  ann.source = ann.layers[0][0];
  ann.sink = ann.layers[static_cast<std::size_t>(max_layer)][0];
  ann.support = abp.node(ann.sink).type;

  std::vector<int> in_degree(static_cast<std::size_t>(abp.size()), 0);
  std::vector<int> out_degree(static_cast<std::size_t>(abp.size()), 0);
  for (const AbpEdge& e : abp.edges()) {
    const AbpNode& from = abp.node(e.from);
    const AbpNode& to = abp.node(e.to);
    if (to.layer != from.layer + 1) {
      throw validation_error("LayerSkip",
                             "edge " + std::to_string(e.from) + "->" +
                                 std::to_string(e.to) + " jumps from layer " +
                                 std::to_string(from.layer) + " to " +
                                 std::to_string(to.layer));
    }
    IndexSet step = to.type - from.type;
    if (step.count() != 1 || !from.type.subset_of(to.type)) {
      throw validation_error("IndexSetStep",
                             "edge " + std::to_string(e.from) + "->" +
                                 std::to_string(e.to) + ": " +
                                 to.type.to_string() + " is not " +
                                 from.type.to_string() + " plus one bucket");
    }
    if (e.form.bucket != step.min_element()) {
      throw validation_error("WrongBucketForm",
                             "edge " + std::to_string(e.from) + "->" +
                                 std::to_string(e.to) + " is labeled over X_" +
                                 std::to_string(e.form.bucket) +
                                 " but steps bucket " +
                                 std::to_string(step.min_element()));
    }
    for (const auto& [col, c] : e.form.coeffs) {
      if (col < 1 || col > abp.partition().bucket_size(e.form.bucket)) {
        throw validation_error("WrongBucketForm",
                               "column " + std::to_string(col) +
                                   " out of range for bucket " +
                                   std::to_string(e.form.bucket));
      }
      if (c.prime() != abp.field().prime()) {
        throw validation_error("FieldMismatch",
                               "edge coefficient uses a different prime");
      }
    }
    ++out_degree[static_cast<std::size_t>(e.from)];
    ++in_degree[static_cast<std::size_t>(e.to)];
  }

  for (int id = 0; id < abp.size(); ++id) {
    const AbpNode& n = abp.node(id);
    if (n.layer > 0 && in_degree[static_cast<std::size_t>(id)] == 0) {
      throw validation_error("MultiSourceOrSink",
                             node_str(id) + " has no incoming edges");
    }
    if (n.layer < max_layer && out_degree[static_cast<std::size_t>(id)] == 0) {
      throw validation_error("MultiSourceOrSink",
                             node_str(id) + " has no outgoing edges");
    }
  }

  ann.type_width.reserve(ann.layers.size());
  for (const auto& layer : ann.layers) {
    std::set<IndexSet> types;
    for (int id : layer) types.insert(abp.node(id).type);
    ann.type_width.push_back(static_cast<int>(types.size()));
  }
  return ann;
}

std::vector<Polynomial> abp_node_polynomials(const Abp& abp,
                                             const Limits& limits) {
  AbpAnnotation ann = validate_abp(abp);
  const PrimeField& field = abp.field();
  std::vector<Polynomial> polys(static_cast<std::size_t>(abp.size()),
                                Polynomial::zero(field, IndexSet()));
  polys[static_cast<std::size_t>(ann.source)] =
      Polynomial::constant(field, field.one());
  for (std::size_t k = 1; k < ann.layers.size(); ++k) {
    for (int id : ann.layers[k]) {
      polys[static_cast<std::size_t>(id)] =
          Polynomial::zero(field, abp.node(id).type);
    }
  }
  for (std::size_t k = 1; k < ann.layers.size(); ++k) {
    for (const AbpEdge& e : abp.edges()) {
      if (abp.node(e.to).layer != static_cast<int>(k)) continue;
      const Polynomial& from = polys[static_cast<std::size_t>(e.from)];
      if (from.is_zero()) continue;
      Polynomial step = from * e.form.to_polynomial(field);
      Polynomial& slot = polys[static_cast<std::size_t>(e.to)];
      slot = slot + step;
      if (slot.term_count() > limits.max_terms) {
        throw ceiling_error("TermBlowup",
                            node_str(e.to) + " exceeds the term ceiling");
      }
    }
  }
  return polys;
}

std::vector<Polynomial> abp_suffix_polynomials(const Abp& abp,
                                               const Limits& limits) {
  AbpAnnotation ann = validate_abp(abp);
  const PrimeField& field = abp.field();
  std::vector<Polynomial> polys(static_cast<std::size_t>(abp.size()),
                                Polynomial::zero(field, IndexSet()));
  for (int id = 0; id < abp.size(); ++id) {
    polys[static_cast<std::size_t>(id)] =
        Polynomial::zero(field, ann.support - abp.node(id).type);
  }
  polys[static_cast<std::size_t>(ann.sink)] =
      Polynomial::constant(field, field.one());
  for (std::size_t k = ann.layers.size() - 1; k-- > 0;) {
    for (const AbpEdge& e : abp.edges()) {
      if (abp.node(e.from).layer != static_cast<int>(k)) continue;
      const Polynomial& to = polys[static_cast<std::size_t>(e.to)];
      if (to.is_zero()) continue;
      Polynomial step = e.form.to_polynomial(field) * to;
      Polynomial& slot = polys[static_cast<std::size_t>(e.from)];
      slot = slot + step;
      if (slot.term_count() > limits.max_terms) {
        throw ceiling_error("TermBlowup",
                            node_str(e.from) + " exceeds the term ceiling");
      }
    }
  }
  return polys;
}

Polynomial abp_expand(const Abp& abp, const Limits& limits) {
  AbpAnnotation ann = validate_abp(abp);
  return abp_node_polynomials(abp, limits)[static_cast<std::size_t>(ann.sink)];
}

FieldElement abp_evaluate(const Abp& abp, const Assignment& assignment) {
  AbpAnnotation ann = validate_abp(abp);
  const PrimeField& field = abp.field();
  std::vector<FieldElement> value(static_cast<std::size_t>(abp.size()),
                                  field.zero());
  value[static_cast<std::size_t>(ann.source)] = field.one();
  for (std::size_t k = 1; k < ann.layers.size(); ++k) {
    for (const AbpEdge& e : abp.edges()) {
      if (abp.node(e.to).layer != static_cast<int>(k)) continue;
      FieldElement form_value = field.zero();
      for (const auto& [col, c] : e.form.coeffs) {
        Variable v{e.form.bucket, col};
        auto it = assignment.find(v);
        if (it == assignment.end()) {
          throw validation_error("MissingAssignment",
                                 "no value for " + v.to_string());
        }
        form_value = form_value + c * it->second;
      }
      value[static_cast<std::size_t>(e.to)] =
          value[static_cast<std::size_t>(e.to)] +
          value[static_cast<std::size_t>(e.from)] * form_value;
    }
  }
  return value[static_cast<std::size_t>(ann.sink)];
}

int type_width(const Abp& abp, int layer) {
  AbpAnnotation ann = validate_abp(abp);
  if (layer < 0 || layer > ann.degree) {
    throw validation_error("LayerOutOfRange",
                           "layer " + std::to_string(layer) +
                               " outside [0," + std::to_string(ann.degree) +
                               "]");
  }
  return ann.type_width[static_cast<std::size_t>(layer)];
}

bool is_w_narrow(const Abp& abp, int w, int threshold) {
  AbpAnnotation ann = validate_abp(abp);
  int layer = ann.degree - w;
  if (w < 0 || layer < 0) {
    throw validation_error("LayerOutOfRange",
                           "layer d-w = " + std::to_string(layer) +
                               " outside [0," + std::to_string(ann.degree) +
                               "]");
  }
  return ann.type_width[static_cast<std::size_t>(layer)] <= threshold;
}

std::optional<std::vector<int>> detect_roabp(const Abp& abp) {
  AbpAnnotation ann = validate_abp(abp);
  for (int width : ann.type_width) {
    if (width != 1) return std::nullopt;
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(ann.degree));
  IndexSet previous;
  for (std::size_t k = 1; k < ann.layers.size(); ++k) {
    IndexSet current = abp.node(ann.layers[k][0]).type;
    order.push_back((current - previous).min_element());
    previous = current;
  }
  return order;
}

Abp compose_parallel_many(const std::vector<Abp>& parts) {
  if (parts.empty()) {
    throw validation_error("DegreeMismatch", "nothing to compose");
  }
  std::vector<AbpAnnotation> anns;
  anns.reserve(parts.size());
  for (const Abp& part : parts) {
    anns.push_back(validate_abp(part));
    if (part.partition() != parts.front().partition() ||
        part.field() != parts.front().field()) {
      throw validation_error("DegreeMismatch",
                             "parallel composition needs a common partition");
    }
    if (anns.back().support != anns.front().support) {
      throw validation_error("DegreeMismatch",
                             "parallel composition needs equal supports; got " +
                                 anns.front().support.to_string() + " and " +
                                 anns.back().support.to_string());
    }
  }

  Abp out(parts.front().partition(), parts.front().field());
  int degree = anns.front().degree;
  int source = out.add_node(0, IndexSet());
  int sink = degree == 0 ? source : out.add_node(degree, anns.front().support);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Abp& part = parts[p];
    const AbpAnnotation& ann = anns[p];
    std::vector<int> remap(static_cast<std::size_t>(part.size()), -1);
    for (int id = 0; id < part.size(); ++id) {
      if (id == ann.source) {
        remap[static_cast<std::size_t>(id)] = source;
      } else if (id == ann.sink) {
        remap[static_cast<std::size_t>(id)] = sink;
      } else {
        remap[static_cast<std::size_t>(id)] =
            out.add_node(part.node(id).layer, part.node(id).type);
      }
    }
    for (const AbpEdge& e : part.edges()) {
      out.add_edge(remap[static_cast<std::size_t>(e.from)],
                   remap[static_cast<std::size_t>(e.to)], e.form);
    }
  }
  return out;
}

Abp compose_parallel(const Abp& a, const Abp& b) {
  return compose_parallel_many({a, b});
}

Abp compose_series(const Abp& a, const Abp& b) {
  AbpAnnotation ann_a = validate_abp(a);
  AbpAnnotation ann_b = validate_abp(b);
  if (a.partition() != b.partition() || a.field() != b.field()) {
    throw validation_error("DegreeMismatch",
                           "series composition needs a common partition");
  }
  if (!ann_a.support.disjoint_with(ann_b.support)) {
    throw validation_error("SupportOverlap",
                           "series supports overlap on " +
                               (ann_a.support & ann_b.support).to_string());
  }

  Abp out(a.partition(), a.field());
  std::vector<int> remap_a(static_cast<std::size_t>(a.size()), -1);
  for (int id = 0; id < a.size(); ++id) {
    remap_a[static_cast<std::size_t>(id)] =
        out.add_node(a.node(id).layer, a.node(id).type);
  }
  for (const AbpEdge& e : a.edges()) {
    out.add_edge(remap_a[static_cast<std::size_t>(e.from)],
                 remap_a[static_cast<std::size_t>(e.to)], e.form);
  }
  std::vector<int> remap_b(static_cast<std::size_t>(b.size()), -1);
  for (int id = 0; id < b.size(); ++id) {
    if (id == ann_b.source) {
      remap_b[static_cast<std::size_t>(id)] =
          remap_a[static_cast<std::size_t>(ann_a.sink)];
    } else {
      remap_b[static_cast<std::size_t>(id)] =
          out.add_node(ann_a.degree + b.node(id).layer,
                       ann_a.support | b.node(id).type);
    }
  }
  for (const AbpEdge& e : b.edges()) {
    out.add_edge(remap_b[static_cast<std::size_t>(e.from)],
                 remap_b[static_cast<std::size_t>(e.to)], e.form);
  }
  return out;
}

Abp abp_scale(const Abp& abp, FieldElement c) {
  AbpAnnotation ann = validate_abp(abp);
  Abp out(abp.partition(), abp.field());
  for (int id = 0; id < abp.size(); ++id) {
    out.add_node(abp.node(id).layer, abp.node(id).type);
  }
  for (const AbpEdge& e : abp.edges()) {
    LinearForm form = e.form;
    if (e.from == ann.source) {
      for (auto& [col, coeff] : form.coeffs) coeff = coeff * c;
    }
    out.add_edge(e.from, e.to, std::move(form));
  }
  return out;
}

namespace {

// Drops nodes that no longer lie on a source-to-sink path; if no path is
// left, returns a single all-zero chain over the support so the result is
// still a well-formed program computing 0.
Abp prune_abp(const Abp& abp, int source, int sink, IndexSet support) {
  std::vector<bool> forward(static_cast<std::size_t>(abp.size()), false);
  std::vector<bool> backward(static_cast<std::size_t>(abp.size()), false);
  forward[static_cast<std::size_t>(source)] = true;
  // Edges are explored layer by layer; repeated sweeps are fine at this
  // scale and keep the code simple.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const AbpEdge& e : abp.edges()) {
      if (forward[static_cast<std::size_t>(e.from)] &&
          !forward[static_cast<std::size_t>(e.to)]) {
        forward[static_cast<std::size_t>(e.to)] = true;
        changed = true;
      }
    }
  }
  backward[static_cast<std::size_t>(sink)] = true;
  changed = true;
  while (changed) {
    changed = false;
    for (const AbpEdge& e : abp.edges()) {
      if (backward[static_cast<std::size_t>(e.to)] &&
          !backward[static_cast<std::size_t>(e.from)]) {
        backward[static_cast<std::size_t>(e.from)] = true;
        changed = true;
      }
    }
  }

  if (!forward[static_cast<std::size_t>(sink)]) {
    Abp out(abp.partition(), abp.field());
    std::vector<int> buckets = support.elements();
    int prev = out.add_node(0, IndexSet());
    IndexSet acc;
    for (std::size_t k = 0; k < buckets.size(); ++k) {
      acc = acc.with(buckets[k]);
      int next = out.add_node(static_cast<int>(k) + 1, acc);
      out.add_edge(prev, next, LinearForm{buckets[k], {}});
      prev = next;
    }
    return out;
  }

  Abp out(abp.partition(), abp.field());
  std::vector<int> remap(static_cast<std::size_t>(abp.size()), -1);
  for (int id = 0; id < abp.size(); ++id) {
    if (forward[static_cast<std::size_t>(id)] &&
        backward[static_cast<std::size_t>(id)]) {
      remap[static_cast<std::size_t>(id)] =
          out.add_node(abp.node(id).layer, abp.node(id).type);
    }
  }
  for (const AbpEdge& e : abp.edges()) {
    int f = remap[static_cast<std::size_t>(e.from)];
    int t = remap[static_cast<std::size_t>(e.to)];
    if (f >= 0 && t >= 0) out.add_edge(f, t, e.form);
  }
  return out;
}

}  // namespace

Abp substitute_abp(const Abp& abp, const Assignment& partial) {
  AbpAnnotation ann = validate_abp(abp);
  const PrimeField& field = abp.field();
  for (const auto& [v, value] : partial) {
    abp.partition().check_variable(v);
    if (value.prime() != field.prime()) {
      throw validation_error("FieldMismatch",
                             "substituted value for " + v.to_string() +
                                 " uses a different prime");
    }
  }

  IndexSet assigned_buckets;
  for (int b = 1; b <= abp.partition().degree(); ++b) {
    bool full = true;
    for (int j = 1; j <= abp.partition().bucket_size(b); ++j) {
      if (!partial.count(Variable{b, j})) {
        full = false;
        break;
      }
    }
    if (full) assigned_buckets = assigned_buckets.with(b);
  }
  IndexSet new_support = ann.support - assigned_buckets;
  if (new_support.empty() && !ann.support.empty()) {
    throw validation_error("DegreeZero",
                           "substitution assigns every bucket of the support");
  }

  // Split edges into surviving variable-bearing edges and scalar steps.
  struct ScalarEdge {
    int from, to;
    FieldElement weight;
  };
  struct VarEdge {
    int from, to;
    LinearForm form;
  };
  std::vector<ScalarEdge> scalar_edges;
  std::vector<VarEdge> var_edges;
  for (const AbpEdge& e : abp.edges()) {
    FieldElement constant = field.zero();
    LinearForm survivor{e.form.bucket, {}};
    for (const auto& [col, c] : e.form.coeffs) {
      auto it = partial.find(Variable{e.form.bucket, col});
      if (it != partial.end()) {
        constant = constant + c * it->second;
      } else {
        survivor.coeffs.emplace(col, c);
      }
    }
    if (assigned_buckets.contains(e.form.bucket)) {
      scalar_edges.push_back({e.from, e.to, constant});
    } else {
      if (!constant.is_zero()) {
        throw validation_error(
            "AffineSubstitution",
            "partial nonzero assignment to bucket " +
                std::to_string(e.form.bucket) +
                " would make an edge label affine");
      }
      var_edges.push_back({e.from, e.to, std::move(survivor)});
    }
  }

  // Scalar-path weights within each contracted layer, accumulated in old
  // layer order: anc[v] holds (ancestor, weight) for same-new-layer chains.
  std::vector<std::map<int, FieldElement>> anc(
      static_cast<std::size_t>(abp.size()));
  for (int id = 0; id < abp.size(); ++id) {
    anc[static_cast<std::size_t>(id)].emplace(id, field.one());
  }
  for (std::size_t k = 1; k < ann.layers.size(); ++k) {
    for (const ScalarEdge& e : scalar_edges) {
      if (abp.node(e.to).layer != static_cast<int>(k)) continue;
      if (e.weight.is_zero()) continue;
      for (const auto& [w, wt] : anc[static_cast<std::size_t>(e.from)]) {
        auto [it, inserted] =
            anc[static_cast<std::size_t>(e.to)].emplace(w, wt * e.weight);
        if (!inserted) it->second = it->second + wt * e.weight;
      }
    }
  }

  // Nodes that remain addressable: the source plus targets of variable
  // edges (plus the sink, which may be fed purely by scalars).
  std::vector<bool> kept(static_cast<std::size_t>(abp.size()), false);
  kept[static_cast<std::size_t>(ann.source)] = true;
  kept[static_cast<std::size_t>(ann.sink)] = true;
  for (const VarEdge& e : var_edges) {
    kept[static_cast<std::size_t>(e.to)] = true;
  }

  Abp out(abp.partition(), field);
  std::vector<int> remap(static_cast<std::size_t>(abp.size()), -1);
  for (int id = 0; id < abp.size(); ++id) {
    if (!kept[static_cast<std::size_t>(id)]) continue;
    IndexSet type = abp.node(id).type - assigned_buckets;
    remap[static_cast<std::size_t>(id)] = out.add_node(type.count(), type);
  }

  for (const VarEdge& e : var_edges) {
    for (const auto& [w, wt] : anc[static_cast<std::size_t>(e.from)]) {
      if (!kept[static_cast<std::size_t>(w)] || wt.is_zero()) continue;
      LinearForm form{e.form.bucket, {}};
      for (const auto& [col, c] : e.form.coeffs) {
        form.coeffs.emplace(col, c * wt);
      }
      out.add_edge(remap[static_cast<std::size_t>(w)],
                   remap[static_cast<std::size_t>(e.to)], std::move(form));
    }
  }
  // Fold trailing scalar chains into the sink: flow that reaches a kept
  // node v with a scalar path v -> sink is redirected by duplicating v's
  // incoming edges onto the sink, scaled by the chain weight.
  std::vector<AbpEdge> into_kept = out.edges();
  for (const auto& [v, wt] : anc[static_cast<std::size_t>(ann.sink)]) {
    if (v == ann.sink || !kept[static_cast<std::size_t>(v)] || wt.is_zero()) {
      continue;
    }
    int mapped = remap[static_cast<std::size_t>(v)];
    for (const AbpEdge& e : into_kept) {
      if (e.to != mapped) continue;
      LinearForm form = e.form;
      for (auto& [col, c] : form.coeffs) c = c * wt;
      out.add_edge(e.from, remap[static_cast<std::size_t>(ann.sink)],
                   std::move(form));
    }
  }

  return prune_abp(out, remap[static_cast<std::size_t>(ann.source)],
                   remap[static_cast<std::size_t>(ann.sink)], new_support);
}

AbpIntervalCheckResult abp_is_interval_multilinear(
    const Abp& abp, const std::vector<int>& order) {
  validate_abp(abp);
  int d = abp.partition().degree();
  if (static_cast<int>(order.size()) != d) {
    throw validation_error("BadOrder", "ordering must list all " +
                                           std::to_string(d) + " buckets");
  }
  std::vector<int> position(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k < d; ++k) {
    int bucket = order[static_cast<std::size_t>(k)];
    if (bucket < 1 || bucket > d ||
        position[static_cast<std::size_t>(bucket)] != 0) {
      throw validation_error("BadOrder",
                             "ordering is not a permutation of [1.." +
                                 std::to_string(d) + "]");
    }
    position[static_cast<std::size_t>(bucket)] = k + 1;
  }
  for (int id = 0; id < abp.size(); ++id) {
    IndexSet s = abp.node(id).type;
    if (s.empty()) continue;
    int lo = d + 1, hi = 0;
    for (int e : s.elements()) {
      lo = std::min(lo, position[static_cast<std::size_t>(e)]);
      hi = std::max(hi, position[static_cast<std::size_t>(e)]);
    }
    if (hi - lo + 1 != s.count()) return {false, id};
  }
  return {true, std::nullopt};
}

bool abp_is_monotone(const Abp& abp) {
  std::uint64_t p = abp.field().prime();
  bool monotone = true;
  for (const AbpEdge& e : abp.edges()) {
    for (const auto& [col, c] : e.form.coeffs) {
      std::uint64_t v = c.value();
      if (v <= kMonotoneWindow) continue;
      if (p - v <= kMonotoneWindow) {
        monotone = false;
        continue;
      }
      throw validation_error("AmbiguousSign",
                             "edge coefficient " + std::to_string(v) +
                                 " is outside the +-10^6 sign window");
    }
  }
  return monotone;
}

}  // namespace smlt
