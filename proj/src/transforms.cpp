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

#include "smlt/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace smlt {

namespace {

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

// Per-gate reachability: contains[v] marks the gates of the subcircuit
// rooted at v (v included).
std::vector<std::vector<bool>> containment_table(const Circuit& circuit) {
  int n = circuit.size();
  std::vector<std::vector<bool>> contains(
      static_cast<std::size_t>(n),
      std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int v = 0; v < n; ++v) {
    auto& row = contains[static_cast<std::size_t>(v)];
    row[static_cast<std::size_t>(v)] = true;
    for (int a : circuit.gate(v).args) {
      const auto& child = contains[static_cast<std::size_t>(a)];
      for (int i = 0; i <= a; ++i) {
        if (child[static_cast<std::size_t>(i)]) {
          row[static_cast<std::size_t>(i)] = true;
        }
      }
    }
  }
  return contains;
}

void check_term_ceiling(const Polynomial& p, const Limits& limits,
                        const char* where) {
  if (p.term_count() > limits.max_terms) {
    throw ceiling_error("TermBlowup", std::string(where) +
                                          " exceeds the term ceiling");
  }
}

}  // namespace

GateFrontier gate_frontier(const Circuit& circuit, int m,
                           ValidationMode mode) {
  CircuitAnnotation ann = validate(circuit, mode);
  GateFrontier out;
  out.m = m;
  for (int id = 0; id < circuit.size(); ++id) {
    const Gate& g = circuit.gate(id);
    if (g.kind != GateKind::kMul) continue;
    if (ann.degree_of(id) <= m) continue;
    if (ann.degree_of(g.args[0]) <= m && ann.degree_of(g.args[1]) <= m) {
      out.gates.push_back(id);
    }
  }
  return out;
}

std::vector<std::optional<Polynomial>> derivative_pass(
    const Circuit& circuit, const CircuitAnnotation& ann, int w,
    const Limits& limits) {
  const PrimeField& field = circuit.field();
  int n = circuit.size();
  std::vector<std::optional<Polynomial>> linear(static_cast<std::size_t>(n));
  std::vector<Polynomial> plain;
  plain.reserve(static_cast<std::size_t>(n));

  for (int id = 0; id < n; ++id) {
    std::size_t i = static_cast<std::size_t>(id);
    IndexSet type = ann.index_set[i];
    if (id == w) {
      linear[i] = Polynomial::constant(field, field.one());
      plain.push_back(Polynomial::zero(field, type));
      continue;
    }
    if (ann.syntactic_zero[i]) {
      plain.push_back(Polynomial::zero(field, type));
      continue;
    }
    const Gate& g = circuit.gate(id);
    switch (g.kind) {
      case GateKind::kInput:
        plain.push_back(Polynomial::variable(field, g.var));
        break;
      case GateKind::kConstant:
        plain.push_back(Polynomial::constant(field, g.value));
        break;
      case GateKind::kAdd: {
        Polynomial acc = Polynomial::zero(field, type);
        std::optional<Polynomial> lin;
        for (int a : g.args) {
          std::size_t ai = static_cast<std::size_t>(a);
          if (ann.syntactic_zero[ai] && a != w) continue;
          acc = acc + plain[ai];
          if (linear[ai]) {
            lin = lin ? (*lin + *linear[ai]) : *linear[ai];
          }
        }
        plain.push_back(std::move(acc));
        linear[i] = std::move(lin);
        break;
      }
      case GateKind::kMul: {
        std::size_t a = static_cast<std::size_t>(g.args[0]);
        std::size_t b = static_cast<std::size_t>(g.args[1]);
        plain.push_back(plain[a] * plain[b]);
        std::optional<Polynomial> lin;
        if (linear[a]) lin = *linear[a] * plain[b];
        if (linear[b]) {
          Polynomial t = plain[a] * *linear[b];
          lin = lin ? (*lin + t) : t;
        }
        if (linear[a] && linear[b]) {
          // A y^2 term can only arise when the derivative gate has an empty
          // index set and is shared by both factors.
          if (!(*linear[a] * *linear[b]).is_zero()) {
            throw validation_error(
                "NonlinearDerivative",
                "gate " + std::to_string(id) +
                    " is quadratic in the derivative variable");
          }
        }
        linear[i] = std::move(lin);
        break;
      }
    }
    check_term_ceiling(plain.back(), limits, "derivative pass");
    if (linear[i]) check_term_ceiling(*linear[i], limits, "derivative pass");
  }
  return linear;
}

DerivativeTable::DerivativeTable(const Circuit& circuit, const Limits& limits)
    : circuit_(circuit),
      annotation_(validate(circuit)),
      limits_(limits),
      rows_(static_cast<std::size_t>(circuit.size())) {}

const Polynomial* DerivativeTable::get(int v, int w) const {
  std::size_t wi = static_cast<std::size_t>(w);
  if (!rows_[wi]) {
    rows_[wi] = derivative_pass(circuit_, annotation_, w, limits_);
  }
  const auto& entry = (*rows_[wi])[static_cast<std::size_t>(v)];
  return entry ? &*entry : nullptr;
}

Polynomial partial_derivative(const Circuit& circuit, int v, int w,
                              const Limits& limits, ValidationMode mode) {
  if (v < 0 || v >= circuit.size() || w < 0 || w >= circuit.size()) {
    throw validation_error("GateNotFound",
                           "no such gate pair (" + std::to_string(v) + "," +
                               std::to_string(w) + ")");
  }
  CircuitAnnotation ann = validate(circuit, mode);
  auto linear = derivative_pass(circuit, ann, w, limits);
  std::size_t vi = static_cast<std::size_t>(v);
  if (linear[vi]) return *linear[vi];
  return Polynomial::zero(circuit.field(),
                          ann.index_set[vi] -
                              ann.index_set[static_cast<std::size_t>(w)]);
}

bool check_claim1(const Circuit& circuit, int v, int m, const Limits& limits,
                  const DerivativeTable* table) {
  if (v < 0 || v >= circuit.size()) {
    throw validation_error("GateNotFound", "gate " + std::to_string(v));
  }
  CircuitAnnotation ann = validate(circuit);
  int deg_v = ann.degree_of(v);
  if (!(m < deg_v)) {
    throw validation_error("PreconditionViolated",
                           "claim 1 needs m < deg(v): " + std::to_string(m) +
                               " < " + std::to_string(deg_v));
  }
  if (!(deg_v <= 2 * m)) {
    throw validation_error("PreconditionViolated",
                           "claim 1 needs deg(v) <= 2m: " +
                               std::to_string(deg_v) +
                               " <= " + std::to_string(2 * m));
  }

  std::optional<DerivativeTable> local;
  if (table == nullptr) {
    local.emplace(circuit, limits);
    table = &*local;
  }
  std::vector<Polynomial> polys = expand_all_gates(circuit, ann, limits);
  auto contains = containment_table(circuit);
  GateFrontier frontier = gate_frontier(circuit, m);

  std::size_t vi = static_cast<std::size_t>(v);
  Polynomial sum = Polynomial::zero(circuit.field(), ann.index_set[vi]);
  for (int t : frontier.gates) {
    if (!contains[vi][static_cast<std::size_t>(t)]) continue;
    const Polynomial* dt = table->get(v, t);
    if (dt == nullptr || dt->is_zero()) continue;
    if (polys[static_cast<std::size_t>(t)].is_zero()) continue;
    sum = sum + polys[static_cast<std::size_t>(t)] * *dt;
  }
  return sum == polys[vi];
}

bool check_claim2(const Circuit& circuit, int v, int w, int m,
                  const Limits& limits, const DerivativeTable* table) {
  if (v < 0 || v >= circuit.size() || w < 0 || w >= circuit.size()) {
    throw validation_error("GateNotFound", "bad gate pair");
  }
  CircuitAnnotation ann = validate(circuit);
  int deg_v = ann.degree_of(v);
  int deg_w = ann.degree_of(w);
  if (!(0 < deg_w)) {
    throw validation_error("PreconditionViolated",
                           "claim 2 needs 0 < deg(w)");
  }
  if (!(deg_w <= m)) {
    throw validation_error("PreconditionViolated",
                           "claim 2 needs deg(w) <= m: " +
                               std::to_string(deg_w) +
                               " <= " + std::to_string(m));
  }
  if (!(m < deg_v)) {
    throw validation_error("PreconditionViolated",
                           "claim 2 needs m < deg(v): " + std::to_string(m) +
                               " < " + std::to_string(deg_v));
  }
  if (!(deg_v < 2 * deg_w)) {
    throw validation_error("PreconditionViolated",
                           "claim 2 needs deg(v) < 2 deg(w): " +
                               std::to_string(deg_v) + " < " +
                               std::to_string(2 * deg_w));
  }

  std::optional<DerivativeTable> local;
  if (table == nullptr) {
    local.emplace(circuit, limits);
    table = &*local;
  }
  auto contains = containment_table(circuit);
  GateFrontier frontier = gate_frontier(circuit, m);

  std::size_t vi = static_cast<std::size_t>(v);
  IndexSet result_type =
      ann.index_set[vi] - ann.index_set[static_cast<std::size_t>(w)];
  Polynomial sum = Polynomial::zero(circuit.field(), result_type);
  for (int t : frontier.gates) {
    std::size_t ti = static_cast<std::size_t>(t);
    if (!contains[vi][ti]) continue;
    const Polynomial* dwt = table->get(t, w);
    if (dwt == nullptr || dwt->is_zero()) continue;
    const Polynomial* dtv = table->get(v, t);
    if (dtv == nullptr || dtv->is_zero()) continue;
    sum = sum + *dwt * *dtv;
  }
  const Polynomial* expected = table->get(v, w);
  if (expected == nullptr) return sum.is_zero();
  return sum == *expected;
}

namespace {

// Gate builder with hash-consing so repeated subterms of the staged
// construction are shared, plus constant-folding of trivial products and
// single-child sums.  Tracks per-gate depth as gates are created.
class ConsBuilder {
 public:
  ConsBuilder(VariablePartition partition, PrimeField field)
      : circuit_(std::move(partition), field), field_(field) {}

  int input(Variable v) {
    auto it = inputs_.find(v);
    if (it != inputs_.end()) return it->second;
    int id = circuit_.add_input(v);
    depth_.push_back(0);
    inputs_.emplace(v, id);
    return id;
  }

  int constant(FieldElement c) {
    auto it = constants_.find(c.value());
    if (it != constants_.end()) return it->second;
    int id = circuit_.add_constant(c);
    depth_.push_back(0);
    constants_.emplace(c.value(), id);
    return id;
  }

  int sum(std::vector<int> args) {
    if (args.size() == 1) return args[0];
    std::sort(args.begin(), args.end());
    auto it = sums_.find(args);
    if (it != sums_.end()) return it->second;
    int d = 0;
    for (int a : args) d = std::max(d, depth_at(a) + 1);
    int id = circuit_.add_sum(args);
    depth_.push_back(d);
    sums_.emplace(std::move(args), id);
    return id;
  }

  int product(int a, int b) {
    if (is_one(a)) return b;
    if (is_one(b)) return a;
    std::pair<int, int> key = std::minmax(a, b);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    int id = circuit_.add_product(a, b);
    depth_.push_back(std::max(depth_at(a), depth_at(b)) + 1);
    products_.emplace(key, id);
    return id;
  }

  // Materializes a degree <= 1 polynomial: a constant gate, or a sum of
  // (coefficient x variable) products.
  int polynomial(const Polynomial& p) {
    if (p.index_set().empty()) {
      return constant(p.coefficient(Monomial::unit()));
    }
    std::vector<int> parts;
    for (const auto& [m, c] : p.terms()) {
      int leaf = input(m.variables().front());
      parts.push_back(c.is_one() ? leaf : product(constant(c), leaf));
    }
    if (parts.empty()) return constant(field_.zero());
    return sum(std::move(parts));
  }

  int size() const { return circuit_.size(); }
  int max_depth() const {
    int d = 0;
    for (int x : depth_) d = std::max(d, x);
    return d;
  }
  Circuit take(int output) {
    circuit_.set_output(output);
    return std::move(circuit_);
  }

 private:
  bool is_one(int id) const {
    const Gate& g = circuit_.gate(id);
    return g.kind == GateKind::kConstant && g.value.is_one();
  }
  int depth_at(int id) const { return depth_[static_cast<std::size_t>(id)]; }

  Circuit circuit_;
  PrimeField field_;
  std::vector<int> depth_;
  std::map<Variable, int> inputs_;
  std::map<std::uint64_t, int> constants_;
  std::map<std::vector<int>, int> sums_;
  std::map<std::pair<int, int>, int> products_;
};

}  // namespace

DepthReduceResult depth_reduce(const Circuit& circuit, const Limits& limits) {
  CircuitAnnotation ann = validate(circuit);
  const PrimeField& field = circuit.field();
  std::vector<Polynomial> polys = expand_all_gates(circuit, ann, limits);
  for (int id = 0; id < circuit.size(); ++id) {
    if (polys[static_cast<std::size_t>(id)].is_zero()) {
      throw validation_error("RedundantGate",
                             "gate " + std::to_string(id) +
                                 " computes the zero polynomial");
    }
  }

  auto contains = containment_table(circuit);
  auto deg = [&](int g) { return ann.degree_of(g); };

  int max_degree = 0;
  for (int id = 0; id < circuit.size(); ++id) {
    max_degree = std::max(max_degree, deg(id));
  }
  int num_stages = ceil_log2(std::max(1, max_degree));

  // Admissible derivative pairs (v, w): w occurs below v, deg(w) >= 1 and
  // deg(v) < 2 deg(w).  Pairs with deg(v) - deg(w) <= 1 are base cases.
  std::vector<std::pair<int, int>> base_pairs;
  std::vector<std::vector<std::pair<int, int>>> stage_pairs(
      static_cast<std::size_t>(num_stages) + 1);
  for (int v = 0; v < circuit.size(); ++v) {
    for (int w = 0; w < circuit.size(); ++w) {
      if (!contains[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
        continue;
      if (deg(w) < 1 || deg(v) >= 2 * deg(w)) continue;
      int delta = deg(v) - deg(w);
      if (delta <= 1) {
        base_pairs.emplace_back(v, w);
      } else {
        stage_pairs[static_cast<std::size_t>(ceil_log2(delta))].emplace_back(
            v, w);
      }
    }
  }

  ConsBuilder builder(circuit.partition(), field);
  std::vector<int> f_gate(static_cast<std::size_t>(circuit.size()), -1);
  // Derivative targets: gate id, or nullopt for an identically-empty sum
  // (terms referencing it are dropped rather than materialized as zeros).
  std::map<std::pair<int, int>, std::optional<int>> d_gate;

  StageLedger ledger;
  ledger.input_size = circuit.size();

  // Base: gate polynomials of degree <= 1 are constants or linear forms.
  int base_f = 0;
  for (int v = 0; v < circuit.size(); ++v) {
    if (deg(v) <= 1) {
      f_gate[static_cast<std::size_t>(v)] =
          builder.polynomial(polys[static_cast<std::size_t>(v)]);
      ++base_f;
    }
  }
  // Base: derivative pairs with degree gap <= 1, from one oracle pass per
  // derivative gate.
  {
    std::vector<bool> needed(static_cast<std::size_t>(circuit.size()), false);
    for (auto [v, w] : base_pairs) {
      (void)v;
      needed[static_cast<std::size_t>(w)] = true;
    }
    for (int w = 0; w < circuit.size(); ++w) {
      if (!needed[static_cast<std::size_t>(w)]) continue;
      auto dw = derivative_pass(circuit, ann, w, limits);
      for (auto [v, w2] : base_pairs) {
        if (w2 != w) continue;
        std::size_t vi = static_cast<std::size_t>(v);
        if (!dw[vi] || dw[vi]->is_zero()) {
          d_gate[{v, w}] = std::nullopt;
        } else {
          d_gate[{v, w}] = builder.polynomial(*dw[vi]);
        }
      }
    }
  }
  ledger.stages.push_back(StageRecord{0, 0, 0, base_f,
                                      static_cast<int>(base_pairs.size()),
                                      builder.size(), builder.max_depth()});

  for (int stage = 1; stage <= num_stages; ++stage) {
    int m = 1 << (stage - 1);
    int gates_before = builder.size();
    int depth_before = builder.max_depth();
    GateFrontier frontier = gate_frontier(circuit, m);
    StageRecord record;
    record.stage = stage;
    record.m = m;
    record.frontier_size = static_cast<int>(frontier.gates.size());

    // Part one: f_v = sum_t f_{t1} f_{t2} d_t f_v over the frontier gates
    // below v, for every v with m < deg(v) <= 2m.
    for (int v = 0; v < circuit.size(); ++v) {
      if (!(deg(v) > m && deg(v) <= 2 * m)) continue;
      std::vector<int> terms;
      for (int t : frontier.gates) {
        if (!contains[static_cast<std::size_t>(v)]
                     [static_cast<std::size_t>(t)])
          continue;
        const Gate& tg = circuit.gate(t);
        int pair_gate = builder.product(
            f_gate[static_cast<std::size_t>(tg.args[0])],
            f_gate[static_cast<std::size_t>(tg.args[1])]);
        if (t == v) {
          terms.push_back(pair_gate);
          continue;
        }
        auto dt = d_gate.find({v, t});
        if (dt == d_gate.end()) {
          throw validation_error("InternalError",
                                 "stage " + std::to_string(stage) +
                                     " missing derivative (" +
                                     std::to_string(v) + "," +
                                     std::to_string(t) + ")");
        }
        if (!dt->second) continue;
        terms.push_back(builder.product(pair_gate, *dt->second));
      }
      if (terms.empty()) {
        throw validation_error("RedundantGate",
                               "no frontier decomposition for gate " +
                                   std::to_string(v));
      }
      f_gate[static_cast<std::size_t>(v)] = builder.sum(std::move(terms));
      ++record.f_targets;
    }

    // Part two: d_w f_v = sum_t f_{t2} d_w f_{t1} d_t f_v with
    // m' = 2^(stage-1) + deg(w).  When f_{t2} is itself a part-one target
    // of this stage, its frontier decomposition is distributed into the
    // sum so every term stays two product levels deep.
    for (auto [v, w] : stage_pairs[static_cast<std::size_t>(stage)]) {
      int mw = m + deg(w);
      std::vector<int> terms;
      for (int t = 0; t < circuit.size(); ++t) {
        if (!contains[static_cast<std::size_t>(v)]
                     [static_cast<std::size_t>(t)])
          continue;
        const Gate& tg = circuit.gate(t);
        if (tg.kind != GateKind::kMul || deg(t) <= mw) continue;
        int c1 = tg.args[0], c2 = tg.args[1];
        if (deg(c1) > mw || deg(c2) > mw) continue;
        // Heavier child first; ties keep the left child.
        int heavy = deg(c1) >= deg(c2) ? c1 : c2;
        int light = heavy == c1 ? c2 : c1;
        if (!contains[static_cast<std::size_t>(heavy)]
                     [static_cast<std::size_t>(w)])
          continue;
        std::optional<int> d_heavy =
            heavy == w ? std::optional<int>(builder.constant(field.one()))
                       : d_gate.at({heavy, w});
        if (!d_heavy) continue;
        std::optional<int> d_tv =
            t == v ? std::optional<int>(builder.constant(field.one()))
                   : d_gate.at({v, t});
        if (!d_tv) continue;
        int tail = builder.product(*d_heavy, *d_tv);
        if (deg(light) <= m) {
          terms.push_back(
              builder.product(f_gate[static_cast<std::size_t>(light)], tail));
        } else {
          // deg(light) is in (m, 2m]; reuse its part-one decomposition.
          bool any = false;
          for (int tt : frontier.gates) {
            if (!contains[static_cast<std::size_t>(light)]
                         [static_cast<std::size_t>(tt)])
              continue;
            const Gate& ttg = circuit.gate(tt);
            int pair_gate = builder.product(
                f_gate[static_cast<std::size_t>(ttg.args[0])],
                f_gate[static_cast<std::size_t>(ttg.args[1])]);
            int piece;
            if (tt == light) {
              piece = pair_gate;
            } else {
              auto dtt = d_gate.at({light, tt});
              if (!dtt) continue;
              piece = builder.product(pair_gate, *dtt);
            }
            terms.push_back(builder.product(piece, tail));
            any = true;
          }
          if (!any) {
            throw validation_error("RedundantGate",
                                   "no frontier decomposition for gate " +
                                       std::to_string(light));
          }
        }
      }
      d_gate[{v, w}] = terms.empty()
                           ? std::optional<int>()
                           : std::optional<int>(builder.sum(std::move(terms)));
      ++record.derivative_targets;
    }

    record.gates_added = builder.size() - gates_before;
    record.depth_delta = builder.max_depth() - depth_before;
    ledger.stages.push_back(record);
  }

  int out_gate = f_gate[static_cast<std::size_t>(circuit.output())];
  Circuit reduced = prune_unreachable(builder.take(out_gate));

  int d = ann.degree_of(circuit.output());
  int k = ceil_log2(std::max(1, d));
  ledger.output_size = reduced.size();
  ledger.output_depth = circuit_depth(reduced);
  ledger.depth_bound = 3 * k + 2;
  if (k > 0) {
    double s = static_cast<double>(circuit.size());
    ledger.size_constant =
        static_cast<double>(reduced.size()) / (s * s * s * k);
  }
  return DepthReduceResult{std::move(reduced), std::move(ledger)};
}

Circuit circuit_to_formula(const Circuit& circuit, const Limits& limits) {
  validate(circuit, ValidationMode::kRelaxed);
  Circuit out(circuit.partition(), circuit.field());

  // Iterative post-order duplication; a recursion would be fine at the
  // depths involved but an explicit stack keeps the ceiling check simple.
  struct Frame {
    int gate;
    std::size_t next_child = 0;
    std::vector<int> copied;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{circuit.output(), 0, {}});
  int result = -1;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const Gate& g = circuit.gate(frame.gate);
    if (frame.next_child < g.args.size()) {
      int child = g.args[frame.next_child];
      stack.push_back(Frame{child, 0, {}});
      continue;
    }
    int id = -1;
    switch (g.kind) {
      case GateKind::kInput:
        id = out.add_input(g.var);
        break;
      case GateKind::kConstant:
        id = out.add_constant(g.value);
        break;
      case GateKind::kAdd:
        id = out.add_sum(frame.copied);
        break;
      case GateKind::kMul:
        id = out.add_product(frame.copied[0], frame.copied[1]);
        break;
    }
    if (out.size() > static_cast<int>(limits.max_gates)) {
      throw ceiling_error("SizeCeilingExceeded",
                          "formula duplication passed " +
                              std::to_string(limits.max_gates) + " gates");
    }
    stack.pop_back();
    if (stack.empty()) {
      result = id;
    } else {
      stack.back().copied.push_back(id);
      ++stack.back().next_child;
    }
  }
  out.set_output(result);
  return out;
}

namespace {

FieldElement constant_subtree_value(const Circuit& circuit, int root) {
  // Degree-0 subtrees contain only constants, sums and products of them.
  const Gate& g = circuit.gate(root);
  switch (g.kind) {
    case GateKind::kConstant:
      return g.value;
    case GateKind::kAdd: {
      FieldElement acc = circuit.field().zero();
      for (int a : g.args) acc = acc + constant_subtree_value(circuit, a);
      return acc;
    }
    case GateKind::kMul:
      return constant_subtree_value(circuit, g.args[0]) *
             constant_subtree_value(circuit, g.args[1]);
    case GateKind::kInput:
      break;
  }
  throw validation_error("InternalError", "variable in a degree-0 subtree");
}

Abp formula_gate_to_abp(const Circuit& formula, const CircuitAnnotation& ann,
                        int root, const Limits& limits) {
  const Gate& g = formula.gate(root);
  switch (g.kind) {
    case GateKind::kInput: {
      Abp leaf(formula.partition(), formula.field());
      int source = leaf.add_node(0, IndexSet());
      int sink = leaf.add_node(1, IndexSet::single(g.var.bucket));
      leaf.add_edge(source, sink,
                    LinearForm{g.var.bucket,
                               {{g.var.column, formula.field().one()}}});
      return leaf;
    }
    case GateKind::kAdd: {
      std::vector<Abp> parts;
      parts.reserve(g.args.size());
      for (int a : g.args) {
        parts.push_back(formula_gate_to_abp(formula, ann, a, limits));
      }
      return compose_parallel_many(parts);
    }
    case GateKind::kMul: {
      int left = g.args[0], right = g.args[1];
      if (ann.degree_of(left) == 0) {
        return abp_scale(formula_gate_to_abp(formula, ann, right, limits),
                         constant_subtree_value(formula, left));
      }
      if (ann.degree_of(right) == 0) {
        return abp_scale(formula_gate_to_abp(formula, ann, left, limits),
                         constant_subtree_value(formula, right));
      }
      return compose_series(formula_gate_to_abp(formula, ann, left, limits),
                            formula_gate_to_abp(formula, ann, right, limits));
    }
    case GateKind::kConstant:
      break;
  }
  throw validation_error("DegreeZero",
                         "gate " + std::to_string(root) +
                             " has degree 0 and no variable context");
}

}  // namespace

Abp formula_to_abp(const Circuit& formula, const Limits& limits) {
  if (!is_formula(formula)) {
    throw validation_error("NotAFormula",
                           "input circuit has a gate with fanout > 1");
  }
  CircuitAnnotation ann = validate(formula);
  if (ann.degree_of(formula.output()) == 0) {
    throw validation_error("DegreeZero",
                           "cannot lower a degree-0 formula to a program");
  }
  return formula_gate_to_abp(formula, ann, formula.output(), limits);
}

Abp circuit_to_abp(const Circuit& circuit, const Limits& limits) {
  CircuitAnnotation ann = validate(circuit);
  if (ann.degree_of(circuit.output()) == 0) {
    throw validation_error("DegreeZero",
                           "cannot lower a degree-0 circuit to a program");
  }
  DepthReduceResult reduced = depth_reduce(circuit, limits);
  Circuit formula = circuit_to_formula(reduced.circuit, limits);
  return formula_to_abp(formula, limits);
}

}  // namespace smlt
