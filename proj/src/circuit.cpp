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

#include "smlt/circuit.hpp"

#include <algorithm>

namespace smlt {

namespace {

constexpr std::uint64_t kMonotoneWindow = 1'000'000;

std::string gate_str(int id) { return "gate " + std::to_string(id); }

}  // namespace

void Circuit::check_arg(int arg) const {
  if (arg < 0 || arg >= size()) {
    throw validation_error("CycleDetected",
                           "argument " + std::to_string(arg) +
                               " does not precede its user");
  }
}

int Circuit::add_input(Variable v) {
  partition_.check_variable(v);
  gates_.push_back(Gate{GateKind::kInput, v, FieldElement(), {}});
  return size() - 1;
}

int Circuit::add_constant(FieldElement value) {
  if (value.prime() != field_.prime()) {
    throw validation_error("FieldMismatch",
                           "constant belongs to a different prime field");
  }
  gates_.push_back(Gate{GateKind::kConstant, {0, 0}, value, {}});
  return size() - 1;
}

int Circuit::add_sum(std::vector<int> args) {
  if (args.empty()) {
    throw validation_error("BadGate", "+ gate needs at least one child");
  }
  for (int a : args) check_arg(a);
  gates_.push_back(Gate{GateKind::kAdd, {0, 0}, FieldElement(), std::move(args)});
  return size() - 1;
}

int Circuit::add_product(int left, int right) {
  check_arg(left);
  check_arg(right);
  gates_.push_back(
      Gate{GateKind::kMul, {0, 0}, FieldElement(), {left, right}});
  return size() - 1;
}

CircuitAnnotation validate(const Circuit& circuit, ValidationMode mode) {
  const auto& gates = circuit.gates();
  if (circuit.output() < 0 || circuit.output() >= circuit.size()) {
    throw validation_error("BadGate", "output gate id is out of range");
  }

  CircuitAnnotation ann;
  ann.mode = mode;
  ann.index_set.resize(gates.size());
  ann.syntactic_zero.assign(gates.size(), false);

  for (int id = 0; id < circuit.size(); ++id) {
    const Gate& g = gates[static_cast<std::size_t>(id)];
    auto idx = [&](int child) {
      return ann.index_set[static_cast<std::size_t>(child)];
    };
    auto is_zero = [&](int child) {
      return ann.syntactic_zero[static_cast<std::size_t>(child)];
    };
    for (int a : g.args) {
      if (a < 0 || a >= id) {
        throw validation_error("CycleDetected",
                               gate_str(id) + " references gate " +
                                   std::to_string(a) +
                                   " that does not precede it");
      }
    }
    switch (g.kind) {
      case GateKind::kInput:
        circuit.partition().check_variable(g.var);
        ann.index_set[static_cast<std::size_t>(id)] =
            IndexSet::single(g.var.bucket);
        break;
      case GateKind::kConstant:
        ann.index_set[static_cast<std::size_t>(id)] = IndexSet();
        ann.syntactic_zero[static_cast<std::size_t>(id)] = g.value.is_zero();
        break;
      case GateKind::kAdd: {
        if (g.args.empty()) {
          throw validation_error("BadGate",
                                 gate_str(id) + ": empty + gate");
        }
        bool all_zero = true;
        bool have_type = false;
        IndexSet type;
        for (int a : g.args) {
          if (mode == ValidationMode::kRelaxed && is_zero(a)) continue;
          all_zero = all_zero && is_zero(a);
          if (!have_type) {
            type = idx(a);
            have_type = true;
            continue;
          }
          if (idx(a) != type) {
            bool const_mix = type.empty() != idx(a).empty();
            throw validation_error(
                const_mix ? "ConstInAddWithVariables" : "AddChildMismatch",
                gate_str(id) + ": + children have index sets " +
                    type.to_string() + " and " + idx(a).to_string());
          }
        }
        if (!have_type) {
          // Relaxed mode with every child syntactically zero.
          type = idx(g.args.front());
          all_zero = true;
        }
        ann.index_set[static_cast<std::size_t>(id)] = type;
        ann.syntactic_zero[static_cast<std::size_t>(id)] = all_zero;
        break;
      }
      case GateKind::kMul: {
        if (g.args.size() != 2) {
          throw validation_error("NotFanin2",
                                 gate_str(id) + ": x gate must have fanin 2");
        }
        IndexSet a = idx(g.args[0]);
        IndexSet b = idx(g.args[1]);
        bool zero = is_zero(g.args[0]) || is_zero(g.args[1]);
        if (!a.disjoint_with(b) &&
            !(mode == ValidationMode::kRelaxed && zero)) {
          throw validation_error("MulChildOverlap",
                                 gate_str(id) + ": x children overlap on " +
                                     (a & b).to_string());
        }
        ann.index_set[static_cast<std::size_t>(id)] = a | b;
        ann.syntactic_zero[static_cast<std::size_t>(id)] = zero;
        break;
      }
    }
  }
  return ann;
}

std::vector<Polynomial> expand_all_gates(const Circuit& circuit,
                                         const CircuitAnnotation& annotation,
                                         const Limits& limits) {
  const PrimeField& field = circuit.field();
  std::vector<Polynomial> polys;
  polys.reserve(circuit.gates().size());
  for (int id = 0; id < circuit.size(); ++id) {
    const Gate& g = circuit.gate(id);
    IndexSet type = annotation.index_set[static_cast<std::size_t>(id)];
    if (annotation.syntactic_zero[static_cast<std::size_t>(id)]) {
      polys.push_back(Polynomial::zero(field, type));
      continue;
    }
    switch (g.kind) {
      case GateKind::kInput:
        polys.push_back(Polynomial::variable(field, g.var));
        break;
      case GateKind::kConstant:
        polys.push_back(Polynomial::constant(field, g.value));
        break;
      case GateKind::kAdd: {
        Polynomial acc = Polynomial::zero(field, type);
        for (int a : g.args) {
          if (annotation.syntactic_zero[static_cast<std::size_t>(a)]) continue;
          acc = acc + polys[static_cast<std::size_t>(a)];
        }
        polys.push_back(std::move(acc));
        break;
      }
      case GateKind::kMul: {
        const Polynomial& a = polys[static_cast<std::size_t>(g.args[0])];
        const Polynomial& b = polys[static_cast<std::size_t>(g.args[1])];
        if (a.term_count() != 0 &&
            b.term_count() > limits.max_terms / a.term_count()) {
          throw ceiling_error("TermBlowup",
                              gate_str(id) + " would expand to " +
                                  std::to_string(a.term_count()) + "*" +
                                  std::to_string(b.term_count()) + " terms");
        }
        polys.push_back(a * b);
        break;
      }
    }
    if (polys.back().term_count() > limits.max_terms) {
      throw ceiling_error("TermBlowup",
                          gate_str(id) + " exceeds the term ceiling");
    }
  }
  return polys;
}

Polynomial expand(const Circuit& circuit, const Limits& limits,
                  ValidationMode mode) {
  CircuitAnnotation ann = validate(circuit, mode);
  std::vector<Polynomial> polys = expand_all_gates(circuit, ann, limits);
  return polys[static_cast<std::size_t>(circuit.output())];
}

std::vector<int> find_redundant_gates(const Circuit& circuit,
                                      const Limits& limits,
                                      ValidationMode mode) {
  CircuitAnnotation ann = validate(circuit, mode);
  std::vector<Polynomial> polys = expand_all_gates(circuit, ann, limits);
  std::vector<int> out;
  for (int id = 0; id < circuit.size(); ++id) {
    if (polys[static_cast<std::size_t>(id)].is_zero()) out.push_back(id);
  }
  return out;
}

FieldElement evaluate(const Circuit& circuit, const Assignment& assignment,
                      ValidationMode mode) {
  CircuitAnnotation ann = validate(circuit, mode);
  const PrimeField& field = circuit.field();
  std::vector<std::optional<FieldElement>> value(
      static_cast<std::size_t>(circuit.size()));
  std::optional<Variable> missing;
  auto note_missing = [&](Variable v) {
    if (!missing || v < *missing) missing = v;
  };

  for (int id = 0; id < circuit.size(); ++id) {
    std::size_t i = static_cast<std::size_t>(id);
    if (ann.syntactic_zero[i]) {
      value[i] = field.zero();
      continue;
    }
    const Gate& g = circuit.gate(id);
    switch (g.kind) {
      case GateKind::kInput: {
        auto it = assignment.find(g.var);
        if (it == assignment.end()) {
          note_missing(g.var);
        } else {
          value[i] = it->second;
        }
        break;
      }
      case GateKind::kConstant:
        value[i] = g.value;
        break;
      case GateKind::kAdd: {
        FieldElement acc = field.zero();
        bool ok = true;
        for (int a : g.args) {
          if (ann.syntactic_zero[static_cast<std::size_t>(a)]) continue;
          auto child = value[static_cast<std::size_t>(a)];
          if (!child) {
            ok = false;
            break;
          }
          acc = acc + *child;
        }
        if (ok) value[i] = acc;
        break;
      }
      case GateKind::kMul: {
        auto a = value[static_cast<std::size_t>(g.args[0])];
        auto b = value[static_cast<std::size_t>(g.args[1])];
        if (a && b) value[i] = *a * *b;
        break;
      }
    }
  }
  auto out = value[static_cast<std::size_t>(circuit.output())];
  if (!out) {
    throw validation_error("MissingAssignment",
                           "no value for " +
                               (missing ? missing->to_string()
                                        : std::string("an input")));
  }
  return *out;
}

Circuit substitute(const Circuit& circuit, const Assignment& partial) {
  const PrimeField& field = circuit.field();
  for (const auto& [v, value] : partial) {
    circuit.partition().check_variable(v);
    if (value.prime() != field.prime()) {
      throw validation_error("FieldMismatch",
                             "substituted value for " + v.to_string() +
                                 " uses a different prime");
    }
  }
  IndexSet full_buckets;
  for (int b = 1; b <= circuit.partition().degree(); ++b) {
    bool full = true;
    for (int j = 1; j <= circuit.partition().bucket_size(b); ++j) {
      if (!partial.count(Variable{b, j})) {
        full = false;
        break;
      }
    }
    if (full) full_buckets = full_buckets.with(b);
  }

  Circuit out(circuit.partition(), field);
  std::vector<int> remap(static_cast<std::size_t>(circuit.size()), -1);
  for (int id = 0; id < circuit.size(); ++id) {
    const Gate& g = circuit.gate(id);
    int new_id = -1;
    switch (g.kind) {
      case GateKind::kInput: {
        auto it = partial.find(g.var);
        if (it == partial.end()) {
          new_id = out.add_input(g.var);
        } else if (!full_buckets.contains(g.var.bucket) &&
                   it->second.is_zero()) {
          // Zeroing part of a bucket keeps the bucket in play for the
          // surviving columns; const0 * x keeps the typing exact while
          // computing zero.
          new_id = out.add_product(out.add_constant(field.zero()),
                                   out.add_input(g.var));
        } else {
          new_id = out.add_constant(it->second);
        }
        break;
      }
      case GateKind::kConstant:
        new_id = out.add_constant(g.value);
        break;
      case GateKind::kAdd: {
        std::vector<int> args;
        args.reserve(g.args.size());
        for (int a : g.args) args.push_back(remap[static_cast<std::size_t>(a)]);
        new_id = out.add_sum(std::move(args));
        break;
      }
      case GateKind::kMul:
        new_id = out.add_product(remap[static_cast<std::size_t>(g.args[0])],
                                 remap[static_cast<std::size_t>(g.args[1])]);
        break;
    }
    remap[static_cast<std::size_t>(id)] = new_id;
  }
  out.set_output(remap[static_cast<std::size_t>(circuit.output())]);
  validate(out, ValidationMode::kRelaxed);
  return out;
}

IntervalCheckResult is_interval_multilinear(const Circuit& circuit,
                                            const std::vector<int>& order,
                                            ValidationMode mode) {
  int d = circuit.partition().degree();
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

  CircuitAnnotation ann = validate(circuit, mode);
  for (int id = 0; id < circuit.size(); ++id) {
    IndexSet s = ann.index_set[static_cast<std::size_t>(id)];
    if (s.empty()) continue;
    int lo = d + 1, hi = 0;
    for (int e : s.elements()) {
      lo = std::min(lo, position[static_cast<std::size_t>(e)]);
      hi = std::max(hi, position[static_cast<std::size_t>(e)]);
    }
    if (hi - lo + 1 != s.count()) {
      return {false, id};
    }
  }
  return {true, std::nullopt};
}

bool is_monotone(const Circuit& circuit) {
  std::uint64_t p = circuit.field().prime();
  bool monotone = true;
  for (int id = 0; id < circuit.size(); ++id) {
    const Gate& g = circuit.gate(id);
    if (g.kind != GateKind::kConstant) continue;
    std::uint64_t v = g.value.value();
    if (v <= kMonotoneWindow) continue;
    if (p - v <= kMonotoneWindow) {
      monotone = false;
      continue;
    }
    throw validation_error("AmbiguousSign",
                           gate_str(id) + ": constant " + std::to_string(v) +
                               " is outside the +-10^6 sign window");
  }
  return monotone;
}

std::vector<bool> reachable_from_output(const Circuit& circuit) {
  std::vector<bool> seen(static_cast<std::size_t>(circuit.size()), false);
  std::vector<int> stack{circuit.output()};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (id < 0 || id >= circuit.size() || seen[static_cast<std::size_t>(id)]) {
      continue;
    }
    seen[static_cast<std::size_t>(id)] = true;
    for (int a : circuit.gate(id).args) stack.push_back(a);
  }
  return seen;
}

int circuit_depth(const Circuit& circuit) {
  std::vector<bool> cone = reachable_from_output(circuit);
  std::vector<int> depth(static_cast<std::size_t>(circuit.size()), 0);
  int best = 0;
  for (int id = 0; id < circuit.size(); ++id) {
    if (!cone[static_cast<std::size_t>(id)]) continue;
    const Gate& g = circuit.gate(id);
    int d = 0;
    for (int a : g.args) {
      d = std::max(d, depth[static_cast<std::size_t>(a)] + 1);
    }
    depth[static_cast<std::size_t>(id)] = d;
    best = std::max(best, d);
  }
  return best;
}

Circuit prune_unreachable(const Circuit& circuit) {
  std::vector<bool> keep = reachable_from_output(circuit);
  std::vector<int> remap(static_cast<std::size_t>(circuit.size()), -1);
  Circuit out(circuit.partition(), circuit.field());
  for (int id = 0; id < circuit.size(); ++id) {
    if (!keep[static_cast<std::size_t>(id)]) continue;
    const Gate& g = circuit.gate(id);
    int new_id = -1;
    switch (g.kind) {
      case GateKind::kInput:
        new_id = out.add_input(g.var);
        break;
      case GateKind::kConstant:
        new_id = out.add_constant(g.value);
        break;
      case GateKind::kAdd: {
        std::vector<int> args;
        args.reserve(g.args.size());
        for (int a : g.args) args.push_back(remap[static_cast<std::size_t>(a)]);
        new_id = out.add_sum(std::move(args));
        break;
      }
      case GateKind::kMul:
        new_id = out.add_product(remap[static_cast<std::size_t>(g.args[0])],
                                 remap[static_cast<std::size_t>(g.args[1])]);
        break;
    }
    remap[static_cast<std::size_t>(id)] = new_id;
  }
  out.set_output(remap[static_cast<std::size_t>(circuit.output())]);
  return out;
}

bool is_formula(const Circuit& circuit) {
  std::vector<int> fanout(static_cast<std::size_t>(circuit.size()), 0);
  for (int id = 0; id < circuit.size(); ++id) {
    for (int a : circuit.gate(id).args) {
      ++fanout[static_cast<std::size_t>(a)];
    }
  }
  std::vector<bool> cone = reachable_from_output(circuit);
  for (int id = 0; id < circuit.size(); ++id) {
    if (!cone[static_cast<std::size_t>(id)]) return false;
    if (fanout[static_cast<std::size_t>(id)] > 1) return false;
  }
  return fanout[static_cast<std::size_t>(circuit.output())] == 0;
}

}  // namespace smlt
