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

#ifndef SMLT_CIRCUIT_HPP
#define SMLT_CIRCUIT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "smlt/limits.hpp"
#include "smlt/polynomial.hpp"

namespace smlt {

enum class GateKind { kInput, kConstant, kAdd, kMul };

struct Gate {
  GateKind kind;
  Variable var{0, 0};        // kInput
  FieldElement value;        // kConstant
  std::vector<int> args;     // kAdd (>= 1), kMul (exactly 2)
};

// Set-multilinear circuit DAG.  Gate ids are dense and every argument
// precedes its user, so the stored order is a topological order.
class Circuit {
 public:
  Circuit(VariablePartition partition, PrimeField field)
      : partition_(std::move(partition)), field_(field) {}

  int add_input(Variable v);
  int add_constant(FieldElement value);
  int add_sum(std::vector<int> args);
  int add_product(int left, int right);
  void set_output(int gate) { output_ = gate; }

  const VariablePartition& partition() const { return partition_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(int id) const { return gates_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(gates_.size()); }
  int output() const { return output_; }

 private:
  void check_arg(int arg) const;

  VariablePartition partition_;
  PrimeField field_;
  std::vector<Gate> gates_;
  int output_ = -1;
};

// Strict mode enforces the textbook set-multilinear typing discipline.
// Relaxed mode is for circuits produced by substitution or gate-zeroing
// edits: gates that are syntactically zero are skipped when typing + gates,
// so collapsed buckets and zeroed branches do not produce spurious errors.
enum class ValidationMode { kStrict, kRelaxed };

struct CircuitAnnotation {
  ValidationMode mode = ValidationMode::kStrict;
  std::vector<IndexSet> index_set;    // per gate
  std::vector<bool> syntactic_zero;   // per gate

  int degree_of(int gate) const {
    return index_set[static_cast<std::size_t>(gate)].count();
  }
};

// Checks the typing rules and returns the unique per-gate index-set
// annotation.  Throws AddChildMismatch / MulChildOverlap / CycleDetected /
// ConstInAddWithVariables on violation.
CircuitAnnotation validate(const Circuit& circuit,
                           ValidationMode mode = ValidationMode::kStrict);

// Bottom-up exact expansion of every gate; the brute-force oracle.
std::vector<Polynomial> expand_all_gates(const Circuit& circuit,
                                         const CircuitAnnotation& annotation,
                                         const Limits& limits = {});
Polynomial expand(const Circuit& circuit, const Limits& limits = {},
                  ValidationMode mode = ValidationMode::kStrict);

// Gates whose polynomial is identically zero (oracle-checked, desk scale).
std::vector<int> find_redundant_gates(const Circuit& circuit,
                                      const Limits& limits = {},
                                      ValidationMode mode = ValidationMode::kStrict);

FieldElement evaluate(const Circuit& circuit, const Assignment& assignment,
                      ValidationMode mode = ValidationMode::kStrict);

// Replaces assigned input gates by constants.  The result is validated in
// relaxed mode: fully assigned buckets vanish from index sets and branches
// killed by zero substitutions are skipped.
Circuit substitute(const Circuit& circuit, const Assignment& partial);

struct IntervalCheckResult {
  bool interval_multilinear;
  std::optional<int> violating_gate;
};

// True iff every gate's index set is a contiguous window of the ordering.
// `order` lists buckets, i.e. order[k-1] = sigma(k).
IntervalCheckResult is_interval_multilinear(
    const Circuit& circuit, const std::vector<int>& order,
    ValidationMode mode = ValidationMode::kStrict);

// Monotonicity judged on canonical integer lifts: values in [0, C] are
// non-negative, values in [p-C, p) are negative, anything else is rejected
// as AmbiguousSign.  C = 10^6.
bool is_monotone(const Circuit& circuit);

// Longest input-to-output path within the output cone; inputs/constants
// have depth 0.
int circuit_depth(const Circuit& circuit);

// Gates reachable from the output, as a boolean mask.
std::vector<bool> reachable_from_output(const Circuit& circuit);

// Copy with unreachable gates dropped (ids remapped, order preserved).
Circuit prune_unreachable(const Circuit& circuit);

// True iff every gate has fanout <= 1, i.e. the circuit is a formula.
bool is_formula(const Circuit& circuit);

}  // namespace smlt

#endif  // SMLT_CIRCUIT_HPP
