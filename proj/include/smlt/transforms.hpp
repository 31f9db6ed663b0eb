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

#ifndef SMLT_TRANSFORMS_HPP
#define SMLT_TRANSFORMS_HPP

#include <optional>
#include <vector>

#include "smlt/abp.hpp"
#include "smlt/circuit.hpp"

namespace smlt {

// Product gates t with deg(t) > m whose children both have degree <= m.
struct GateFrontier {
  int m = 0;
  std::vector<int> gates;  // ascending gate ids
};

GateFrontier gate_frontier(const Circuit& circuit, int m,
                           ValidationMode mode = ValidationMode::kStrict);

// Derivative of the gate-v polynomial by gate w: relabel w with a fresh
// variable y and take the y-linear part.  Returns the zero polynomial over
// I_v \ I_w when w does not occur below v.  Oracle implementation by
// expansion; desk scale only.
Polynomial partial_derivative(const Circuit& circuit, int v, int w,
                              const Limits& limits = {},
                              ValidationMode mode = ValidationMode::kStrict);

// One bottom-up pass computing the derivative by w of every gate at once;
// nullopt marks gates whose subcircuit does not reach w.
std::vector<std::optional<Polynomial>> derivative_pass(
    const Circuit& circuit, const CircuitAnnotation& annotation, int w,
    const Limits& limits = {});

// Lazily filled cache of oracle derivatives for one circuit; useful when
// checking the claims over many tuples.
class DerivativeTable {
 public:
  explicit DerivativeTable(const Circuit& circuit, const Limits& limits = {});
  // nullptr when w does not occur below v.
  const Polynomial* get(int v, int w) const;

 private:
  const Circuit& circuit_;
  CircuitAnnotation annotation_;
  Limits limits_;
  mutable std::vector<std::optional<std::vector<std::optional<Polynomial>>>>
      rows_;
};

// Oracle checks of the two decomposition identities behind the staged
// depth reduction.  Preconditions are reported by name.
bool check_claim1(const Circuit& circuit, int v, int m,
                  const Limits& limits = {},
                  const DerivativeTable* table = nullptr);
bool check_claim2(const Circuit& circuit, int v, int w, int m,
                  const Limits& limits = {},
                  const DerivativeTable* table = nullptr);

struct StageRecord {
  int stage = 0;            // 1-based
  int m = 0;                // frontier threshold 2^(stage-1)
  int frontier_size = 0;    // |G_m| in the input circuit
  int f_targets = 0;        // gate polynomials materialized this stage
  int derivative_targets = 0;
  int gates_added = 0;
  int depth_delta = 0;      // growth of the materialized depth
};

struct StageLedger {
  std::vector<StageRecord> stages;
  int input_size = 0;
  int output_size = 0;   // after pruning to the output cone
  int output_depth = 0;
  int depth_bound = 0;   // 3*ceil(log2 d) + 2
  double size_constant = 0.0;  // output_size / (input_size^3 * ceil(log2 d))
};

struct DepthReduceResult {
  Circuit circuit;
  StageLedger ledger;
};

// Staged depth reduction: the output computes the same polynomial with
// fanin-2 products, unbounded-fanin sums, and depth <= 3*ceil(log2 d) + 2.
// Requires a non-redundant input (RedundantGate otherwise).
DepthReduceResult depth_reduce(const Circuit& circuit,
                               const Limits& limits = {});

// Duplicates shared gates until every gate has fanout one.
Circuit circuit_to_formula(const Circuit& circuit, const Limits& limits = {});

// Bottom-up lowering of a tree-shaped circuit: leaves become two-node
// programs, + gates parallel compositions, x gates series compositions.
Abp formula_to_abp(const Circuit& formula, const Limits& limits = {});

// depth_reduce, then circuit_to_formula, then formula_to_abp.
Abp circuit_to_abp(const Circuit& circuit, const Limits& limits = {});

}  // namespace smlt

#endif  // SMLT_TRANSFORMS_HPP
