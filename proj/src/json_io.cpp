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

#include "smlt/json_io.hpp"

#include <set>

namespace smlt {

namespace {

[[noreturn]] void schema_error(const std::string& message) {
  throw io_error("SchemaError", message);
}

void expect_keys(const Json& j, const std::set<std::string>& required,
                 const std::set<std::string>& optional,
                 const std::string& where) {
  if (!j.is_object()) schema_error(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key) && key != "kind" &&
        key != "meta") {
      schema_error(where + ": unknown field '" + key + "'");
    }
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) {
      schema_error(where + ": missing field '" + key + "'");
    }
  }
}

int get_int(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    schema_error(where + ": '" + key + "' must be an integer");
  }
  return j[key].get<int>();
}

void check_version(const Json& j, const std::string& where) {
  if (get_int(j, "version", where) != 1) {
    schema_error(where + ": unsupported version");
  }
}

VariablePartition partition_from_json(const Json& j,
                                      const std::string& where) {
  int d = get_int(j, "d", where);
  if (!j.contains("bucket_sizes") || !j["bucket_sizes"].is_array()) {
    schema_error(where + ": 'bucket_sizes' must be an array");
  }
  std::vector<int> sizes;
  for (const Json& s : j["bucket_sizes"]) {
    if (!s.is_number_integer()) {
      schema_error(where + ": bucket sizes must be integers");
    }
    sizes.push_back(s.get<int>());
  }
  if (static_cast<int>(sizes.size()) != d) {
    schema_error(where + ": 'd' disagrees with |bucket_sizes|");
  }
  return VariablePartition(std::move(sizes));
}

Json partition_to_json(const VariablePartition& partition) {
  Json j;
  j["version"] = 1;
  j["d"] = partition.degree();
  j["bucket_sizes"] = partition.bucket_sizes();
  return j;
}

FieldElement value_from_json(const Json& j, PrimeField field,
                             const std::string& where) {
  if (!j.is_string()) {
    schema_error(where + ": field constants must be decimal strings");
  }
  return field.parse(j.get<std::string>());
}

Variable variable_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    schema_error(where + ": a variable is a [bucket, column] pair");
  }
  return Variable{j[0].get<int>(), j[1].get<int>()};
}

Json index_set_to_json(IndexSet s) { return Json(s.elements()); }

IndexSet index_set_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + ": index set must be an array");
  std::vector<int> elements;
  for (const Json& e : j) {
    if (!e.is_number_integer()) {
      schema_error(where + ": index set entries must be integers");
    }
    elements.push_back(e.get<int>());
  }
  return IndexSet::from_elements(elements);
}

}  // namespace

Json circuit_to_json(const Circuit& circuit) {
  Json j = partition_to_json(circuit.partition());
  j["kind"] = "circuit";
  Json gates = Json::array();
  for (int id = 0; id < circuit.size(); ++id) {
    const Gate& g = circuit.gate(id);
    Json gate;
    gate["id"] = id;
    switch (g.kind) {
      case GateKind::kInput:
        gate["op"] = "input";
        gate["var"] = {g.var.bucket, g.var.column};
        break;
      case GateKind::kConstant:
        gate["op"] = "const";
        gate["value"] = g.value.to_decimal();
        break;
      case GateKind::kAdd:
        gate["op"] = "add";
        gate["args"] = g.args;
        break;
      case GateKind::kMul:
        gate["op"] = "mul";
        gate["args"] = g.args;
        break;
    }
    gates.push_back(std::move(gate));
  }
  j["gates"] = std::move(gates);
  j["output"] = circuit.output();
  return j;
}

Circuit circuit_from_json(const Json& j, PrimeField field) {
  expect_keys(j, {"version", "d", "bucket_sizes", "gates", "output"}, {},
              "circuit");
  check_version(j, "circuit");
  Circuit circuit(partition_from_json(j, "circuit"), field);
  if (!j["gates"].is_array()) schema_error("circuit: 'gates' must be an array");
  int next_id = 0;
  for (const Json& gate : j["gates"]) {
    expect_keys(gate, {"id", "op"}, {"var", "value", "args"}, "gate");
    if (get_int(gate, "id", "gate") != next_id) {
      schema_error("circuit: gate ids must be dense and ascending");
    }
    ++next_id;
    if (!gate["op"].is_string()) schema_error("gate: 'op' must be a string");
    std::string op = gate["op"].get<std::string>();
    if (op == "input") {
      if (!gate.contains("var")) schema_error("input gate needs 'var'");
      circuit.add_input(variable_from_json(gate["var"], "gate"));
    } else if (op == "const") {
      if (!gate.contains("value")) schema_error("const gate needs 'value'");
      circuit.add_constant(value_from_json(gate["value"], field, "gate"));
    } else if (op == "add" || op == "mul") {
      if (!gate.contains("args") || !gate["args"].is_array()) {
        schema_error(op + " gate needs 'args'");
      }
      std::vector<int> args;
      for (const Json& a : gate["args"]) {
        if (!a.is_number_integer()) schema_error("gate args must be integers");
        args.push_back(a.get<int>());
      }
      if (op == "add") {
        circuit.add_sum(std::move(args));
      } else {
        if (args.size() != 2) {
          throw validation_error("NotFanin2",
                                 "mul gates take exactly two args");
        }
        circuit.add_product(args[0], args[1]);
      }
    } else {
      schema_error("circuit: unknown gate op '" + op + "'");
    }
  }
  circuit.set_output(get_int(j, "output", "circuit"));
  return circuit;
}

Json abp_to_json(const Abp& abp) {
  Json j = partition_to_json(abp.partition());
  j["kind"] = "abp";
  int max_layer = 0;
  for (const AbpNode& n : abp.nodes()) max_layer = std::max(max_layer, n.layer);
  Json layers = Json::array();
  for (int k = 0; k <= max_layer; ++k) {
    Json layer = Json::array();
    for (int id = 0; id < abp.size(); ++id) {
      if (abp.node(id).layer == k) layer.push_back(id);
    }
    layers.push_back(std::move(layer));
  }
  j["layers"] = std::move(layers);
  Json nodes = Json::array();
  for (int id = 0; id < abp.size(); ++id) {
    Json node;
    node["id"] = id;
    node["layer"] = abp.node(id).layer;
    node["index_set"] = index_set_to_json(abp.node(id).type);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const AbpEdge& e : abp.edges()) {
    Json edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["bucket"] = e.form.bucket;
    Json form = Json::object();
    for (const auto& [col, c] : e.form.coeffs) {
      form[std::to_string(col)] = c.to_decimal();
    }
    edge["form"] = std::move(form);
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  return j;
}

Abp abp_from_json(const Json& j, PrimeField field) {
  expect_keys(j, {"version", "d", "bucket_sizes", "layers", "nodes", "edges"},
              {}, "abp");
  check_version(j, "abp");
  Abp abp(partition_from_json(j, "abp"), field);
  if (!j["nodes"].is_array()) schema_error("abp: 'nodes' must be an array");
  int next_id = 0;
  for (const Json& node : j["nodes"]) {
    expect_keys(node, {"id", "layer", "index_set"}, {}, "node");
    if (get_int(node, "id", "node") != next_id) {
      schema_error("abp: node ids must be dense and ascending");
    }
    ++next_id;
    abp.add_node(get_int(node, "layer", "node"),
                 index_set_from_json(node["index_set"], "node"));
  }
  if (!j["layers"].is_array()) schema_error("abp: 'layers' must be an array");
  int k = 0;
  for (const Json& layer : j["layers"]) {
    if (!layer.is_array()) schema_error("abp: each layer must be an array");
    for (const Json& id : layer) {
      if (!id.is_number_integer()) schema_error("abp: layer entries are ids");
      int node = id.get<int>();
      if (node < 0 || node >= abp.size() || abp.node(node).layer != k) {
        schema_error("abp: layer list disagrees with node layers");
      }
    }
    ++k;
  }
  if (!j["edges"].is_array()) schema_error("abp: 'edges' must be an array");
  for (const Json& edge : j["edges"]) {
    expect_keys(edge, {"from", "to", "bucket", "form"}, {}, "edge");
    LinearForm form;
    form.bucket = get_int(edge, "bucket", "edge");
    if (!edge["form"].is_object()) {
      schema_error("edge: 'form' must map columns to coefficients");
    }
    for (const auto& [col, coeff] : edge["form"].items()) {
      int column = 0;
      try {
        column = std::stoi(col);
      } catch (const std::exception&) {
        schema_error("edge: form keys must be column numbers");
      }
      form.coeffs.emplace(column, value_from_json(coeff, field, "edge"));
    }
    abp.add_edge(get_int(edge, "from", "edge"), get_int(edge, "to", "edge"),
                 std::move(form));
  }
  return abp;
}

Json polynomial_to_json(const VariablePartition& partition,
                        const Polynomial& p) {
  Json j = partition_to_json(partition);
  j["kind"] = "polynomial";
  j["index_set"] = index_set_to_json(p.index_set());
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term;
    Json vars = Json::array();
    for (const Variable& v : m.variables()) {
      vars.push_back({v.bucket, v.column});
    }
    term["vars"] = std::move(vars);
    term["coeff"] = c.to_decimal();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

PolynomialArtifact polynomial_from_json(const Json& j, PrimeField field) {
  expect_keys(j, {"version", "d", "bucket_sizes", "index_set", "terms"}, {},
              "polynomial");
  check_version(j, "polynomial");
  VariablePartition partition = partition_from_json(j, "polynomial");
  Polynomial p(field, index_set_from_json(j["index_set"], "polynomial"));
  if (!j["terms"].is_array()) {
    schema_error("polynomial: 'terms' must be an array");
  }
  for (const Json& term : j["terms"]) {
    expect_keys(term, {"vars", "coeff"}, {}, "term");
    if (!term["vars"].is_array()) schema_error("term: 'vars' must be an array");
    std::vector<Variable> vars;
    for (const Json& v : term["vars"]) {
      Variable var = variable_from_json(v, "term");
      partition.check_variable(var);
      vars.push_back(var);
    }
    FieldElement c = value_from_json(term["coeff"], field, "term");
    Monomial m(std::move(vars));
    if (m.support() != p.index_set()) {
      throw validation_error("IndexSetMismatch",
                             "term support " + m.support().to_string() +
                                 " differs from the polynomial index set");
    }
    if (!c.is_zero()) {
      if (!p.coefficient(m).is_zero()) {
        schema_error("polynomial: duplicate monomial " + m.to_string());
      }
      p.set_coefficient(m, c);
    }
  }
  return PolynomialArtifact{std::move(partition), std::move(p)};
}

Json assignment_to_json(const VariablePartition& partition,
                        const Assignment& assignment) {
  Json j = partition_to_json(partition);
  j["kind"] = "assignment";
  Json values = Json::object();
  for (const auto& [v, c] : assignment) {
    values[std::to_string(v.bucket) + "," + std::to_string(v.column)] =
        c.to_decimal();
  }
  j["values"] = std::move(values);
  return j;
}

Assignment assignment_from_json(const Json& j, PrimeField field) {
  expect_keys(j, {"version", "d", "bucket_sizes", "values"}, {}, "assignment");
  check_version(j, "assignment");
  VariablePartition partition = partition_from_json(j, "assignment");
  if (!j["values"].is_object()) {
    schema_error("assignment: 'values' must be an object");
  }
  Assignment out;
  for (const auto& [key, value] : j["values"].items()) {
    std::size_t comma = key.find(',');
    if (comma == std::string::npos) {
      schema_error("assignment: keys look like 'bucket,column'");
    }
    Variable v{};
    try {
      v.bucket = std::stoi(key.substr(0, comma));
      v.column = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      schema_error("assignment: keys look like 'bucket,column'");
    }
    partition.check_variable(v);
    out.emplace(v, value_from_json(value, field, "assignment"));
  }
  return out;
}

Json tree_type_to_json(const TreeTypePtr& type) {
  Json j;
  j["I"] = index_set_to_json(type->label());
  Json children = Json::array();
  if (type->left()) children.push_back(tree_type_to_json(type->left()));
  if (type->right()) children.push_back(tree_type_to_json(type->right()));
  j["children"] = std::move(children);
  return j;
}

Json rank_report_to_json(const RankReport& report) {
  Json j;
  j["version"] = 1;
  j["kind"] = "rank-report";
  j["mode"] = report.mode;
  Json layers = Json::array();
  for (const LayerRankRecord& r : report.layers) {
    Json layer;
    layer["k"] = r.layer;
    layer["left_rows"] = r.left_rows;
    layer["nodes"] = r.nodes;
    layer["right_cols"] = r.right_cols;
    layer["rank_left"] = r.rank_left;
    layer["rank_right"] = r.rank_right;
    layers.push_back(std::move(layer));
  }
  j["layers"] = std::move(layers);
  j["total"] = report.total;
  j["node_count"] = report.node_count;
  return j;
}

Json fixed_order_report_to_json(const FixedOrderRankReport& report) {
  Json j;
  j["version"] = 1;
  j["kind"] = "rank-report";
  j["mode"] = report.mode;
  j["order"] = report.order;
  Json layers = Json::array();
  for (const FixedOrderLayerRecord& r : report.layers) {
    Json layer;
    layer["k"] = r.layer;
    layer["rows"] = r.rows;
    layer["cols"] = r.cols;
    layer["rank"] = r.rank;
    layers.push_back(std::move(layer));
  }
  j["layers"] = std::move(layers);
  j["total"] = report.total;
  return j;
}

Json stage_ledger_to_json(const StageLedger& ledger) {
  Json j;
  j["version"] = 1;
  j["kind"] = "depth-reduce-stats";
  Json stages = Json::array();
  for (const StageRecord& s : ledger.stages) {
    Json stage;
    stage["stage"] = s.stage;
    stage["m"] = s.m;
    stage["frontier_size"] = s.frontier_size;
    stage["f_targets"] = s.f_targets;
    stage["derivative_targets"] = s.derivative_targets;
    stage["gates_added"] = s.gates_added;
    stage["depth_delta"] = s.depth_delta;
    stages.push_back(std::move(stage));
  }
  j["stages"] = std::move(stages);
  j["input_size"] = ledger.input_size;
  j["output_size"] = ledger.output_size;
  j["output_depth"] = ledger.output_depth;
  j["depth_bound"] = ledger.depth_bound;
  j["size_constant"] = ledger.size_constant;
  return j;
}

Json good_pair_stats_to_json(const GoodPairStats& stats) {
  Json j;
  j["version"] = 1;
  j["kind"] = "good-pair-stats";
  j["d"] = stats.d;
  j["samples"] = stats.samples;
  j["seed"] = stats.seed;
  j["e1_counts"] = stats.e1_counts;
  j["e2_counts"] = stats.e2_counts;
  Json e1 = Json::array();
  Json e2 = Json::array();
  for (std::uint64_t c : stats.e1_counts) {
    e1.push_back(static_cast<double>(c) / static_cast<double>(stats.samples));
  }
  for (std::uint64_t c : stats.e2_counts) {
    e2.push_back(static_cast<double>(c) / static_cast<double>(stats.samples));
  }
  j["e1_probs"] = std::move(e1);
  j["e2_probs"] = std::move(e2);
  j["f_sum"] = stats.f_sum;
  j["f_sq_sum"] = stats.f_sq_sum;
  j["f_prime_sum"] = stats.f_prime_sum;
  j["f_prime_sq_sum"] = stats.f_prime_sq_sum;
  j["mean_f"] = stats.mean_f;
  j["mean_f_prime"] = stats.mean_f_prime;
  j["f_low_count"] = stats.f_low_count;
  j["prob_f_low"] = stats.prob_f_low;
  return j;
}

ArtifactKind classify_artifact(const Json& j) {
  if (!j.is_object()) schema_error("artifact must be a JSON object");
  if (j.contains("gates")) return ArtifactKind::kCircuit;
  if (j.contains("nodes") && j.contains("edges")) return ArtifactKind::kAbp;
  if (j.contains("terms")) return ArtifactKind::kPolynomial;
  if (j.contains("values")) return ArtifactKind::kAssignment;
  schema_error("artifact is neither circuit, abp, polynomial nor assignment");
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace smlt
