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
//
// smlt: command-line driver for the set-multilinear circuit toolkit.
// Artifacts travel as JSON on stdin/stdout (or --in/--out); every output
// embeds the prime, the seed and the input digests under "meta".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "smlt/json_io.hpp"

namespace {

using smlt::Json;

struct RunConfig {
  std::uint64_t prime = smlt::PrimeField::kDefaultPrime;
  std::optional<std::uint64_t> seed;
  smlt::Limits limits;
  std::string in_path;
  std::string out_path;
  std::vector<std::string> input_digests;
};

smlt::PrimeField field_of(const RunConfig& config) {
  return smlt::PrimeField(config.prime);
}

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_file(RunConfig& config, const std::string& path) {
  std::string bytes;
  if (path.empty() || path == "-") {
    bytes = read_stream(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) {
      throw smlt::io_error("FileError", "cannot open " + path);
    }
    bytes = read_stream(in);
  }
  config.input_digests.push_back(smlt::digest(bytes));
  return bytes;
}

Json parse_json(const std::string& bytes) {
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw smlt::io_error("SchemaError", std::string("bad JSON: ") + e.what());
  }
}

Json read_input(RunConfig& config) {
  return parse_json(read_file(config, config.in_path));
}

void write_output(const RunConfig& config, Json j) {
  Json meta;
  meta["prime"] = std::to_string(config.prime);
  if (config.seed) {
    meta["seed"] = *config.seed;
  } else {
    meta["seed"] = nullptr;
  }
  meta["input_digests"] = config.input_digests;
  if (j.contains("meta") && j["meta"].is_object()) {
    for (const auto& [key, value] : j["meta"].items()) meta[key] = value;
  }
  j["meta"] = std::move(meta);
  std::string text = j.dump(2) + "\n";
  if (config.out_path.empty() || config.out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(config.out_path);
    if (!out) {
      throw smlt::io_error("FileError", "cannot open " + config.out_path);
    }
    out << text;
  }
}

std::uint64_t require_seed(const RunConfig& config) {
  if (!config.seed) {
    throw smlt::validation_error("SeedRequired",
                                 "this command is randomized; pass --seed");
  }
  return *config.seed;
}

std::vector<int> parse_order(const std::string& text, int d) {
  std::vector<int> order;
  if (text == "identity" || text == "id") {
    for (int i = 1; i <= d; ++i) order.push_back(i);
    return order;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      order.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw smlt::validation_error("BadOrder",
                                   "orderings are comma-separated integers");
    }
  }
  return order;
}

std::vector<int> parse_index_list(const std::string& text) {
  return parse_order(text, 0);
}

// Inputs that may be a circuit or a program, expanded to a polynomial.
struct ExpandedInput {
  smlt::VariablePartition partition;
  smlt::Polynomial polynomial;
};

ExpandedInput expand_artifact(const Json& j, const RunConfig& config) {
  smlt::PrimeField field = field_of(config);
  switch (smlt::classify_artifact(j)) {
    case smlt::ArtifactKind::kCircuit: {
      smlt::Circuit c = smlt::circuit_from_json(j, field);
      return ExpandedInput{
          c.partition(),
          smlt::expand(c, config.limits, smlt::ValidationMode::kRelaxed)};
    }
    case smlt::ArtifactKind::kAbp: {
      smlt::Abp a = smlt::abp_from_json(j, field);
      return ExpandedInput{a.partition(), smlt::abp_expand(a, config.limits)};
    }
    case smlt::ArtifactKind::kPolynomial: {
      smlt::PolynomialArtifact p = smlt::polynomial_from_json(j, field);
      return ExpandedInput{std::move(p.partition), std::move(p.polynomial)};
    }
    case smlt::ArtifactKind::kAssignment:
      break;
  }
  throw smlt::io_error("SchemaError", "expected a circuit, abp or polynomial");
}

smlt::Assignment all_ones(const smlt::VariablePartition& partition,
                          smlt::PrimeField field) {
  smlt::Assignment a;
  for (int i = 1; i <= partition.degree(); ++i) {
    for (int j = 1; j <= partition.bucket_size(i); ++j) {
      a.emplace(smlt::Variable{i, j}, field.one());
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// gen

void cmd_gen(RunConfig& config, const std::string& what, int n, int d, int nu,
             const std::string& sigma_text, const std::string& sigmas_path) {
  smlt::PrimeField field = field_of(config);
  if (what == "per" || what == "det") {
    smlt::Circuit c = what == "per" ? smlt::gen_permanent(n, field)
                                    : smlt::gen_determinant(n, field);
    write_output(config, smlt::circuit_to_json(c));
    return;
  }
  if (what == "per-roabp") {
    write_output(config,
                 smlt::abp_to_json(smlt::gen_permanent_roabp(n, field)));
    return;
  }
  if (what == "sigma-p" || what == "sigma-p-abp") {
    std::vector<int> sigma = parse_order(sigma_text, 2 * d);
    if (what == "sigma-p") {
      smlt::Polynomial p = smlt::gen_sigma_p(d, sigma, field);
      write_output(config, smlt::polynomial_to_json(
                               smlt::VariablePartition::uniform(2 * d, 2), p));
    } else {
      write_output(config,
                   smlt::abp_to_json(smlt::gen_sigma_p_abp(d, sigma, field)));
    }
    return;
  }
  if (what == "interp-f") {
    std::vector<std::vector<int>> sigmas;
    if (!sigmas_path.empty()) {
      Json j = parse_json(read_file(config, sigmas_path));
      if (!j.is_array()) {
        throw smlt::io_error("SchemaError",
                             "sigmas file must be an array of arrays");
      }
      for (const Json& row : j) {
        sigmas.push_back(row.get<std::vector<int>>());
      }
    } else {
      std::mt19937_64 rng(require_seed(config));
      for (int c = 0; c < d; ++c) {
        sigmas.push_back(smlt::random_permutation(2 * d, rng));
      }
    }
    smlt::Abp abp = smlt::gen_interpolated_f(d, sigmas, field);
    Json out = smlt::abp_to_json(abp);
    out["meta"] = Json::object();
    out["meta"]["sigmas"] = sigmas;
    write_output(config, out);
    return;
  }
  if (what == "blockdiag") {
    smlt::BlockDiagonalRestriction r =
        smlt::gen_block_diagonal_restriction(n, nu, field);
    Json out = smlt::assignment_to_json(
        smlt::VariablePartition::uniform(n, n), r.assignment);
    out["meta"] = Json::object();
    out["meta"]["nu"] = r.nu;
    out["meta"]["y"] = r.y;
    out["meta"]["z"] = r.z;
    write_output(config, out);
    return;
  }
  throw smlt::io_error("SchemaError", "unknown generator '" + what + "'");
}

// ---------------------------------------------------------------------------

void cmd_validate(RunConfig& config, bool check_redundancy) {
  Json j = read_input(config);
  smlt::PrimeField field = field_of(config);
  Json out;
  out["version"] = 1;
  out["kind"] = "validation-report";
  if (smlt::classify_artifact(j) == smlt::ArtifactKind::kAbp) {
    smlt::Abp abp = smlt::abp_from_json(j, field);
    smlt::AbpAnnotation ann = smlt::validate_abp(abp);
    out["valid"] = true;
    out["degree"] = ann.degree;
    out["size"] = abp.size();
    out["type_width_profile"] = ann.type_width;
  } else {
    smlt::Circuit c = smlt::circuit_from_json(j, field);
    smlt::CircuitAnnotation ann = smlt::validate(c);
    out["valid"] = true;
    out["size"] = c.size();
    out["depth"] = smlt::circuit_depth(c);
    Json gates = Json::array();
    for (int id = 0; id < c.size(); ++id) {
      Json g;
      g["id"] = id;
      g["index_set"] = ann.index_set[static_cast<std::size_t>(id)].elements();
      gates.push_back(std::move(g));
    }
    out["gates"] = std::move(gates);
    out["output_index_set"] =
        ann.index_set[static_cast<std::size_t>(c.output())].elements();
    if (check_redundancy) {
      out["redundant_gates"] = smlt::find_redundant_gates(c, config.limits);
    }
  }
  write_output(config, out);
}

void cmd_expand(RunConfig& config) {
  Json j = read_input(config);
  ExpandedInput in = expand_artifact(j, config);
  write_output(config, smlt::polynomial_to_json(in.partition, in.polynomial));
}

void cmd_eval(RunConfig& config, const std::string& assign_path, bool ones) {
  Json j = read_input(config);
  smlt::PrimeField field = field_of(config);
  smlt::ArtifactKind kind = smlt::classify_artifact(j);
  smlt::VariablePartition partition =
      kind == smlt::ArtifactKind::kCircuit
          ? smlt::circuit_from_json(j, field).partition()
          : kind == smlt::ArtifactKind::kAbp
                ? smlt::abp_from_json(j, field).partition()
                : smlt::polynomial_from_json(j, field).partition;
  smlt::Assignment assignment;
  if (ones) {
    assignment = all_ones(partition, field);
  } else if (!assign_path.empty()) {
    assignment =
        smlt::assignment_from_json(parse_json(read_file(config, assign_path)),
                                   field);
  } else {
    throw smlt::validation_error("MissingAssignment",
                                 "pass --assign FILE or --ones");
  }
  smlt::FieldElement value = field.zero();
  switch (kind) {
    case smlt::ArtifactKind::kCircuit:
      value = smlt::evaluate(smlt::circuit_from_json(j, field), assignment,
                             smlt::ValidationMode::kRelaxed);
      break;
    case smlt::ArtifactKind::kAbp:
      value = smlt::abp_evaluate(smlt::abp_from_json(j, field), assignment);
      break;
    default:
      value = smlt::poly_eval(
          smlt::polynomial_from_json(j, field).polynomial, assignment);
      break;
  }
  Json out;
  out["version"] = 1;
  out["kind"] = "value";
  out["value"] = value.to_decimal();
  write_output(config, out);
}

void cmd_equal(RunConfig& config, const std::string& against,
               const std::string& mode, int trials) {
  Json left_json = read_input(config);
  Json right_json = parse_json(read_file(config, against));
  smlt::PrimeField field = field_of(config);

  ExpandedInput left_meta = expand_artifact(left_json, config);
  Json out;
  out["version"] = 1;
  out["kind"] = "equal-report";
  out["mode"] = mode;

  if (mode == "exact") {
    ExpandedInput right = expand_artifact(right_json, config);
    if (left_meta.partition != right.partition) {
      throw smlt::validation_error("IndexSetMismatch",
                                   "inputs use different partitions");
    }
    out["equal"] = left_meta.polynomial == right.polynomial;
  } else if (mode == "random") {
    std::uint64_t seed = require_seed(config);
    ExpandedInput right = expand_artifact(right_json, config);
    if (left_meta.partition != right.partition) {
      throw smlt::validation_error("IndexSetMismatch",
                                   "inputs use different partitions");
    }
    std::mt19937_64 rng(seed);
    bool equal = left_meta.polynomial.index_set() ==
                 right.polynomial.index_set();
    for (int t = 0; equal && t < trials; ++t) {
      smlt::Assignment a;
      for (int i = 1; i <= left_meta.partition.degree(); ++i) {
        for (int c = 1; c <= left_meta.partition.bucket_size(i); ++c) {
          a.emplace(smlt::Variable{i, c},
                    smlt::FieldElement(rng() % field.prime(), field.prime()));
        }
      }
      if (smlt::poly_eval(left_meta.polynomial, a) !=
          smlt::poly_eval(right.polynomial, a)) {
        equal = false;
      }
    }
    out["equal"] = equal;
    out["trials"] = trials;
  } else {
    throw smlt::io_error("SchemaError", "mode is 'exact' or 'random'");
  }
  write_output(config, out);
}

void cmd_depth_reduce(RunConfig& config, const std::string& stats_path) {
  Json j = read_input(config);
  smlt::Circuit c = smlt::circuit_from_json(j, field_of(config));
  smlt::DepthReduceResult result = smlt::depth_reduce(c, config.limits);
  if (!stats_path.empty()) {
    std::ofstream out(stats_path);
    if (!out) {
      throw smlt::io_error("FileError", "cannot open " + stats_path);
    }
    out << smlt::stage_ledger_to_json(result.ledger).dump(2) << "\n";
  }
  write_output(config, smlt::circuit_to_json(result.circuit));
}

void cmd_to_formula(RunConfig& config) {
  Json j = read_input(config);
  smlt::Circuit c = smlt::circuit_from_json(j, field_of(config));
  write_output(config, smlt::circuit_to_json(
                           smlt::circuit_to_formula(c, config.limits)));
}

void cmd_to_abp(RunConfig& config) {
  Json j = read_input(config);
  smlt::Circuit c = smlt::circuit_from_json(j, field_of(config));
  write_output(config,
               smlt::abp_to_json(smlt::circuit_to_abp(c, config.limits)));
}

void cmd_tree_types(RunConfig& config) {
  Json j = read_input(config);
  smlt::Circuit c = smlt::circuit_from_json(j, field_of(config));
  std::vector<smlt::TreeTypePtr> types =
      smlt::enumerate_tree_types(c, config.limits);
  Json out;
  out["version"] = 1;
  out["kind"] = "tree-types";
  out["count"] = types.size();
  Json list = Json::array();
  for (const smlt::TreeTypePtr& t : types) {
    list.push_back(smlt::tree_type_to_json(t));
  }
  out["types"] = std::move(list);
  write_output(config, out);
}

void cmd_property_u(RunConfig& config) {
  Json j = read_input(config);
  smlt::Circuit c = smlt::circuit_from_json(j, field_of(config));
  smlt::PropertyUResult result = smlt::check_property_U(c, config.limits);
  Json out;
  out["version"] = 1;
  out["kind"] = "property-u";
  out["property_u"] = result.holds;
  if (result.violating_monomial) {
    Json vars = Json::array();
    for (const smlt::Variable& v : result.violating_monomial->variables()) {
      vars.push_back({v.bucket, v.column});
    }
    out["violating_monomial"] = std::move(vars);
  }
  write_output(config, out);
}

void cmd_decompose(RunConfig& config) {
  Json j = read_input(config);
  smlt::Circuit c = smlt::circuit_from_json(j, field_of(config));
  std::vector<smlt::Circuit> components =
      smlt::decompose_by_type(c, config.limits);
  Json out;
  out["version"] = 1;
  out["kind"] = "decomposition";
  Json list = Json::array();
  for (const smlt::Circuit& component : components) {
    list.push_back(smlt::circuit_to_json(component));
  }
  out["components"] = std::move(list);
  write_output(config, out);
}

void cmd_slice(RunConfig& config, const std::string& index_set_text) {
  Json j = read_input(config);
  smlt::Circuit c = smlt::circuit_from_json(j, field_of(config));
  smlt::IndexSet index_set =
      smlt::IndexSet::from_elements(parse_index_list(index_set_text));
  smlt::SliceResult result =
      smlt::slice_by_index_set(c, index_set, config.limits);
  if (!result.property_u) {
    std::cerr << "warning: input fails Property U; the slice may not "
                 "partition the polynomial\n";
  }
  Json out = smlt::circuit_to_json(result.circuit);
  out["meta"] = Json::object();
  out["meta"]["property_u"] = result.property_u;
  write_output(config, out);
}

void cmd_unique_to_formula(RunConfig& config) {
  Json j = read_input(config);
  smlt::Circuit c = smlt::circuit_from_json(j, field_of(config));
  write_output(config, smlt::circuit_to_json(
                           smlt::unique_type_to_formula(c, config.limits)));
}

void cmd_rank(RunConfig& config, const std::string& order_text,
              bool abp_witness) {
  Json j = read_input(config);
  smlt::PrimeField field = field_of(config);
  if (abp_witness) {
    smlt::Abp abp = smlt::abp_from_json(j, field);
    write_output(config, smlt::rank_report_to_json(
                             smlt::rank_lower_bound_report(abp, config.limits)));
    return;
  }
  if (order_text.empty()) {
    throw smlt::validation_error("BadOrder",
                                 "pass --order BUCKETS or --abp-witness");
  }
  ExpandedInput in = expand_artifact(j, config);
  std::vector<int> order =
      parse_order(order_text, in.polynomial.index_set().count());
  write_output(config,
               smlt::fixed_order_report_to_json(smlt::fixed_order_rank_report(
                   in.partition, in.polynomial, order)));
}

void cmd_type_width(RunConfig& config, int layer, bool have_layer) {
  Json j = read_input(config);
  smlt::Abp abp = smlt::abp_from_json(j, field_of(config));
  smlt::AbpAnnotation ann = smlt::validate_abp(abp);
  Json out;
  out["version"] = 1;
  out["kind"] = "type-width";
  if (have_layer) {
    out["layer"] = layer;
    out["type_width"] = smlt::type_width(abp, layer);
  } else {
    out["profile"] = ann.type_width;
  }
  write_output(config, out);
}

void cmd_narrow(RunConfig& config, int w, int threshold, bool have_threshold) {
  Json j = read_input(config);
  smlt::Abp abp = smlt::abp_from_json(j, field_of(config));
  if (!have_threshold) threshold = w;
  smlt::AbpAnnotation ann = smlt::validate_abp(abp);
  Json out;
  out["version"] = 1;
  out["kind"] = "narrowness";
  out["w"] = w;
  out["threshold"] = threshold;
  out["layer"] = ann.degree - w;
  out["narrow"] = smlt::is_w_narrow(abp, w, threshold);
  out["type_width"] = smlt::type_width(abp, ann.degree - w);
  write_output(config, out);
}

void cmd_roabp_detect(RunConfig& config) {
  Json j = read_input(config);
  smlt::Abp abp = smlt::abp_from_json(j, field_of(config));
  std::optional<std::vector<int>> order = smlt::detect_roabp(abp);
  Json out;
  out["version"] = 1;
  out["kind"] = "roabp";
  out["roabp"] = order.has_value();
  if (order) out["order"] = *order;
  write_output(config, out);
}

void cmd_interval_check(RunConfig& config, const std::string& order_text) {
  Json j = read_input(config);
  smlt::PrimeField field = field_of(config);
  Json out;
  out["version"] = 1;
  out["kind"] = "interval-check";
  if (smlt::classify_artifact(j) == smlt::ArtifactKind::kAbp) {
    smlt::Abp abp = smlt::abp_from_json(j, field);
    std::vector<int> order =
        parse_order(order_text, abp.partition().degree());
    smlt::AbpIntervalCheckResult result =
        smlt::abp_is_interval_multilinear(abp, order);
    out["interval"] = result.interval_multilinear;
    if (result.violating_node) out["violator"] = *result.violating_node;
  } else {
    smlt::Circuit c = smlt::circuit_from_json(j, field);
    std::vector<int> order = parse_order(order_text, c.partition().degree());
    smlt::IntervalCheckResult result = smlt::is_interval_multilinear(
        c, order, smlt::ValidationMode::kRelaxed);
    out["interval"] = result.interval_multilinear;
    if (result.violating_gate) out["violator"] = *result.violating_gate;
  }
  write_output(config, out);
}

void cmd_good_pairs(RunConfig& config, int d, std::uint64_t samples) {
  std::uint64_t seed = require_seed(config);
  smlt::GoodPairStats stats = smlt::good_pair_stats(d, samples, seed);
  write_output(config, smlt::good_pair_stats_to_json(stats));
}

void cmd_substitute(RunConfig& config, const std::string& assign_path) {
  Json j = read_input(config);
  smlt::PrimeField field = field_of(config);
  if (assign_path.empty()) {
    throw smlt::validation_error("MissingAssignment", "pass --assign FILE");
  }
  smlt::Assignment assignment = smlt::assignment_from_json(
      parse_json(read_file(config, assign_path)), field);
  if (smlt::classify_artifact(j) == smlt::ArtifactKind::kAbp) {
    smlt::Abp abp = smlt::abp_from_json(j, field);
    write_output(config,
                 smlt::abp_to_json(smlt::substitute_abp(abp, assignment)));
  } else {
    smlt::Circuit c = smlt::circuit_from_json(j, field);
    write_output(config,
                 smlt::circuit_to_json(smlt::substitute(c, assignment)));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-multilinear circuit and branching-program toolkit"};
  app.fallthrough();
  RunConfig config;

  if (const char* env = std::getenv("SMLT_PRIME")) {
    config.prime = std::strtoull(env, nullptr, 10);
  }
  std::optional<std::uint64_t> seed_opt;
  app.add_option("--prime", config.prime, "field modulus (env SMLT_PRIME)");
  app.add_option("--seed", seed_opt, "seed for randomized commands");
  app.add_option("--in", config.in_path, "input file (default stdin)");
  app.add_option("--out", config.out_path, "output file (default stdout)");
  app.add_option("--term-ceiling", config.limits.max_terms,
                 "expansion term ceiling");
  app.add_option("--type-ceiling", config.limits.max_types,
                 "proof-tree type ceiling");
  app.add_option("--size-ceiling", config.limits.max_gates,
                 "formula duplication ceiling");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named family instance");
  std::string gen_what;
  int gen_n = 2, gen_d = 2, gen_nu = 1;
  std::string gen_sigma = "identity", gen_sigmas_path;
  gen->add_option("what", gen_what,
                  "per|det|per-roabp|sigma-p|sigma-p-abp|interp-f|blockdiag")
      ->required();
  gen->add_option("--n", gen_n, "matrix side for per/det/blockdiag");
  gen->add_option("--d", gen_d, "half-degree for sigma-p / interp-f");
  gen->add_option("--nu", gen_nu, "number of 2x2 blocks for blockdiag");
  gen->add_option("--sigma", gen_sigma, "permutation of [2d]: 'identity' or csv");
  gen->add_option("--sigmas", gen_sigmas_path,
                  "JSON file with d permutations for interp-f");

  auto* validate_cmd = app.add_subcommand("validate", "check an artifact");
  bool no_redundancy = false;
  validate_cmd->add_flag("--no-redundancy", no_redundancy,
                         "skip the oracle redundancy scan");

  app.add_subcommand("expand", "brute-force expansion to a polynomial");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate at an assignment");
  std::string eval_assign;
  bool eval_ones = false;
  eval_cmd->add_option("--assign", eval_assign, "assignment JSON file");
  eval_cmd->add_flag("--ones", eval_ones, "all-ones assignment");

  auto* equal_cmd = app.add_subcommand("equal", "compare two artifacts");
  std::string equal_against, equal_mode = "exact";
  int equal_trials = 20;
  equal_cmd->add_option("--against", equal_against, "second artifact")
      ->required();
  equal_cmd->add_option("--mode", equal_mode, "exact|random");
  equal_cmd->add_option("--trials", equal_trials, "random-mode trials");

  auto* dr_cmd = app.add_subcommand("depth-reduce", "staged depth reduction");
  std::string dr_stats;
  dr_cmd->add_option("--stats", dr_stats, "write the stage ledger here");

  app.add_subcommand("to-formula", "duplicate shared gates into a tree");
  app.add_subcommand("to-abp", "lower a circuit to a branching program");
  app.add_subcommand("tree-types", "enumerate proof-tree types");
  app.add_subcommand("property-u", "check Property U");
  app.add_subcommand("decompose", "split by proof-tree type");

  auto* slice_cmd = app.add_subcommand("slice", "frontier slice by index set");
  std::string slice_set;
  slice_cmd->add_option("--index-set", slice_set, "csv bucket list")
      ->required();

  app.add_subcommand("unique-to-formula",
                     "formula conversion for unique-type circuits");

  auto* rank_cmd = app.add_subcommand("rank", "Nisan-style rank report");
  std::string rank_order;
  bool rank_witness = false;
  rank_cmd->add_option("--order", rank_order, "fixed bucket order (csv)");
  rank_cmd->add_flag("--abp-witness", rank_witness,
                     "witness ranks of a given program");

  auto* tw_cmd = app.add_subcommand("type-width", "type-width profile");
  int tw_layer = 0;
  auto* tw_layer_opt = tw_cmd->add_option("--layer", tw_layer, "single layer");

  auto* narrow_cmd = app.add_subcommand("narrow", "w-narrowness check");
  int narrow_w = 0, narrow_threshold = 0;
  narrow_cmd->add_option("--w", narrow_w, "distance from the last layer")
      ->required();
  auto* narrow_thr_opt =
      narrow_cmd->add_option("--threshold", narrow_threshold,
                             "width bound (default w)");

  app.add_subcommand("roabp-detect", "read-once order detection");

  auto* interval_cmd =
      app.add_subcommand("interval-check", "sigma-interval multilinearity");
  std::string interval_order;
  interval_cmd->add_option("--order", interval_order, "bucket order (csv)")
      ->required();

  auto* gp_cmd = app.add_subcommand("good-pairs", "good-pair Monte Carlo");
  int gp_d = 8;
  std::uint64_t gp_samples = 1;
  gp_cmd->add_option("--d", gp_d, "half-degree (multiple of 8)")->required();
  gp_cmd->add_option("--samples", gp_samples, "sample count")->required();

  auto* subst_cmd = app.add_subcommand("substitute", "apply an assignment");
  std::string subst_assign;
  subst_cmd->add_option("--assign", subst_assign, "assignment JSON file")
      ->required();

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }
  config.seed = seed_opt;

  try {
    smlt::PrimeField probe(config.prime);  // reject bad moduli up front
    (void)probe;
    if (gen->parsed()) {
      cmd_gen(config, gen_what, gen_n, gen_d, gen_nu, gen_sigma,
              gen_sigmas_path);
    } else if (validate_cmd->parsed()) {
      cmd_validate(config, !no_redundancy);
    } else if (app.get_subcommand("expand")->parsed()) {
      cmd_expand(config);
    } else if (eval_cmd->parsed()) {
      cmd_eval(config, eval_assign, eval_ones);
    } else if (equal_cmd->parsed()) {
      cmd_equal(config, equal_against, equal_mode, equal_trials);
    } else if (dr_cmd->parsed()) {
      cmd_depth_reduce(config, dr_stats);
    } else if (app.get_subcommand("to-formula")->parsed()) {
      cmd_to_formula(config);
    } else if (app.get_subcommand("to-abp")->parsed()) {
      cmd_to_abp(config);
    } else if (app.get_subcommand("tree-types")->parsed()) {
      cmd_tree_types(config);
    } else if (app.get_subcommand("property-u")->parsed()) {
      cmd_property_u(config);
    } else if (app.get_subcommand("decompose")->parsed()) {
      cmd_decompose(config);
    } else if (slice_cmd->parsed()) {
      cmd_slice(config, slice_set);
    } else if (app.get_subcommand("unique-to-formula")->parsed()) {
      cmd_unique_to_formula(config);
    } else if (rank_cmd->parsed()) {
      cmd_rank(config, rank_order, rank_witness);
    } else if (tw_cmd->parsed()) {
      cmd_type_width(config, tw_layer, tw_layer_opt->count() > 0);
    } else if (narrow_cmd->parsed()) {
      cmd_narrow(config, narrow_w, narrow_threshold,
                 narrow_thr_opt->count() > 0);
    } else if (app.get_subcommand("roabp-detect")->parsed()) {
      cmd_roabp_detect(config);
    } else if (interval_cmd->parsed()) {
      cmd_interval_check(config, interval_order);
    } else if (gp_cmd->parsed()) {
      cmd_good_pairs(config, gp_d, gp_samples);
    } else if (subst_cmd->parsed()) {
      cmd_substitute(config, subst_assign);
    }
  } catch (const smlt::Error& e) {
    Json err;
    err["error"]["code"] = e.code();
    err["error"]["message"] = e.what();
    int code = 2;
    switch (e.category()) {
      case smlt::ErrorCategory::kValidation:
        code = 2;
        err["error"]["category"] = "validation";
        break;
      case smlt::ErrorCategory::kCeiling:
        code = 3;
        err["error"]["category"] = "ceiling";
        break;
      case smlt::ErrorCategory::kIo:
        code = 4;
        err["error"]["category"] = "io";
        break;
    }
    std::cerr << err.dump(2) << "\n";
    return code;
  } catch (const std::exception& e) {
    Json err;
    err["error"]["code"] = "InternalError";
    err["error"]["message"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
  return 0;
}
