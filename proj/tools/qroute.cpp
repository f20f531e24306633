// Copyright 2026 The qroute developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: transpile, bench, verify, gen-random, arch.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qroute.hpp"
#include "qroute/records_io.hpp"

namespace {

using namespace qroute;

LayeringMode parse_layering(const std::string& name) {
  if (name == "coarse") return LayeringMode::Coarse;
  if (name == "fine") return LayeringMode::Fine;
  throw CLI::ValidationError("--layering", "expected 'coarse' or 'fine'");
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

struct TranspileArgs {
  std::string input;
  std::string graph = "tokyo20";
  std::string out;
  std::string placement_record;
  std::string record;
  std::string placement = "multi";
  std::string layering = "coarse";
  double discount = 0.1;
  std::int32_t horizon = 40;
  std::int32_t lookahead_depth = 7;
  std::uint64_t seed = 1;
  std::int32_t tie_cap = 8;
  std::int32_t candidates = 16;
  std::int32_t perturb_max = 3;
  bool decompose_swaps = false;
  bool no_verify = false;
};

int run_transpile(const TranspileArgs& a) {
  const Circuit input = parse_qasm_file(a.input);
  const CouplingGraph graph = resolve_graph_spec(a.graph);

  TranspileOptions opts;
  opts.placement = parse_placement_method(a.placement);
  opts.candidates = a.candidates;
  opts.perturb_max = a.perturb_max;
  opts.router.discount = a.discount;
  opts.router.horizon = a.horizon;
  opts.router.lookahead_depth = a.lookahead_depth;
  opts.router.layering = parse_layering(a.layering);
  opts.router.seed = a.seed;
  opts.router.tie_cap = a.tie_cap;

  const auto t0 = std::chrono::steady_clock::now();
  const TranspileOutcome outcome = transpile(input, graph, opts);
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  const RouteResult& res = outcome.result;

  bool verified = false;
  if (!a.no_verify) {
    const VerifyReport report =
        verify(input, res.compiled, graph, res.initial,
               opts.router.layering, res.swap_count);
    if (!report.ok()) {
      std::fprintf(stderr, "verification FAILED:\n");
      for (const std::string& v : report.violations) {
        std::fprintf(stderr, "  %s\n", v.c_str());
      }
      return 1;
    }
    verified = true;
  }

  if (!a.out.empty()) {
    write_text(a.out, emit_qasm(res.compiled, a.decompose_swaps));
  }
  if (!a.placement_record.empty()) {
    PlacementRecord rec;
    rec.num_qubits = input.num_qubits();
    rec.num_vertices = graph.num_vertices();
    rec.initial = res.initial.qubit_to_vertex();
    rec.final = res.final_placement.qubit_to_vertex();
    rec.swap_count = res.swap_count;
    write_placement_record(rec, a.placement_record);
  }
  if (!a.record.empty()) {
    RunRecord r;
    r.circuit = stem_of(a.input);
    r.qubits = input.num_qubits();
    r.gates = input.gate_count();
    r.discount = a.discount;
    r.horizon = a.horizon;
    r.lookahead_depth = a.lookahead_depth;
    r.placement = placement_method_name(opts.placement);
    r.layering = layering_name(opts.router.layering);
    r.seed = a.seed;
    r.swap_count = res.swap_count;
    r.verified = verified;
    r.wall_ms = wall_ms;
    write_text(a.record, records_jsonl({r}));
  }

  const std::string dest = a.out.empty() ? "" : " -> " + a.out;
  std::printf("%s: %d qubits, %lld gates -> %lld swaps (placement %s, %s)%s\n",
              stem_of(a.input).c_str(), input.num_qubits(),
              static_cast<long long>(input.gate_count()),
              static_cast<long long>(res.swap_count),
              placement_method_name(opts.placement),
              a.no_verify ? "unverified" : "verified", dest.c_str());
  return 0;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::string graph = "tokyo20";
  std::vector<double> discounts{0.1};
  std::vector<std::int32_t> horizons{40};
  std::vector<std::int32_t> depths{7};
  std::vector<std::string> placements{"multi"};
  std::vector<std::string> layerings{"coarse"};
  std::int32_t reps = 3;
  std::uint64_t seed_base = 1;
  std::string csv;
  std::string jsonl;
  std::string summary_csv;
  std::int32_t jobs = 0;
  std::int32_t candidates = 16;
  std::int32_t perturb_max = 3;
  std::int32_t tie_cap = 8;
  bool no_verify = false;
};

int run_bench(const BenchArgs& a) {
  const CouplingGraph graph = resolve_graph_spec(a.graph);

  SuiteConfig config;
  for (const std::string& path : a.inputs) {
    config.circuits.emplace_back(stem_of(path), parse_qasm_file(path));
  }
  config.grid.discounts = a.discounts;
  config.grid.horizons = a.horizons;
  config.grid.depths = a.depths;
  config.grid.placements.clear();
  for (const std::string& p : a.placements) {
    config.grid.placements.push_back(parse_placement_method(p));
  }
  config.grid.layerings.clear();
  for (const std::string& l : a.layerings) {
    config.grid.layerings.push_back(parse_layering(l));
  }
  config.repetitions = a.reps;
  config.seed_base = a.seed_base;
  config.jobs = a.jobs;
  config.verify = !a.no_verify;
  config.candidates = a.candidates;
  config.perturb_max = a.perturb_max;
  config.tie_cap = a.tie_cap;

  const SuiteResult result = run_suite(config, graph);

  int failures = 0;
  for (const RunRecord& r : result.records) {
    if (r.swap_count < 0 || (config.verify && !r.verified)) ++failures;
  }
  for (const AggregateRow& row : result.aggregates) {
    std::printf(
        "%-20s d=%.2g h=%d D=%d %s/%s  median %.1f swaps (IQR %.1f), mean %.2f"
        "%s\n",
        row.circuit.c_str(), row.discount, row.horizon, row.lookahead_depth,
        row.placement.c_str(), row.layering.c_str(), row.median_swaps,
        row.iqr_swaps, row.mean_swaps,
        row.failures > 0 ? "  [FAILURES]" : "");
  }
  if (!a.csv.empty()) write_text(a.csv, records_csv(result.records));
  if (!a.jsonl.empty()) write_text(a.jsonl, records_jsonl(result.records));
  if (!a.summary_csv.empty()) {
    write_text(a.summary_csv, aggregates_csv(result.aggregates));
  }
  if (failures > 0) {
    std::fprintf(stderr, "%d run(s) failed\n", failures);
    return 1;
  }
  return 0;
}

struct VerifyArgs {
  std::string input;
  std::string compiled;
  std::string graph = "tokyo20";
  std::string placement_record;
  std::string layering = "coarse";
};

int run_verify(const VerifyArgs& a) {
  const Circuit input = parse_qasm_file(a.input);
  const Circuit compiled = parse_qasm_file(a.compiled);
  const CouplingGraph graph = resolve_graph_spec(a.graph);
  const PlacementRecord rec = read_placement_record(a.placement_record);
  const Placement p0 =
      Placement::from_vector(rec.initial, graph.num_vertices());

  const VerifyReport report = verify(input, compiled, graph, p0,
                                     parse_layering(a.layering), rec.swap_count);
  if (report.ok()) {
    std::printf("ok: %lld swaps, equivalent up to qubit relabeling\n",
                static_cast<long long>(report.compiled_swaps));
    return 0;
  }
  std::fprintf(stderr, "verification FAILED:\n");
  for (const std::string& v : report.violations) {
    std::fprintf(stderr, "  %s\n", v.c_str());
  }
  return 1;
}

struct GenRandomArgs {
  std::int32_t qubits = 5;
  std::int64_t gates = 50;
  double cx_fraction = 0.35;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen_random(const GenRandomArgs& a) {
  const Circuit c = random_circuit(a.qubits, a.gates, a.cx_fraction, a.seed);
  const std::string text = emit_qasm(c);
  if (a.out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text(a.out, text);
    std::printf("%d qubits, %lld gates -> %s\n", a.qubits,
                static_cast<long long>(a.gates), a.out.c_str());
  }
  return 0;
}

int run_arch(const std::string& name) {
  if (name.empty()) {
    for (const std::string& n : builtin_graph_names()) {
      std::printf("%s\n", n.c_str());
    }
    return 0;
  }
  const CouplingGraph g = resolve_graph_spec(name);
  std::printf("# %s: %d vertices, %zu edges\n", name.c_str(), g.num_vertices(),
              g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    std::printf("%d %d\n", u, v);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SWAP-routing transpiler for fixed-coupling quantum devices"};
  app.require_subcommand(1);

  TranspileArgs ta;
  CLI::App* t = app.add_subcommand("transpile", "map and route a circuit");
  t->add_option("input", ta.input, "OpenQASM 2.0 file")->required();
  t->add_option("-g,--graph", ta.graph, "coupling graph spec or edge-list file");
  t->add_option("-o,--out", ta.out, "write compiled circuit here");
  t->add_option("--placement-record", ta.placement_record,
                "write initial/final placement JSON here");
  t->add_option("--record", ta.record, "write a JSONL run record here");
  t->add_option("-p,--placement", ta.placement,
                "linear | matching-greedy | matching-blossom | multi");
  t->add_option("--discount", ta.discount, "score discount factor");
  t->add_option("--horizon", ta.horizon, "CNOTs scored per decision");
  t->add_option("--lookahead-depth", ta.lookahead_depth,
                "extra SWAPs explored when breaking ties");
  t->add_option("--layering", ta.layering, "coarse | fine");
  t->add_option("--seed", ta.seed, "RNG seed");
  t->add_option("--tie-cap", ta.tie_cap, "max tied edges explored");
  t->add_option("--candidates", ta.candidates, "multi: placements drawn");
  t->add_option("--perturb-max", ta.perturb_max,
                "multi: random transpositions per draw");
  t->add_flag("--decompose-swaps", ta.decompose_swaps,
              "emit each SWAP as three CNOTs");
  t->add_flag("--no-verify", ta.no_verify, "skip output verification");

  BenchArgs ba;
  CLI::App* b = app.add_subcommand("bench", "sweep a parameter grid");
  b->add_option("inputs", ba.inputs, "OpenQASM 2.0 files")->required();
  b->add_option("-g,--graph", ba.graph, "coupling graph spec or edge-list file");
  b->add_option("--discounts", ba.discounts, "discount values");
  b->add_option("--horizons", ba.horizons, "horizon values");
  b->add_option("--depths", ba.depths, "lookahead depth values");
  b->add_option("--placements", ba.placements, "placement methods");
  b->add_option("--layerings", ba.layerings, "layering modes");
  b->add_option("--reps", ba.reps, "repetitions per grid point");
  b->add_option("--seed-base", ba.seed_base, "seed for repetition 0");
  b->add_option("--csv", ba.csv, "write per-run CSV here");
  b->add_option("--jsonl", ba.jsonl, "write per-run JSONL here");
  b->add_option("--summary-csv", ba.summary_csv, "write aggregate CSV here");
  b->add_option("--jobs", ba.jobs, "worker threads (0 = auto)");
  b->add_option("--candidates", ba.candidates, "multi: placements drawn");
  b->add_option("--perturb-max", ba.perturb_max,
                "multi: random transpositions per draw");
  b->add_option("--tie-cap", ba.tie_cap, "max tied edges explored");
  b->add_flag("--no-verify", ba.no_verify, "skip output verification");

  VerifyArgs va;
  CLI::App* v = app.add_subcommand("verify", "check a compiled circuit");
  v->add_option("input", va.input, "original OpenQASM 2.0 file")->required();
  v->add_option("compiled", va.compiled, "compiled OpenQASM 2.0 file")->required();
  v->add_option("-g,--graph", va.graph, "coupling graph spec or edge-list file");
  v->add_option("--placement-record", va.placement_record,
                "placement JSON from transpile")->required();
  v->add_option("--layering", va.layering, "coarse | fine");

  GenRandomArgs ra;
  CLI::App* r = app.add_subcommand("gen-random", "emit a random circuit");
  r->add_option("-q,--qubits", ra.qubits, "qubit count");
  r->add_option("-n,--gates", ra.gates, "gate count");
  r->add_option("--cx-fraction", ra.cx_fraction, "fraction of CNOTs");
  r->add_option("--seed", ra.seed, "RNG seed");
  r->add_option("-o,--out", ra.out, "output file (default stdout)");

  std::string arch_name;
  CLI::App* ar = app.add_subcommand("arch", "list or show coupling graphs");
  ar->add_option("name", arch_name, "graph to print (omit to list built-ins)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (t->parsed()) return run_transpile(ta);
    if (b->parsed()) return run_bench(ba);
    if (v->parsed()) return run_verify(va);
    if (r->parsed()) return run_gen_random(ra);
    if (ar->parsed()) return run_arch(arch_name);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 0;
}
