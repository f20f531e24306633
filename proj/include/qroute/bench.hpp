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

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/coupling_graph.hpp"
#include "qroute/transpile.hpp"
#include "qroute/verifier.hpp"

namespace qroute {

/// One (circuit, hyperparameter cell, repetition) outcome. `swap_count` is
/// -1 when the run failed; `error` then carries the reason.
struct RunRecord {
  std::string circuit;
  std::int32_t qubits = 0;
  std::int64_t gates = 0;
  double discount = 0.0;
  std::int32_t horizon = 0;
  std::int32_t lookahead_depth = 0;
  std::string placement;
  std::string layering;
  std::uint64_t seed = 0;
  std::int64_t swap_count = -1;
  double normalized_swaps = 0.0;  // swap_count / max(gates, 1)
  bool verified = false;
  double wall_ms = 0.0;
  std::string error;
};

/// Hyperparameter grid; the sweep takes the cross product.
struct GridSpec {
  std::vector<double> discounts{0.1};
  std::vector<std::int32_t> horizons{40};
  std::vector<std::int32_t> depths{7};
  std::vector<PlacementMethod> placements{PlacementMethod::Multi};
  std::vector<LayeringMode> layerings{LayeringMode::Coarse};
};

struct SuiteConfig {
  std::vector<std::pair<std::string, Circuit>> circuits;
  GridSpec grid;
  std::int32_t repetitions = 3;
  std::uint64_t seed_base = 1;
  std::int32_t jobs = 0;  // 0: QROUTE_JOBS env var, else hardware threads
  bool verify = true;
  std::int32_t candidates = 16;
  std::int32_t perturb_max = 3;
  std::int32_t tie_cap = 8;
};

/// Per-(circuit, cell) summary across repetitions. Quartiles use linear
/// interpolation on the sorted swap counts.
struct AggregateRow {
  std::string circuit;
  std::int32_t qubits = 0;
  std::int64_t gates = 0;
  double discount = 0.0;
  std::int32_t horizon = 0;
  std::int32_t lookahead_depth = 0;
  std::string placement;
  std::string layering;
  std::int32_t runs = 0;
  std::int32_t failures = 0;
  double mean_swaps = 0.0;
  double median_swaps = 0.0;
  double q1_swaps = 0.0;
  double q3_swaps = 0.0;
  double iqr_swaps = 0.0;
  double median_normalized = 0.0;
  double iqr_normalized = 0.0;
};

struct SuiteResult {
  std::vector<RunRecord> records;     // circuit-major, then cell, then rep
  std::vector<AggregateRow> aggregates;
};

inline std::int32_t default_jobs() {
  if (const char* env = std::getenv("QROUTE_JOBS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<std::int32_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<std::int32_t>(hw);
}

namespace detail {

inline double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  if (sorted.size() == 1) return sorted[0];
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

inline std::string format_stat(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace detail

/// Runs the whole grid. Every task is independently seeded
/// (`seed_base + repetition`), so results do not depend on `jobs`; records
/// come back in deterministic task order.
inline SuiteResult run_suite(const SuiteConfig& config,
                             const CouplingGraph& graph) {
  if (config.repetitions < 1) {
    throw std::invalid_argument("bench: repetitions must be >= 1");
  }
  struct Task {
    const std::string* name;
    const Circuit* circuit;
    double discount;
    std::int32_t horizon;
    std::int32_t depth;
    PlacementMethod placement;
    LayeringMode layering;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (const auto& [name, circuit] : config.circuits) {
    for (const double discount : config.grid.discounts) {
      for (const std::int32_t horizon : config.grid.horizons) {
        for (const std::int32_t depth : config.grid.depths) {
          for (const PlacementMethod placement : config.grid.placements) {
            for (const LayeringMode layering : config.grid.layerings) {
              for (std::int32_t rep = 0; rep < config.repetitions; ++rep) {
                tasks.push_back({&name, &circuit, discount, horizon, depth,
                                 placement, layering,
                                 config.seed_base + static_cast<std::uint64_t>(rep)});
              }
            }
          }
        }
      }
    }
  }

  SuiteResult out;
  out.records.resize(tasks.size());
  const std::int32_t jobs =
      std::max<std::int32_t>(1, config.jobs > 0 ? config.jobs : default_jobs());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      RunRecord& rec = out.records[i];
      rec.circuit = *t.name;
      rec.qubits = t.circuit->num_qubits();
      rec.gates = t.circuit->gate_count();
      rec.discount = t.discount;
      rec.horizon = t.horizon;
      rec.lookahead_depth = t.depth;
      rec.placement = placement_method_name(t.placement);
      rec.layering = layering_name(t.layering);
      rec.seed = t.seed;
      try {
        TranspileOptions opts;
        opts.placement = t.placement;
        opts.candidates = config.candidates;
        opts.perturb_max = config.perturb_max;
        opts.router.discount = t.discount;
        opts.router.horizon = t.horizon;
        opts.router.lookahead_depth = t.depth;
        opts.router.layering = t.layering;
        opts.router.seed = t.seed;
        opts.router.tie_cap = config.tie_cap;
        const auto start = std::chrono::steady_clock::now();
        const TranspileOutcome outcome = transpile(*t.circuit, graph, opts);
        rec.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        rec.swap_count = outcome.result.swap_count;
        rec.normalized_swaps =
            static_cast<double>(outcome.result.swap_count) /
            static_cast<double>(std::max<std::int64_t>(rec.gates, 1));
        if (config.verify) {
          const VerifyReport vr =
              verify(*t.circuit, outcome.result.compiled, graph,
                     outcome.result.initial, t.layering,
                     outcome.result.swap_count);
          rec.verified = vr.ok();
          if (!vr.ok()) rec.error = vr.violations.front();
        }
      } catch (const std::exception& e) {
        rec.swap_count = -1;
        rec.error = e.what();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::int32_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Aggregate per (circuit, cell) over repetitions, preserving task order.
  const std::size_t reps = static_cast<std::size_t>(config.repetitions);
  for (std::size_t base = 0; base < out.records.size(); base += reps) {
    const RunRecord& first = out.records[base];
    AggregateRow row;
    row.circuit = first.circuit;
    row.qubits = first.qubits;
    row.gates = first.gates;
    row.discount = first.discount;
    row.horizon = first.horizon;
    row.lookahead_depth = first.lookahead_depth;
    row.placement = first.placement;
    row.layering = first.layering;
    std::vector<double> swaps, normalized;
    for (std::size_t r = 0; r < reps; ++r) {
      const RunRecord& rec = out.records[base + r];
      ++row.runs;
      if (rec.swap_count < 0) {
        ++row.failures;
        continue;
      }
      swaps.push_back(static_cast<double>(rec.swap_count));
      normalized.push_back(rec.normalized_swaps);
    }
    if (!swaps.empty()) {
      std::sort(swaps.begin(), swaps.end());
      std::sort(normalized.begin(), normalized.end());
      double sum = 0.0;
      for (double s : swaps) sum += s;
      row.mean_swaps = sum / static_cast<double>(swaps.size());
      row.median_swaps = detail::quantile(swaps, 0.5);
      row.q1_swaps = detail::quantile(swaps, 0.25);
      row.q3_swaps = detail::quantile(swaps, 0.75);
      row.iqr_swaps = row.q3_swaps - row.q1_swaps;
      row.median_normalized = detail::quantile(normalized, 0.5);
      row.iqr_normalized = detail::quantile(normalized, 0.75) -
                           detail::quantile(normalized, 0.25);
    }
    out.aggregates.push_back(std::move(row));
  }
  return out;
}

/// CSV of raw records. Wall time is deliberately excluded so identical
/// configurations produce byte-identical files; timings live in the JSONL.
inline std::string records_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << "circuit,qubits,gates,discount,horizon,lookahead_depth,placement,"
         "layering,seed,swap_count,normalized_swaps,verified,error\n";
  for (const RunRecord& r : records) {
    out << r.circuit << ',' << r.qubits << ',' << r.gates << ','
        << detail::format_stat(r.discount) << ',' << r.horizon << ','
        << r.lookahead_depth << ',' << r.placement << ',' << r.layering << ','
        << r.seed << ',' << r.swap_count << ','
        << detail::format_stat(r.normalized_swaps) << ','
        << (r.verified ? "yes" : "no") << ',' << r.error << '\n';
  }
  return out.str();
}

inline std::string aggregates_csv(const std::vector<AggregateRow>& rows) {
  std::ostringstream out;
  out << "circuit,qubits,gates,discount,horizon,lookahead_depth,placement,"
         "layering,runs,failures,mean_swaps,median_swaps,q1_swaps,q3_swaps,"
         "iqr_swaps,median_normalized,iqr_normalized\n";
  for (const AggregateRow& r : rows) {
    out << r.circuit << ',' << r.qubits << ',' << r.gates << ','
        << detail::format_stat(r.discount) << ',' << r.horizon << ','
        << r.lookahead_depth << ',' << r.placement << ',' << r.layering << ','
        << r.runs << ',' << r.failures << ','
        << detail::format_stat(r.mean_swaps) << ','
        << detail::format_stat(r.median_swaps) << ','
        << detail::format_stat(r.q1_swaps) << ','
        << detail::format_stat(r.q3_swaps) << ','
        << detail::format_stat(r.iqr_swaps) << ','
        << detail::format_stat(r.median_normalized) << ','
        << detail::format_stat(r.iqr_normalized) << '\n';
  }
  return out.str();
}

}  // namespace qroute
