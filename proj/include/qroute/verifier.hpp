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

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/coupling_graph.hpp"
#include "qroute/layering.hpp"
#include "qroute/placement.hpp"

namespace qroute {

struct VerifyReport {
  bool adjacency_ok = true;   // every two-qubit gate sits on a coupler
  bool order_ok = true;       // pulled-back gates are a valid reordering
  bool swap_count_ok = true;  // SWAPs in the output match the reported count
  std::int64_t compiled_swaps = 0;
  std::vector<std::string> violations;

  bool ok() const { return adjacency_ok && order_ok && swap_count_ok; }
};

namespace detail {

/// Gates with SWAPs removed and operands renamed to "virtual" qubits (the
/// initial state each wire carried): a SWAP becomes a relabeling of the two
/// wires instead of a gate.
inline std::vector<Gate> normalize_swaps(const Circuit& c) {
  std::vector<std::int32_t> wire(c.num_qubits());
  for (std::size_t i = 0; i < wire.size(); ++i) {
    wire[i] = static_cast<std::int32_t>(i);
  }
  std::vector<Gate> out;
  out.reserve(c.size());
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Swap) {
      std::swap(wire[g.qubits[0]], wire[g.qubits[1]]);
      continue;
    }
    Gate ng = g;
    for (auto& q : ng.qubits) q = wire[q];
    ng.seq_index = static_cast<std::int32_t>(out.size());
    out.push_back(std::move(ng));
  }
  return out;
}

inline std::string signature(const Gate& g) {
  std::string key;
  key.reserve(24 + g.qubits.size() * 4 + g.params.size() * 8);
  key.push_back(static_cast<char>(g.kind));
  for (std::int32_t q : g.qubits) {
    key.append(reinterpret_cast<const char*>(&q), sizeof q);
  }
  key.push_back('|');
  for (double p : g.params) {
    key.append(reinterpret_cast<const char*>(&p), sizeof p);
  }
  key.push_back('|');
  key.append(reinterpret_cast<const char*>(&g.cbit), sizeof g.cbit);
  key.append(g.name);
  return key;
}

inline std::string describe(const Gate& g) {
  std::string s = g.kind == GateKind::Opaque ? g.name : gate_name(g.kind);
  s += "(";
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    if (i) s += ",";
    s += "q" + std::to_string(g.qubits[i]);
  }
  s += ")";
  return s;
}

}  // namespace detail

/// Checks a compiled circuit against its source without simulating any
/// unitaries, by permutation bookkeeping alone:
///
///  (a) every CNOT and SWAP in `compiled` acts on an edge of `g`;
///  (b) deleting SWAPs from `compiled` and pulling the remaining gates back
///      through the evolving vertex-to-qubit map (seeded by `p0`) yields a
///      reordering of the source gates that respects dependencies: a gate
///      may only run once every earlier source gate it shares a qubit with
///      and does not commute with (under `mode`) has run;
///  (c) the number of SWAPs in `compiled` equals `reported_swaps` when given.
///
/// Source-side SWAP gates are treated as wire relabelings, mirroring how the
/// router realizes them.
inline VerifyReport verify(const Circuit& input, const Circuit& compiled,
                           const CouplingGraph& g, const Placement& p0,
                           LayeringMode mode = LayeringMode::Coarse,
                           std::optional<std::int64_t> reported_swaps = {}) {
  VerifyReport report;
  auto fail = [&report](bool& flag, std::string msg) {
    flag = false;
    report.violations.push_back(std::move(msg));
  };

  if (p0.num_qubits() != input.num_qubits() ||
      p0.num_vertices() != g.num_vertices() || !p0.total()) {
    fail(report.order_ok, "placement does not cover the input circuit");
    return report;
  }

  const std::vector<Gate> source = detail::normalize_swaps(input);

  // Dependency bookkeeping over the normalized source.
  std::vector<char> executed(source.size(), 0);
  std::unordered_map<std::string, std::vector<std::int32_t>> by_signature;
  std::vector<std::vector<std::int32_t>> on_qubit(input.num_qubits());
  for (const Gate& sg : source) {
    by_signature[detail::signature(sg)].push_back(sg.seq_index);
    for (std::int32_t q : sg.qubits) on_qubit[q].push_back(sg.seq_index);
  }
  std::unordered_map<std::string, std::size_t> sig_cursor;
  std::vector<std::size_t> qubit_cursor(input.num_qubits(), 0);

  auto ready = [&](std::int32_t id) -> std::int32_t {
    // Returns a blocking earlier gate id, or -1 when none.
    for (std::int32_t q : source[id].qubits) {
      auto& list = on_qubit[q];
      std::size_t& cur = qubit_cursor[q];
      while (cur < list.size() && executed[list[cur]]) ++cur;
      for (std::size_t i = cur; i < list.size() && list[i] < id; ++i) {
        if (executed[list[i]]) continue;
        const bool conflict = mode == LayeringMode::Fine ||
                              !commutes(source[list[i]], source[id]);
        if (conflict) return list[i];
      }
    }
    return -1;
  };

  // Vertex -> virtual qubit, evolved through compiled SWAPs.
  std::vector<std::int32_t> resident(g.num_vertices(), -1);
  for (std::int32_t q = 0; q < input.num_qubits(); ++q) {
    resident[p0.vertex_of(q)] = q;
  }

  auto vertex_ok = [&](std::int32_t v) {
    return v >= 0 && v < g.num_vertices();
  };

  std::int64_t matched = 0;
  for (const Gate& cg : compiled.gates()) {
    for (std::int32_t v : cg.qubits) {
      if (!vertex_ok(v)) {
        fail(report.adjacency_ok,
             "compiled gate " + std::to_string(cg.seq_index) +
                 " references vertex " + std::to_string(v) +
                 " outside the graph");
        return report;
      }
    }
    if (cg.is_two_qubit() && !g.adjacent(cg.qubits[0], cg.qubits[1])) {
      fail(report.adjacency_ok,
           "compiled gate " + std::to_string(cg.seq_index) + " (" +
               gate_name(cg.kind) + " " + std::to_string(cg.qubits[0]) + "," +
               std::to_string(cg.qubits[1]) + ") is not on a coupler");
    }
    if (cg.kind == GateKind::Swap) {
      ++report.compiled_swaps;
      std::swap(resident[cg.qubits[0]], resident[cg.qubits[1]]);
      continue;
    }
    if (!report.order_ok) continue;

    Gate pulled = cg;
    bool unmapped = false;
    for (auto& q : pulled.qubits) {
      const std::int32_t logical = resident[q];
      if (logical < 0) {
        fail(report.order_ok,
             "compiled gate " + std::to_string(cg.seq_index) +
                 " acts on vertex " + std::to_string(q) +
                 " which holds no qubit");
        unmapped = true;
        break;
      }
      q = logical;
    }
    if (unmapped) continue;

    const std::string key = detail::signature(pulled);
    auto it = by_signature.find(key);
    std::int32_t match_id = -1;
    if (it != by_signature.end()) {
      std::size_t& cur = sig_cursor[key];
      while (cur < it->second.size() && executed[it->second[cur]]) ++cur;
      if (cur < it->second.size()) match_id = it->second[cur];
    }
    if (match_id < 0) {
      fail(report.order_ok,
           "compiled gate " + std::to_string(cg.seq_index) + " pulls back to " +
               detail::describe(pulled) + " which has no pending source gate");
      continue;
    }
    const std::int32_t blocker = ready(match_id);
    if (blocker >= 0) {
      fail(report.order_ok,
           "compiled gate " + std::to_string(cg.seq_index) + " runs source gate " +
               std::to_string(match_id) + " before conflicting gate " +
               std::to_string(blocker));
      continue;
    }
    executed[match_id] = 1;
    ++matched;
  }

  if (report.order_ok && matched != static_cast<std::int64_t>(source.size())) {
    fail(report.order_ok,
         "compiled circuit realizes " + std::to_string(matched) + " of " +
             std::to_string(source.size()) + " source gates");
  }

  if (reported_swaps && *reported_swaps != report.compiled_swaps) {
    fail(report.swap_count_ok,
         "reported " + std::to_string(*reported_swaps) + " SWAPs but compiled "
             "circuit contains " + std::to_string(report.compiled_swaps));
  }
  return report;
}

}  // namespace qroute
