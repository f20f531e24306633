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
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/coupling_graph.hpp"
#include "qroute/layering.hpp"
#include "qroute/placement.hpp"
#include "qroute/rng.hpp"

namespace qroute {

struct RouterConfig {
  double discount = 0.1;       // delta: per-layer weight decay in scores
  std::int32_t horizon = 40;   // lambda: CNOTs included in scores
  std::int32_t lookahead_depth = 7;  // D: extra SWAPs simulated per tie
  LayeringMode layering = LayeringMode::Coarse;
  std::uint64_t seed = 1;
  std::int32_t tie_cap = 8;  // degenerate edges kept for the lookahead

  ScoreParams score_params() const { return {horizon, discount}; }

  void validate() const {
    score_params().validate();
    if (lookahead_depth < 0) {
      throw std::invalid_argument("router: negative lookahead depth");
    }
    if (tie_cap < 1) throw std::invalid_argument("router: tie cap must be >= 1");
  }
};

struct RoutingError : public std::runtime_error {
  std::int32_t gate;
  explicit RoutingError(const std::string& msg, std::int32_t gate_ = -1)
      : std::runtime_error(msg), gate(gate_) {}
};

/// One scored CNOT of the lookahead window: discount^(layer-1) times the
/// placed operand distance.
struct HorizonEntry {
  std::int32_t gate;
  std::int32_t layer;
  std::int32_t a, b;
  double weight;
};

/// Mutable routing state. `placement` is the live map; `initial` is the
/// starting placement, retroactively adjusted while qubits are still unused.
/// `compiled` receives remapped gates and inserted SWAPs in execution order.
struct RouterState {
  const Circuit* circuit = nullptr;
  const CouplingGraph* graph = nullptr;
  Placement placement;
  Placement initial;
  std::vector<std::int32_t> remaining;  // pending gate ids, program order
  std::vector<char> used_qubit;         // logical qubits already acted on
  std::vector<char> used_vertex;        // vertices some compiled gate touched
  Circuit compiled;
  bool record_output = true;
  std::int64_t swap_count = 0;
  std::int64_t executed = 0;
  std::int64_t stall_trips = 0;
  std::int64_t tie_break_calls = 0;
  Rng rng{1};
  std::vector<std::int32_t> front;      // current first layer, program order
  std::vector<HorizonEntry> horizon;    // scored CNOT window
  std::unordered_set<std::uint64_t> seen_states;  // since the last execution
};

struct RouteResult {
  Circuit compiled;
  std::int64_t swap_count = 0;
  Placement initial;
  Placement final_placement;
  std::int64_t stall_trips = 0;
  std::int64_t tie_break_calls = 0;
};

inline RouterState make_router_state(const Circuit& c, const CouplingGraph& g,
                                     const Placement& p0,
                                     const RouterConfig& cfg) {
  cfg.validate();
  if (p0.num_qubits() != c.num_qubits() ||
      p0.num_vertices() != g.num_vertices() || !p0.total()) {
    throw std::invalid_argument("route: placement does not cover the circuit");
  }
  for (const Gate& gate : c.gates()) {
    if (gate.is_cx() &&
        !g.reachable(p0.vertex_of(gate.qubits[0]),
                     p0.vertex_of(gate.qubits[1]))) {
      throw RoutingError("route: gate operands placed in disconnected "
                         "components",
                         gate.seq_index);
    }
  }
  RouterState st;
  st.circuit = &c;
  st.graph = &g;
  st.placement = p0;
  st.initial = p0;
  st.remaining.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    st.remaining[i] = static_cast<std::int32_t>(i);
  }
  st.used_qubit.assign(c.num_qubits(), 0);
  st.used_vertex.assign(g.num_vertices(), 0);
  st.compiled = Circuit(g.num_vertices());
  if (c.num_cbits() > 0) st.compiled.set_num_cbits(c.num_cbits());
  st.rng = Rng(cfg.seed);
  return st;
}

/// Recomputes the first layer and the scored CNOT window from `remaining`.
inline void rescan(RouterState& st, const RouterConfig& cfg, LayerScan& scan) {
  scan.run(st.remaining, cfg.layering);
  st.front.assign(scan.front().begin(), scan.front().end());
  st.horizon.clear();
  double weight = 1.0;
  std::int32_t weight_layer = 1;
  for (const auto& hg : scan.horizon()) {
    while (weight_layer < hg.layer) {
      weight *= cfg.discount;
      ++weight_layer;
    }
    st.horizon.push_back({hg.gate, hg.layer, hg.a, hg.b, weight});
  }
}

inline bool gate_executable(const RouterState& st, std::int32_t id) {
  const Gate& g = st.circuit->gate(id);
  if (!g.is_cx()) return true;  // 1q gates always; input SWAPs are relabeled
  return st.graph->distance(st.placement.vertex_of(g.qubits[0]),
                            st.placement.vertex_of(g.qubits[1])) == 1;
}

/// First-layer gates ready to run now, in program order.
inline std::vector<std::int32_t> executable_gates(const RouterState& st) {
  std::vector<std::int32_t> out;
  for (std::int32_t id : st.front) {
    if (gate_executable(st, id)) out.push_back(id);
  }
  return out;
}

inline bool any_executable(const RouterState& st) {
  for (std::int32_t id : st.front) {
    if (gate_executable(st, id)) return true;
  }
  return false;
}

/// Appends the given first-layer gates to the compiled circuit with operands
/// remapped to vertices, and drops them from `remaining`. Input SWAPs become
/// placement relabelings and emit nothing.
inline void execute_gates(RouterState& st, const std::vector<std::int32_t>& rho) {
  for (std::int32_t id : rho) {
    const Gate& g = st.circuit->gate(id);
    switch (g.kind) {
      case GateKind::Cx: {
        const std::int32_t u = st.placement.vertex_of(g.qubits[0]);
        const std::int32_t v = st.placement.vertex_of(g.qubits[1]);
        if (st.record_output) st.compiled.append(Gate::cx(u, v));
        st.used_qubit[g.qubits[0]] = 1;
        st.used_qubit[g.qubits[1]] = 1;
        st.used_vertex[u] = 1;
        st.used_vertex[v] = 1;
        break;
      }
      case GateKind::Swap:
        // Realized as a relabeling: no physical gate, no vertex touched.
        st.placement.exchange_qubits(g.qubits[0], g.qubits[1]);
        st.used_qubit[g.qubits[0]] = 1;
        st.used_qubit[g.qubits[1]] = 1;
        break;
      case GateKind::Barrier: {
        Gate out = g;
        for (auto& q : out.qubits) {
          const std::int32_t v = st.placement.vertex_of(q);
          st.used_qubit[q] = 1;
          st.used_vertex[v] = 1;
          q = v;
        }
        if (st.record_output) {
          out.seq_index = -1;
          st.compiled.append(std::move(out));
        }
        break;
      }
      default: {
        const std::int32_t v = st.placement.vertex_of(g.qubits[0]);
        if (st.record_output) {
          Gate out = g;
          out.qubits = {v};
          out.seq_index = -1;
          st.compiled.append(std::move(out));
        }
        st.used_qubit[g.qubits[0]] = 1;
        st.used_vertex[v] = 1;
        break;
      }
    }
    ++st.executed;
  }
  // rho is an ascending subset of remaining; drop in one pass.
  std::size_t r = 0, w = 0, k = 0;
  for (; r < st.remaining.size(); ++r) {
    if (k < rho.size() && st.remaining[r] == rho[k]) {
      ++k;
      continue;
    }
    st.remaining[w++] = st.remaining[r];
  }
  st.remaining.resize(w);
}

/// Edges with at least one endpoint hosting an operand of a first-layer
/// CNOT. Ascending edge ids.
inline std::vector<std::int32_t> candidate_edges(const RouterState& st) {
  std::vector<std::int32_t> out;
  for (std::int32_t id : st.front) {
    const Gate& g = st.circuit->gate(id);
    if (!g.is_cx()) continue;
    for (std::int32_t q : g.qubits) {
      for (std::int32_t e : st.graph->incident_edges(st.placement.vertex_of(q))) {
        out.push_back(e);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Score of the current placement: sum of weighted operand distances over
/// the CNOT window. Lower is better.
inline double state_score(const RouterState& st) {
  double total = 0.0;
  for (const auto& e : st.horizon) {
    total += e.weight * st.graph->distance(st.placement.vertex_of(e.a),
                                           st.placement.vertex_of(e.b));
  }
  return total;
}

/// Improvement in the windowed score if the residents of this edge's
/// endpoints were exchanged. Positive means the exchange helps.
inline double edge_score(const RouterState& st, std::int32_t edge_id) {
  const auto [u, v] = st.graph->edge(edge_id);
  const std::int32_t qu = st.placement.qubit_at(u);
  const std::int32_t qv = st.placement.qubit_at(v);
  double total = 0.0;
  for (const auto& e : st.horizon) {
    if (e.a != qu && e.a != qv && e.b != qu && e.b != qv) continue;
    const std::int32_t pa = st.placement.vertex_of(e.a);
    const std::int32_t pb = st.placement.vertex_of(e.b);
    const std::int32_t pa2 = pa == u ? v : (pa == v ? u : pa);
    const std::int32_t pb2 = pb == u ? v : (pb == v ? u : pb);
    total += e.weight *
             (st.graph->distance(pa, pb) - st.graph->distance(pa2, pb2));
  }
  return total;
}

/// Improvement in the summed first-layer CNOT distance if the residents of
/// this edge's endpoints were exchanged. Scans the full first layer, so it
/// matches the windowed score at zero discount whenever the window covers
/// the layer. Integer-valued, which makes degenerate maxima common.
inline double immediate_edge_score(const RouterState& st,
                                   std::int32_t edge_id) {
  const auto [u, v] = st.graph->edge(edge_id);
  const std::int32_t qu = st.placement.qubit_at(u);
  const std::int32_t qv = st.placement.qubit_at(v);
  double total = 0.0;
  for (std::int32_t id : st.front) {
    const Gate& g = st.circuit->gate(id);
    if (!g.is_cx()) continue;
    const std::int32_t a = g.qubits[0];
    const std::int32_t b = g.qubits[1];
    if (a != qu && a != qv && b != qu && b != qv) continue;
    const std::int32_t pa = st.placement.vertex_of(a);
    const std::int32_t pb = st.placement.vertex_of(b);
    const std::int32_t pa2 = pa == u ? v : (pa == v ? u : pa);
    const std::int32_t pb2 = pb == u ? v : (pb == v ? u : pb);
    total += st.graph->distance(pa, pb) - st.graph->distance(pa2, pb2);
  }
  return total;
}

/// Inserts a SWAP on the edge: emits it, counts it, and exchanges the
/// residents. Both endpoint residents count as used from here on.
inline void apply_swap(RouterState& st, std::int32_t edge_id) {
  const auto [u, v] = st.graph->edge(edge_id);
  if (st.record_output) st.compiled.append(Gate::swap(u, v));
  ++st.swap_count;
  const std::int32_t qu = st.placement.qubit_at(u);
  const std::int32_t qv = st.placement.qubit_at(v);
  if (qu >= 0) st.used_qubit[qu] = 1;
  if (qv >= 0) st.used_qubit[qv] = 1;
  st.used_vertex[u] = 1;
  st.used_vertex[v] = 1;
  st.placement.exchange_vertices(u, v);
}

/// Best-improvement relocation pass over qubits the router has not yet
/// acted on. Each such qubit may move to a vertex no compiled gate has
/// touched, or exchange with another unused qubit, when that strictly lowers
/// the windowed score; the starting placement is adjusted retroactively so
/// no SWAP is charged. Restricting targets to untouched vertices keeps the
/// adjusted starting placement consistent with the already-emitted gates.
inline bool refine_free_qubits(RouterState& st) {
  std::vector<std::int32_t> free_qubits;
  for (std::int32_t q = 0; q < st.circuit->num_qubits(); ++q) {
    if (!st.used_qubit[q]) free_qubits.push_back(q);
  }
  if (free_qubits.empty()) return false;

  // Weighted distance contribution of the window entries touching q (and r),
  // with q and r evaluated at the given vertices.
  auto contribution = [&](std::int32_t q, std::int32_t q_at, std::int32_t r,
                          std::int32_t r_at) {
    double total = 0.0;
    for (const auto& e : st.horizon) {
      if (e.a != q && e.b != q && e.a != r && e.b != r) continue;
      auto at = [&](std::int32_t logical) {
        if (logical == q) return q_at;
        if (logical == r) return r_at;
        return st.placement.vertex_of(logical);
      };
      total += e.weight * st.graph->distance(at(e.a), at(e.b));
    }
    return total;
  };

  bool changed = false;
  for (std::int32_t q : free_qubits) {
    if (st.used_qubit[q]) continue;
    const std::int32_t cur = st.placement.vertex_of(q);
    const double base = contribution(q, cur, -1, -1);
    double best_delta = 0.0;
    std::int32_t best_vertex = -1;
    std::int32_t best_exchange = -1;
    for (std::int32_t v = 0; v < st.graph->num_vertices(); ++v) {
      if (st.placement.occupied(v) || st.used_vertex[v]) continue;
      const double delta = contribution(q, v, -1, -1) - base;
      if (delta < best_delta) {
        best_delta = delta;
        best_vertex = v;
        best_exchange = -1;
      }
    }
    for (std::int32_t r : free_qubits) {
      if (r == q || st.used_qubit[r]) continue;
      const std::int32_t rv = st.placement.vertex_of(r);
      const double before = contribution(q, cur, r, rv);
      const double after = contribution(q, rv, r, cur);
      const double delta = after - before;
      if (delta < best_delta) {
        best_delta = delta;
        best_vertex = -1;
        best_exchange = r;
      }
    }
    if (best_vertex >= 0) {
      st.placement.move(q, best_vertex);
      st.initial.move(q, best_vertex);
      changed = true;
    } else if (best_exchange >= 0) {
      st.placement.exchange_qubits(q, best_exchange);
      st.initial.exchange_qubits(q, best_exchange);
      changed = true;
    }
  }
  return changed;
}

namespace detail {

inline std::uint64_t state_fingerprint(const RouterState& st) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (std::int32_t v : st.placement.qubit_to_vertex()) {
    mix(static_cast<std::uint64_t>(v) + 1);
  }
  mix(0xffffffffULL);
  for (std::int32_t id : st.front) mix(static_cast<std::uint64_t>(id) + 1);
  return h;
}

/// Walks the earliest blocked first-layer CNOT's operand along one shortest
/// path until the gate is executable or the swap budget runs out. Steps
/// prefer the lowest-index next vertex. Returns the SWAPs inserted.
inline std::int64_t force_route(RouterState& st, std::int64_t max_swaps) {
  for (std::int32_t id : st.front) {
    const Gate& g = st.circuit->gate(id);
    if (!g.is_cx() || gate_executable(st, id)) continue;
    std::int32_t u = st.placement.vertex_of(g.qubits[0]);
    const std::int32_t target = st.placement.vertex_of(g.qubits[1]);
    std::int64_t inserted = 0;
    while (st.graph->distance(u, target) > 1 && inserted < max_swaps) {
      std::int32_t next = -1;
      for (std::int32_t w : st.graph->neighbors(u)) {
        if (st.graph->distance(w, target) == st.graph->distance(u, target) - 1) {
          next = w;
          break;  // neighbors ascend, so the first hit is the lowest index
        }
      }
      apply_swap(st, st.graph->edge_id(u, next));
      u = next;
      ++inserted;
    }
    return inserted;
  }
  return 0;
}

struct LookaheadOutcome {
  bool finished = false;
  std::int64_t progress = 0;  // gates executed during the rollout
  double value = 0.0;  // finished: extra - depth (<= 0); cut off: window score

  // Completions always outrank cutoffs; cutoffs that executed more of the
  // circuit for the same SWAP spend outrank prettier-but-slower ones, with
  // the window score deciding between equal progress. Completions executed
  // everything, so among them extra - depth (fewer extra SWAPs) decides.
  bool operator<(const LookaheadOutcome& o) const {
    if (finished != o.finished) return finished;
    if (progress != o.progress) return progress > o.progress;
    return value < o.value;
  }
  bool operator==(const LookaheadOutcome& o) const {
    return finished == o.finished && progress == o.progress &&
           value == o.value;
  }
};

inline RouterState clone_for_lookahead(const RouterState& st,
                                       std::uint64_t seed) {
  RouterState sim;  // field-wise copy that skips the compiled gate list
  sim.circuit = st.circuit;
  sim.graph = st.graph;
  sim.placement = st.placement;
  sim.initial = st.initial;
  sim.remaining = st.remaining;
  sim.used_qubit = st.used_qubit;
  sim.used_vertex = st.used_vertex;
  sim.compiled = Circuit(st.graph->num_vertices());
  sim.record_output = false;
  sim.rng = Rng(seed);
  sim.front = st.front;
  sim.horizon = st.horizon;
  return sim;
}

/// Routes ahead after forcing `first_edge`, stopping once `depth` extra
/// SWAPs were inserted or the circuit completed. Degenerate choices inside
/// the rollout are resolved uniformly at random (no nested lookahead).
inline LookaheadOutcome simulate_lookahead(RouterState sim,
                                           std::int32_t first_edge,
                                           const RouterConfig& cfg,
                                           LayerScan& scan) {
  const std::int64_t depth = cfg.lookahead_depth;
  const std::int64_t executed_at_entry = sim.executed;
  apply_swap(sim, first_edge);
  std::int64_t extra = 0;
  for (;;) {
    const auto rho = executable_gates(sim);
    if (!rho.empty()) {
      execute_gates(sim, rho);
      rescan(sim, cfg, scan);
      sim.seen_states.clear();
    }
    refine_free_qubits(sim);
    const std::int64_t progress = sim.executed - executed_at_entry;
    if (sim.remaining.empty()) {
      return {true, progress, static_cast<double>(extra - depth)};
    }
    if (any_executable(sim)) continue;
    if (extra >= depth) return {false, progress, state_score(sim)};
    const auto fp = state_fingerprint(sim);
    if (!sim.seen_states.insert(fp).second) {
      ++sim.stall_trips;
      extra += force_route(sim, depth - extra);
      continue;
    }
    const auto cands = candidate_edges(sim);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::int32_t> ties;
    for (std::int32_t e : cands) {
      const double s = edge_score(sim, e);
      if (s > best) {
        best = s;
        ties.assign(1, e);
      } else if (s == best) {
        ties.push_back(e);
      }
    }
    const std::int32_t chosen =
        ties.size() == 1 ? ties[0]
                         : ties[sim.rng.below(ties.size())];
    apply_swap(sim, chosen);
    ++extra;
  }
}

}  // namespace detail

/// Ranks score-degenerate candidate edges by a bounded rollout: each edge is
/// applied to a copy of the state and routed ahead until `lookahead_depth`
/// extra SWAPs or completion. Every completion beats every cutoff, and
/// completing with fewer extra SWAPs wins. Cutoffs all spent the same SWAP
/// budget, so the one that executed the most gates wins, with the windowed
/// score of the end state deciding equal progress. Exact ties are broken
/// uniformly at random.
inline std::int32_t tie_break(RouterState& st,
                              std::vector<std::int32_t> degenerate,
                              const RouterConfig& cfg, LayerScan& scan) {
  if (degenerate.empty()) {
    throw std::invalid_argument("tie_break: no candidates");
  }
  ++st.tie_break_calls;
  std::sort(degenerate.begin(), degenerate.end());
  if (static_cast<std::int32_t>(degenerate.size()) > cfg.tie_cap) {
    degenerate.resize(cfg.tie_cap);
  }
  const std::uint64_t salt = st.rng.next_u64();
  detail::LookaheadOutcome best;
  std::vector<std::int32_t> ties;
  for (std::size_t i = 0; i < degenerate.size(); ++i) {
    auto sim = detail::clone_for_lookahead(st, mix_seed(salt, i));
    const auto outcome =
        detail::simulate_lookahead(std::move(sim), degenerate[i], cfg, scan);
    if (ties.empty() || outcome < best) {
      best = outcome;
      ties.assign(1, degenerate[i]);
    } else if (outcome == best) {
      ties.push_back(degenerate[i]);
    }
  }
  return ties.size() == 1 ? ties[0] : ties[st.rng.below(ties.size())];
}

/// Routes the circuit onto the graph starting from placement `p0`: runs every
/// executable first-layer gate, otherwise inserts the SWAP with the highest
/// immediate edge score, relabeling around input SWAPs and retroactively
/// re-placing unused qubits as it goes. Degenerate maxima go to the rollout
/// tie-break, which is where the discounted window steers the choice.
inline RouteResult route(const Circuit& c, const CouplingGraph& g,
                         const Placement& p0, const RouterConfig& cfg) {
  RouterState st = make_router_state(c, g, p0, cfg);
  LayerScan scan(c, cfg.horizon);
  rescan(st, cfg, scan);
  while (!st.remaining.empty()) {
    const auto rho = executable_gates(st);
    if (!rho.empty()) {
      execute_gates(st, rho);
      rescan(st, cfg, scan);
      st.seen_states.clear();
    }
    refine_free_qubits(st);
    if (st.remaining.empty()) break;
    if (any_executable(st)) continue;

    const auto fp = detail::state_fingerprint(st);
    if (!st.seen_states.insert(fp).second) {
      ++st.stall_trips;
      detail::force_route(st, std::numeric_limits<std::int64_t>::max());
      continue;
    }
    const auto cands = candidate_edges(st);
    if (cands.empty()) {
      throw RoutingError("route: no candidate edges for a blocked gate");
    }
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::int32_t> degenerate;
    for (std::int32_t e : cands) {
      const double s = immediate_edge_score(st, e);
      if (s > best) {
        best = s;
        degenerate.assign(1, e);
      } else if (s == best) {
        degenerate.push_back(e);
      }
    }
    const std::int32_t chosen = degenerate.size() == 1
                                    ? degenerate[0]
                                    : tie_break(st, degenerate, cfg, scan);
    apply_swap(st, chosen);
  }
  RouteResult result;
  result.compiled = std::move(st.compiled);
  result.swap_count = st.swap_count;
  result.initial = std::move(st.initial);
  result.final_placement = std::move(st.placement);
  result.stall_trips = st.stall_trips;
  result.tie_break_calls = st.tie_break_calls;
  return result;
}

}  // namespace qroute
