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
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/coupling_graph.hpp"
#include "qroute/layering.hpp"
#include "qroute/linear_paths.hpp"
#include "qroute/matching.hpp"
#include "qroute/rng.hpp"

namespace qroute {

/// Injective map from logical qubits to graph vertices. Kept double-sided:
/// qubit -> vertex and vertex -> resident qubit (-1 when empty).
class Placement {
 public:
  Placement() = default;
  Placement(std::int32_t num_qubits, std::int32_t num_vertices)
      : q2v_(num_qubits, -1), v2q_(num_vertices, -1) {
    if (num_qubits > num_vertices) {
      throw std::invalid_argument("placement: more qubits than vertices");
    }
  }

  static Placement from_vector(const std::vector<std::int32_t>& q2v,
                               std::int32_t num_vertices) {
    Placement p(static_cast<std::int32_t>(q2v.size()), num_vertices);
    for (std::size_t q = 0; q < q2v.size(); ++q) {
      p.place(static_cast<std::int32_t>(q), q2v[q]);
    }
    return p;
  }

  std::int32_t num_qubits() const {
    return static_cast<std::int32_t>(q2v_.size());
  }
  std::int32_t num_vertices() const {
    return static_cast<std::int32_t>(v2q_.size());
  }
  std::int32_t vertex_of(std::int32_t q) const { return q2v_.at(q); }
  std::int32_t qubit_at(std::int32_t v) const { return v2q_.at(v); }
  bool placed(std::int32_t q) const { return q2v_.at(q) >= 0; }
  bool occupied(std::int32_t v) const { return v2q_.at(v) >= 0; }
  const std::vector<std::int32_t>& qubit_to_vertex() const { return q2v_; }

  bool total() const {
    return std::all_of(q2v_.begin(), q2v_.end(),
                       [](std::int32_t v) { return v >= 0; });
  }

  /// Puts an unplaced qubit on a free vertex.
  void place(std::int32_t q, std::int32_t v) {
    if (v < 0 || v >= num_vertices()) {
      throw std::invalid_argument("placement: vertex out of range");
    }
    if (q2v_.at(q) >= 0) throw std::invalid_argument("placement: qubit already placed");
    if (v2q_[v] >= 0) throw std::invalid_argument("placement: vertex occupied");
    q2v_[q] = v;
    v2q_[v] = q;
  }

  /// Moves a placed qubit to a free vertex.
  void move(std::int32_t q, std::int32_t v) {
    if (v2q_.at(v) >= 0) throw std::invalid_argument("placement: vertex occupied");
    const std::int32_t old = q2v_.at(q);
    if (old < 0) throw std::invalid_argument("placement: qubit not placed");
    v2q_[old] = -1;
    q2v_[q] = v;
    v2q_[v] = q;
  }

  /// Exchanges the residents of two vertices (either may be empty).
  void exchange_vertices(std::int32_t u, std::int32_t v) {
    const std::int32_t qu = v2q_.at(u), qv = v2q_.at(v);
    if (qu >= 0) q2v_[qu] = v;
    if (qv >= 0) q2v_[qv] = u;
    std::swap(v2q_[u], v2q_[v]);
  }

  /// Exchanges the vertices of two placed qubits.
  void exchange_qubits(std::int32_t a, std::int32_t b) {
    exchange_vertices(q2v_.at(a), q2v_.at(b));
  }

  friend bool operator==(const Placement& a, const Placement& b) {
    return a.q2v_ == b.q2v_ && a.v2q_.size() == b.v2q_.size();
  }

 private:
  std::vector<std::int32_t> q2v_;
  std::vector<std::int32_t> v2q_;
};

/// Horizon length and per-layer discount for placement and edge scores.
/// Layer l contributes with weight discount^(l-1), with 0^0 = 1 so a zero
/// discount scores exactly the first layer.
struct ScoreParams {
  std::int32_t horizon = 40;  // lambda
  double discount = 0.1;      // delta

  void validate() const {
    if (horizon < 1) throw std::invalid_argument("score: horizon must be >= 1");
    if (!(discount >= 0.0 && discount <= 1.0)) {
      throw std::invalid_argument("score: discount outside [0, 1]");
    }
  }
};

/// Discount weight discount^(layer-1) with the 0^0 = 1 convention.
inline double discount_weight(double discount, std::int32_t layer) {
  if (layer <= 1) return 1.0;
  if (discount == 0.0) return 0.0;
  double w = 1.0;
  for (std::int32_t i = 1; i < layer; ++i) w *= discount;
  return w;
}

namespace detail {

/// First `horizon` CNOT gates of the layering, by (layer, program order).
inline std::vector<LayerScan::HorizonGate> horizon_gates(
    const Circuit& c, const Layering& l, std::int32_t horizon) {
  std::vector<LayerScan::HorizonGate> out;
  for (std::size_t k = 0; k < l.layers.size(); ++k) {
    for (std::int32_t id : l.layers[k]) {
      const Gate& g = c.gate(id);
      if (!g.is_cx()) continue;
      out.push_back({id, static_cast<std::int32_t>(k + 1), g.qubits[0],
                     g.qubits[1]});
      if (static_cast<std::int32_t>(out.size()) == horizon) return out;
    }
  }
  return out;
}

}  // namespace detail

/// Sum over the first `horizon` pending CNOTs (ordered by layer, then program
/// order) of discount^(layer-1) times the placed distance of the operands.
/// Lower is better; adjacent operands in layer 1 contribute 1 each.
inline double placement_score(const Placement& p, const Layering& l,
                              const Circuit& c, const CouplingGraph& g,
                              const ScoreParams& s) {
  s.validate();
  double total = 0.0;
  double weight = 1.0;
  std::int32_t weight_layer = 1;
  for (const auto& hg : detail::horizon_gates(c, l, s.horizon)) {
    const std::int32_t u = p.vertex_of(hg.a), v = p.vertex_of(hg.b);
    if (u < 0 || v < 0) {
      throw std::invalid_argument("placement_score: unplaced operand qubit");
    }
    while (weight_layer < hg.layer) {
      weight *= s.discount;
      ++weight_layer;
    }
    total += weight * g.distance(u, v);
  }
  return total;
}

enum class MatchingAlg { Greedy, Blossom };

/// Placement seeded from a graph matching: first-layer CNOTs are laid on
/// matched edges (densest edges first, first operand on the higher-degree
/// endpoint), then every remaining qubit goes to the free vertex closest to
/// its already-placed horizon partners, or to the highest-degree free vertex
/// when it has none.
inline Placement matching_placement(const Circuit& c, const Layering& l,
                                    const CouplingGraph& g, MatchingAlg alg,
                                    const ScoreParams& s, Rng& rng) {
  s.validate();
  if (c.num_qubits() > g.num_vertices()) {
    throw std::invalid_argument("placement: more qubits than vertices");
  }
  Matching m = alg == MatchingAlg::Greedy ? greedy_matching(g, rng)
                                          : blossom_matching(g);
  std::sort(m.edges.begin(), m.edges.end(), [&](const Edge& a, const Edge& b) {
    const std::int32_t da = g.degree(a.first) + g.degree(a.second);
    const std::int32_t db = g.degree(b.first) + g.degree(b.second);
    if (da != db) return da > db;
    return a < b;
  });

  Placement p(c.num_qubits(), g.num_vertices());
  std::size_t next_edge = 0;
  for (std::int32_t id : l.front()) {
    const Gate& gate = c.gate(id);
    if (!gate.is_cx()) continue;
    if (next_edge == m.edges.size()) break;
    const auto [a, b] = std::pair{gate.qubits[0], gate.qubits[1]};
    if (p.placed(a) || p.placed(b)) continue;
    auto [u, v] = m.edges[next_edge++];
    if (g.degree(v) > g.degree(u)) std::swap(u, v);
    p.place(a, u);
    p.place(b, v);
  }

  const auto horizon = detail::horizon_gates(c, l, s.horizon);
  for (std::int32_t q = 0; q < c.num_qubits(); ++q) {
    if (p.placed(q)) continue;
    std::vector<std::int32_t> partner_vertices;
    for (const auto& hg : horizon) {
      const std::int32_t other =
          hg.a == q ? hg.b : (hg.b == q ? hg.a : -1);
      if (other >= 0 && p.placed(other)) {
        partner_vertices.push_back(p.vertex_of(other));
      }
    }
    std::int32_t best = -1;
    if (!partner_vertices.empty()) {
      std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
      for (std::int32_t v = 0; v < g.num_vertices(); ++v) {
        if (p.occupied(v)) continue;
        std::int64_t cost = 0;
        for (std::int32_t pv : partner_vertices) cost += g.distance(v, pv);
        if (cost < best_cost) {
          best_cost = cost;
          best = v;
        }
      }
    } else {
      std::int32_t best_degree = -1;
      for (std::int32_t v = 0; v < g.num_vertices(); ++v) {
        if (!p.occupied(v) && g.degree(v) > best_degree) {
          best_degree = g.degree(v);
          best = v;
        }
      }
    }
    p.place(q, best);
  }
  return p;
}

/// Lays qubits in index order along a greedy maximal-path cover of the
/// graph, longest paths first, so consecutive qubits sit on adjacent
/// vertices wherever the cover allows.
inline Placement linear_placement(const Circuit& c, const CouplingGraph& g,
                                  PathFavor favor) {
  if (c.num_qubits() > g.num_vertices()) {
    throw std::invalid_argument("placement: more qubits than vertices");
  }
  auto paths = maximal_paths(g, favor);
  std::stable_sort(paths.begin(), paths.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  Placement p(c.num_qubits(), g.num_vertices());
  std::int32_t q = 0;
  for (const auto& path : paths) {
    for (std::int32_t v : path) {
      if (q == c.num_qubits()) return p;
      p.place(q++, v);
    }
  }
  return p;
}

struct PlacementCandidates {
  Placement best;
  double best_score = 0.0;
  std::size_t best_index = 0;
  std::vector<double> scores;
};

/// Draws `count` placements (uniformly among greedy-matching,
/// blossom-matching, and both linear favors), perturbs each by up to
/// `perturb_max` random edge transpositions, scores them, and keeps the
/// best. Ties keep the earliest candidate.
inline PlacementCandidates generate_placements(const Circuit& c,
                                               const Layering& l,
                                               const CouplingGraph& g,
                                               const ScoreParams& s,
                                               std::int32_t count,
                                               std::int32_t perturb_max,
                                               Rng& rng) {
  s.validate();
  if (count < 1) throw std::invalid_argument("placement: count must be >= 1");
  if (perturb_max < 0) {
    throw std::invalid_argument("placement: negative perturbation bound");
  }
  PlacementCandidates out;
  for (std::int32_t i = 0; i < count; ++i) {
    Placement p;
    switch (rng.below(4)) {
      case 0:
        p = matching_placement(c, l, g, MatchingAlg::Greedy, s, rng);
        break;
      case 1:
        p = matching_placement(c, l, g, MatchingAlg::Blossom, s, rng);
        break;
      case 2:
        p = linear_placement(c, g, PathFavor::HighDegree);
        break;
      default:
        p = linear_placement(c, g, PathFavor::LowDegree);
        break;
    }
    if (perturb_max > 0 && g.num_edges() > 0) {
      const auto k = rng.below(static_cast<std::size_t>(perturb_max) + 1);
      for (std::size_t j = 0; j < k; ++j) {
        const auto [u, v] = g.edge(static_cast<std::int32_t>(
            rng.below(g.num_edges())));
        p.exchange_vertices(u, v);
      }
    }
    const double score = placement_score(p, l, c, g, s);
    out.scores.push_back(score);
    if (i == 0 || score < out.best_score) {
      out.best = p;
      out.best_score = score;
      out.best_index = static_cast<std::size_t>(i);
    }
  }
  return out;
}

}  // namespace qroute
