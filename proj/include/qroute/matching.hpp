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
#include <numeric>
#include <vector>

#include "qroute/coupling_graph.hpp"
#include "qroute/rng.hpp"

namespace qroute {

struct Matching {
  std::vector<Edge> edges;  // normalized u < v, sorted

  std::size_t size() const { return edges.size(); }
};

inline bool is_valid_matching(const CouplingGraph& g, const Matching& m) {
  std::vector<char> used(g.num_vertices(), 0);
  for (const auto& [u, v] : m.edges) {
    if (g.edge_id(u, v) < 0) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

/// Maximal matching obtained by scanning edges in the given order of edge
/// ids and taking every edge whose endpoints are both still unmatched.
inline Matching greedy_matching_ordered(const CouplingGraph& g,
                                        const std::vector<std::int32_t>& order) {
  std::vector<char> used(g.num_vertices(), 0);
  Matching m;
  for (std::int32_t id : order) {
    const auto [u, v] = g.edge(id);
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      m.edges.push_back({u, v});
    }
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

/// Maximal matching over a random edge order.
inline Matching greedy_matching(const CouplingGraph& g, Rng& rng) {
  std::vector<std::int32_t> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  return greedy_matching_ordered(g, order);
}

namespace detail {

/// Edmonds' blossom algorithm, O(V^3). Contracted blossoms are tracked via
/// per-vertex `base` pointers; augmenting paths are found by BFS from each
/// free vertex.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const CouplingGraph& g)
      : g_(g),
        n_(g.num_vertices()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_, 0),
        used_(n_, 0),
        blossom_(n_, 0) {}

  std::vector<std::int32_t> solve() {
    for (std::int32_t v = 0; v < n_; ++v) {
      if (match_[v] == -1) find_augmenting_path(v);
    }
    return match_;
  }

 private:
  std::int32_t lowest_common_base(std::int32_t a, std::int32_t b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::int32_t v, std::int32_t b, std::int32_t child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  void find_augmenting_path(std::int32_t root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::vector<std::int32_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t v = queue[head];
      for (std::int32_t to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Odd cycle: contract the blossom around the common base.
          const std::int32_t cur_base = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (std::int32_t i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) {
            augment(to);
            return;
          }
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
  }

  void augment(std::int32_t v) {
    while (v != -1) {
      const std::int32_t pv = parent_[v];
      const std::int32_t next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const CouplingGraph& g_;
  std::int32_t n_;
  std::vector<std::int32_t> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace detail

/// Maximum-cardinality matching (Edmonds' blossom algorithm).
inline Matching blossom_matching(const CouplingGraph& g) {
  const auto match = detail::BlossomMatcher(g).solve();
  Matching m;
  for (std::int32_t v = 0; v < g.num_vertices(); ++v) {
    if (match[v] > v) m.edges.push_back({v, match[v]});
  }
  return m;
}

}  // namespace qroute
