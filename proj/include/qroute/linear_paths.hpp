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
#include <deque>
#include <vector>

#include "qroute/coupling_graph.hpp"

namespace qroute {

/// Vertex preference when growing paths: favor high static degree (hub-first)
/// or low static degree (periphery-first). Ties break toward lower index.
enum class PathFavor { HighDegree, LowDegree };

/// Greedy decomposition of the vertex set into simple paths. Repeatedly picks
/// the most-favored unused vertex, grows the path forward from it and then
/// backward from the start, always stepping to the most-favored unused
/// neighbor. Isolated leftovers become single-vertex paths. Deterministic.
inline std::vector<std::vector<std::int32_t>> maximal_paths(
    const CouplingGraph& g, PathFavor favor) {
  const std::int32_t n = g.num_vertices();
  std::vector<char> used(n, 0);
  // prefer(a, b): a is strictly preferred over b.
  auto prefer = [&](std::int32_t a, std::int32_t b) {
    const std::int32_t da = g.degree(a), db = g.degree(b);
    if (da != db) {
      return favor == PathFavor::HighDegree ? da > db : da < db;
    }
    return a < b;
  };
  auto pick_start = [&]() {
    std::int32_t best = -1;
    for (std::int32_t v = 0; v < n; ++v) {
      if (!used[v] && (best == -1 || prefer(v, best))) best = v;
    }
    return best;
  };
  auto next_step = [&](std::int32_t v) {
    std::int32_t best = -1;
    for (std::int32_t w : g.neighbors(v)) {
      if (!used[w] && (best == -1 || prefer(w, best))) best = w;
    }
    return best;
  };

  std::vector<std::vector<std::int32_t>> paths;
  for (;;) {
    const std::int32_t start = pick_start();
    if (start == -1) break;
    std::deque<std::int32_t> path{start};
    used[start] = 1;
    for (std::int32_t v = next_step(start); v != -1; v = next_step(v)) {
      used[v] = 1;
      path.push_back(v);
    }
    for (std::int32_t v = next_step(start); v != -1; v = next_step(v)) {
      used[v] = 1;
      path.push_front(v);
    }
    paths.emplace_back(path.begin(), path.end());
  }
  return paths;
}

}  // namespace qroute
