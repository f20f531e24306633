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
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qroute {

using Edge = std::pair<std::int32_t, std::int32_t>;

inline constexpr std::int32_t kUnreachable =
    std::numeric_limits<std::int32_t>::max() / 4;

/// BFS shortest-path distances from every vertex; `kUnreachable` marks
/// disconnected pairs. Row-major `n*n` matrix.
inline std::vector<std::int32_t> all_pairs_distances(
    std::int32_t n, const std::vector<std::vector<std::int32_t>>& adjacency) {
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n) * n, kUnreachable);
  std::vector<std::int32_t> queue(n);
  for (std::int32_t s = 0; s < n; ++s) {
    auto* row = dist.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::int32_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const std::int32_t v = queue[head++];
      for (std::int32_t w : adjacency[v]) {
        if (row[w] == kUnreachable) {
          row[w] = row[v] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return dist;
}

/// Undirected hardware connectivity graph with cached all-pairs distances.
/// Edges are normalized (u < v), deduplicated, and sorted; the position of an
/// edge in `edges()` is its stable id.
class CouplingGraph {
 public:
  CouplingGraph(std::int32_t num_vertices, std::vector<Edge> edge_list)
      : n_(num_vertices) {
    if (num_vertices <= 0) {
      throw std::invalid_argument("coupling graph: needs at least one vertex");
    }
    for (auto& [u, v] : edge_list) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("coupling graph: vertex out of range");
      }
      if (u == v) throw std::invalid_argument("coupling graph: self loop");
      if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()),
                    edge_list.end());
    edges_ = std::move(edge_list);
    adjacency_.resize(n_);
    incident_.resize(n_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [u, v] = edges_[e];
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
      incident_[u].push_back(static_cast<std::int32_t>(e));
      incident_[v].push_back(static_cast<std::int32_t>(e));
    }
    dist_ = all_pairs_distances(n_, adjacency_);
  }

  std::int32_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::int32_t id) const { return edges_.at(id); }
  const std::vector<std::int32_t>& neighbors(std::int32_t v) const {
    return adjacency_.at(v);
  }
  const std::vector<std::int32_t>& incident_edges(std::int32_t v) const {
    return incident_.at(v);
  }
  std::int32_t degree(std::int32_t v) const {
    return static_cast<std::int32_t>(adjacency_.at(v).size());
  }

  std::int32_t distance(std::int32_t u, std::int32_t v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool reachable(std::int32_t u, std::int32_t v) const {
    return distance(u, v) != kUnreachable;
  }
  bool adjacent(std::int32_t u, std::int32_t v) const {
    return u != v && distance(u, v) == 1;
  }
  bool connected() const {
    for (std::int32_t v = 1; v < n_; ++v) {
      if (!reachable(0, v)) return false;
    }
    return true;
  }

  /// Id of the normalized edge {u, v}, or -1 when absent.
  std::int32_t edge_id(std::int32_t u, std::int32_t v) const {
    if (u > v) std::swap(u, v);
    const Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<std::int32_t>(it - edges_.begin());
  }

  friend bool operator==(const CouplingGraph& a, const CouplingGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::int32_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::int32_t>> adjacency_;
  std::vector<std::vector<std::int32_t>> incident_;
  std::vector<std::int32_t> dist_;
};

inline CouplingGraph make_line(std::int32_t n) {
  std::vector<Edge> edges;
  for (std::int32_t v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return CouplingGraph(n, std::move(edges));
}

inline CouplingGraph make_grid(std::int32_t rows, std::int32_t cols) {
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("grid: dimensions must be positive");
  }
  std::vector<Edge> edges;
  auto at = [cols](std::int32_t r, std::int32_t c) { return r * cols + c; };
  for (std::int32_t r = 0; r < rows; ++r) {
    for (std::int32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({at(r, c), at(r, c + 1)});
      if (r + 1 < rows) edges.push_back({at(r, c), at(r + 1, c)});
    }
  }
  return CouplingGraph(rows * cols, std::move(edges));
}

/// 20-qubit device layout: a 4x5 grid augmented with twelve diagonal
/// couplers. 43 edges in total.
inline CouplingGraph make_tokyo20() {
  std::vector<Edge> edges = {
      // rows
      {0, 1}, {1, 2}, {2, 3}, {3, 4},
      {5, 6}, {6, 7}, {7, 8}, {8, 9},
      {10, 11}, {11, 12}, {12, 13}, {13, 14},
      {15, 16}, {16, 17}, {17, 18}, {18, 19},
      // columns
      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
      {5, 10}, {6, 11}, {7, 12}, {8, 13}, {9, 14},
      {10, 15}, {11, 16}, {12, 17}, {13, 18}, {14, 19},
      // diagonals
      {1, 7}, {2, 6}, {3, 9}, {4, 8},
      {5, 11}, {6, 10}, {7, 13}, {8, 12},
      {11, 17}, {12, 16}, {13, 19}, {14, 18},
  };
  return CouplingGraph(20, std::move(edges));
}

/// Reads one edge per line ("u v"), with '#' comments and blank lines
/// allowed. The vertex count is max index + 1.
inline CouplingGraph parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::int32_t max_vertex = -1;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    long u, v;
    if (!(row >> u) || !(row >> v)) {
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected two vertex indices");
    }
    std::string extra;
    if (row >> extra) {
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": trailing tokens");
    }
    if (u < 0 || v < 0) {
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": negative vertex index");
    }
    edges.push_back({static_cast<std::int32_t>(u), static_cast<std::int32_t>(v)});
    max_vertex = std::max({max_vertex, static_cast<std::int32_t>(u),
                           static_cast<std::int32_t>(v)});
  }
  if (max_vertex < 0) throw std::runtime_error("edge list: no edges");
  return CouplingGraph(max_vertex + 1, std::move(edges));
}

inline CouplingGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

inline std::vector<std::string> builtin_graph_names() {
  return {"tokyo20", "line<N>", "grid<R>x<C>"};
}

/// "tokyo20", "line<N>", "grid<R>x<C>", or a path to an edge-list file.
inline CouplingGraph resolve_graph_spec(const std::string& spec) {
  if (spec == "tokyo20") return make_tokyo20();
  auto parse_int = [](const std::string& s, long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtol(s.c_str(), &end, 10);
    return *end == '\0' && out > 0;
  };
  if (spec.rfind("line", 0) == 0) {
    long n;
    if (parse_int(spec.substr(4), n)) {
      return make_line(static_cast<std::int32_t>(n));
    }
  }
  if (spec.rfind("grid", 0) == 0) {
    const auto x = spec.find('x', 4);
    if (x != std::string::npos) {
      long r, c;
      if (parse_int(spec.substr(4, x - 4), r) &&
          parse_int(spec.substr(x + 1), c)) {
        return make_grid(static_cast<std::int32_t>(r),
                         static_cast<std::int32_t>(c));
      }
    }
  }
  return load_graph_file(spec);
}

}  // namespace qroute
