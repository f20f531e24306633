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

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qroute/bench.hpp"
#include "qroute/placement.hpp"

namespace qroute {

inline nlohmann::json to_json(const RunRecord& r) {
  return nlohmann::json{{"schema_version", 1},
                        {"circuit", r.circuit},
                        {"qubits", r.qubits},
                        {"gates", r.gates},
                        {"discount", r.discount},
                        {"horizon", r.horizon},
                        {"lookahead_depth", r.lookahead_depth},
                        {"placement", r.placement},
                        {"layering", r.layering},
                        {"seed", r.seed},
                        {"swap_count", r.swap_count},
                        {"normalized_swaps", r.normalized_swaps},
                        {"verified", r.verified},
                        {"wall_ms", r.wall_ms},
                        {"error", r.error}};
}

/// One JSON object per line; unlike the CSV this includes wall time.
inline std::string records_jsonl(const std::vector<RunRecord>& records) {
  std::string out;
  for (const RunRecord& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

/// Initial/final placement pair, as written next to transpiled circuits and
/// consumed by the verify command.
struct PlacementRecord {
  std::int32_t num_qubits = 0;
  std::int32_t num_vertices = 0;
  std::vector<std::int32_t> initial;  // qubit -> vertex
  std::vector<std::int32_t> final;    // qubit -> vertex
  std::int64_t swap_count = 0;
};

inline nlohmann::json to_json(const PlacementRecord& rec) {
  return nlohmann::json{{"format_version", 1},
                        {"num_qubits", rec.num_qubits},
                        {"num_vertices", rec.num_vertices},
                        {"initial", rec.initial},
                        {"final", rec.final},
                        {"swap_count", rec.swap_count}};
}

inline void write_placement_record(const PlacementRecord& rec,
                                   const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << to_json(rec).dump(2) << '\n';
}

inline PlacementRecord read_placement_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  if (j.value("format_version", 0) != 1) {
    throw std::runtime_error(path + ": unsupported placement record version");
  }
  PlacementRecord rec;
  rec.num_qubits = j.at("num_qubits").get<std::int32_t>();
  rec.num_vertices = j.at("num_vertices").get<std::int32_t>();
  rec.initial = j.at("initial").get<std::vector<std::int32_t>>();
  rec.final = j.at("final").get<std::vector<std::int32_t>>();
  rec.swap_count = j.value("swap_count", std::int64_t{0});
  if (rec.initial.size() != static_cast<std::size_t>(rec.num_qubits) ||
      rec.final.size() != static_cast<std::size_t>(rec.num_qubits)) {
    throw std::runtime_error(path + ": placement arrays do not match qubit count");
  }
  return rec;
}

}  // namespace qroute
