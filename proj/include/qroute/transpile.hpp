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

#include <stdexcept>
#include <string>

#include "qroute/circuit.hpp"
#include "qroute/coupling_graph.hpp"
#include "qroute/layering.hpp"
#include "qroute/placement.hpp"
#include "qroute/router.hpp"

namespace qroute {

enum class PlacementMethod { Linear, MatchingGreedy, MatchingBlossom, Multi };

inline const char* placement_method_name(PlacementMethod m) {
  switch (m) {
    case PlacementMethod::Linear: return "linear";
    case PlacementMethod::MatchingGreedy: return "matching-greedy";
    case PlacementMethod::MatchingBlossom: return "matching-blossom";
    case PlacementMethod::Multi: return "multi";
  }
  return "?";
}

inline PlacementMethod parse_placement_method(const std::string& name) {
  if (name == "linear") return PlacementMethod::Linear;
  if (name == "matching-greedy") return PlacementMethod::MatchingGreedy;
  if (name == "matching-blossom") return PlacementMethod::MatchingBlossom;
  if (name == "multi") return PlacementMethod::Multi;
  throw std::invalid_argument("unknown placement method '" + name + "'");
}

struct TranspileOptions {
  PlacementMethod placement = PlacementMethod::Multi;
  std::int32_t candidates = 16;   // multi: placements drawn
  std::int32_t perturb_max = 3;   // multi: random transpositions per draw
  RouterConfig router;
};

struct TranspileOutcome {
  RouteResult result;
  double initial_score = 0.0;  // windowed score of the chosen placement
};

/// Initial placement for the configured method, scored with the router's
/// (horizon, discount). "linear" runs both path favors and keeps the better
/// scoring one (ties keep high-degree-first).
inline Placement choose_placement(const Circuit& c, const CouplingGraph& g,
                                  const TranspileOptions& opts, Rng& rng) {
  const ScoreParams sp = opts.router.score_params();
  const Layering layering = build_layering(c, opts.router.layering);
  switch (opts.placement) {
    case PlacementMethod::Linear: {
      Placement high = linear_placement(c, g, PathFavor::HighDegree);
      Placement low = linear_placement(c, g, PathFavor::LowDegree);
      const double sh = placement_score(high, layering, c, g, sp);
      const double sl = placement_score(low, layering, c, g, sp);
      return sl < sh ? low : high;
    }
    case PlacementMethod::MatchingGreedy:
      return matching_placement(c, layering, g, MatchingAlg::Greedy, sp, rng);
    case PlacementMethod::MatchingBlossom:
      return matching_placement(c, layering, g, MatchingAlg::Blossom, sp, rng);
    case PlacementMethod::Multi:
      return generate_placements(c, layering, g, sp, opts.candidates,
                                 opts.perturb_max, rng)
          .best;
  }
  throw std::invalid_argument("unknown placement method");
}

/// Placement followed by routing. The placement stage draws from a substream
/// of the router seed, so one seed pins the whole pipeline.
inline TranspileOutcome transpile(const Circuit& c, const CouplingGraph& g,
                                  const TranspileOptions& opts) {
  opts.router.validate();
  if (opts.candidates < 1 || opts.perturb_max < 0) {
    throw std::invalid_argument("transpile: bad multi-placement parameters");
  }
  Rng placement_rng(mix_seed(opts.router.seed, 1));
  const Placement p0 = choose_placement(c, g, opts, placement_rng);
  TranspileOutcome out;
  out.initial_score = placement_score(
      p0, build_layering(c, opts.router.layering), c, g,
      opts.router.score_params());
  out.result = route(c, g, p0, opts.router);
  return out;
}

}  // namespace qroute
