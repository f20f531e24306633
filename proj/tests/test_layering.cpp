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

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qroute/layering.hpp"
#include "qroute/random_circuit.hpp"

using namespace qroute;

namespace {

/// Random circuit salted with the constructs random_circuit never emits:
/// swaps, barriers, and measures.
Circuit salted_circuit(std::int32_t qubits, std::int64_t gates,
                       std::uint64_t seed) {
  Rng rng(seed);
  Circuit base = random_circuit(qubits, gates, 0.4, rng.fork());
  Circuit c(qubits);
  for (const Gate& g : base.gates()) {
    const double r = rng.unit();
    if (r < 0.05 && qubits >= 2) {
      const auto a = static_cast<std::int32_t>(rng.below(qubits));
      auto b = static_cast<std::int32_t>(rng.below(qubits - 1));
      if (b >= a) ++b;
      c.append(Gate::swap(a, b));
    } else if (r < 0.10) {
      std::vector<std::int32_t> qs;
      for (std::int32_t q = 0; q < qubits; ++q) {
        if (rng.chance(0.5)) qs.push_back(q);
      }
      if (qs.empty()) qs.push_back(0);
      c.append(Gate::barrier(std::move(qs)));
    } else if (r < 0.13) {
      c.append(Gate::measure(static_cast<std::int32_t>(rng.below(qubits)), 0));
    } else {
      c.append(g);
    }
  }
  return c;
}

std::vector<std::int32_t> all_ids(const Circuit& c) {
  std::vector<std::int32_t> ids(c.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ids[i] = static_cast<std::int32_t>(i);
  }
  return ids;
}

}  // namespace

TEST_CASE("exactly four role pairs commute") {
  using R = QubitRole;
  const R all[] = {R::ZRotation, R::XRotation, R::Control, R::Target, R::Other};
  for (R a : all) {
    for (R b : all) {
      const bool expected = (a == R::ZRotation && b == R::Control) ||
                            (a == R::Control && b == R::ZRotation) ||
                            (a == R::Control && b == R::Control) ||
                            (a == R::XRotation && b == R::Target) ||
                            (a == R::Target && b == R::XRotation) ||
                            (a == R::Target && b == R::Target);
      REQUIRE(roles_commute(a, b) == expected);
    }
  }
}

TEST_CASE("operand roles follow the gate axis") {
  REQUIRE(role_on(Gate::rz(0, 0.1), 0) == QubitRole::ZRotation);
  REQUIRE(role_on(Gate::t(0), 0) == QubitRole::ZRotation);
  REQUIRE(role_on(Gate::one_qubit(GateKind::Sdg, 0), 0) == QubitRole::ZRotation);
  REQUIRE(role_on(Gate::one_qubit(GateKind::U1, 0, {0.3}), 0) ==
          QubitRole::ZRotation);
  REQUIRE(role_on(Gate::x(0), 0) == QubitRole::XRotation);
  REQUIRE(role_on(Gate::rx(0, 0.1), 0) == QubitRole::XRotation);
  REQUIRE(role_on(Gate::cx(0, 1), 0) == QubitRole::Control);
  REQUIRE(role_on(Gate::cx(0, 1), 1) == QubitRole::Target);
  REQUIRE(role_on(Gate::h(0), 0) == QubitRole::Other);
  REQUIRE(role_on(Gate::one_qubit(GateKind::Ry, 0, {0.2}), 0) ==
          QubitRole::Other);
  REQUIRE(role_on(Gate::swap(0, 1), 0) == QubitRole::Other);
  REQUIRE(role_on(Gate::barrier({0}), 0) == QubitRole::Other);
  REQUIRE(role_on(Gate::measure(0, 0), 0) == QubitRole::Other);
}

TEST_CASE("gate commutation matches the role rules") {
  // A diagonal rotation slides past a control on the shared qubit.
  REQUIRE(commutes(Gate::rz(0, 0.5), Gate::cx(0, 1)));
  REQUIRE(commutes(Gate::t(0), Gate::cx(0, 1)));
  // Controls sharing a control qubit commute.
  REQUIRE(commutes(Gate::cx(0, 1), Gate::cx(0, 2)));
  // An X-axis rotation slides past a target.
  REQUIRE(commutes(Gate::x(1), Gate::cx(0, 1)));
  REQUIRE(commutes(Gate::rx(1, 0.2), Gate::cx(0, 1)));
  // Targets sharing the target qubit commute.
  REQUIRE(commutes(Gate::cx(0, 2), Gate::cx(1, 2)));
  // Disjoint operands always commute.
  REQUIRE(commutes(Gate::h(0), Gate::cx(1, 2)));

  // The near misses do not.
  REQUIRE_FALSE(commutes(Gate::rz(1, 0.5), Gate::cx(0, 1)));  // z on target
  REQUIRE_FALSE(commutes(Gate::x(0), Gate::cx(0, 1)));        // x on control
  REQUIRE_FALSE(commutes(Gate::rz(0, 0.5), Gate::t(0)));      // z with z
  REQUIRE_FALSE(commutes(Gate::x(0), Gate::rx(0, 0.1)));      // x with x
  REQUIRE_FALSE(commutes(Gate::h(0), Gate::cx(0, 1)));
  REQUIRE_FALSE(commutes(Gate::cx(0, 1), Gate::cx(1, 2)));  // target->control
  REQUIRE_FALSE(commutes(Gate::cx(0, 1), Gate::cx(1, 0)));
  REQUIRE_FALSE(commutes(Gate::swap(0, 1), Gate::cx(0, 2)));
  REQUIRE_FALSE(commutes(Gate::barrier({0, 1}), Gate::rz(0, 0.1)));
  REQUIRE_FALSE(commutes(Gate::measure(0, 0), Gate::cx(0, 1)));
}

TEST_CASE("layer assignment matches a pairwise conflict scan") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Circuit c = salted_circuit(2 + seed % 6, 80, seed);
    const auto ids = all_ids(c);
    for (LayeringMode mode : {LayeringMode::Coarse, LayeringMode::Fine}) {
      const Layering got = build_layering(c, mode);
      const auto want = oracles::layering_by_pairwise_scan(c, ids, mode);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        REQUIRE(got.layer_of[ids[i]] == want[i]);
      }
    }
  }
}

TEST_CASE("fine layering splits what coarse merges") {
  Circuit c(2);
  c.append(Gate::cx(0, 1));
  c.append(Gate::rz(0, 0.3));  // commutes with the control in coarse mode
  const Layering coarse = build_layering(c, LayeringMode::Coarse);
  const Layering fine = build_layering(c, LayeringMode::Fine);
  REQUIRE(coarse.layer_of[1] == 1);
  REQUIRE(fine.layer_of[1] == 2);
}

TEST_CASE("layers partition the domain in program order") {
  const Circuit c = salted_circuit(5, 60, 77);
  const Layering l = build_layering(c, LayeringMode::Coarse);
  std::vector<std::int32_t> collected;
  for (const auto& layer : l.layers) {
    REQUIRE_FALSE(layer.empty());
    REQUIRE(std::is_sorted(layer.begin(), layer.end()));
    collected.insert(collected.end(), layer.begin(), layer.end());
  }
  std::sort(collected.begin(), collected.end());
  REQUIRE(collected == all_ids(c));
  REQUIRE(l.front() == l.layers[0]);
  REQUIRE(l.domain() == all_ids(c));
}

TEST_CASE("a layering over a subsequence ignores the rest") {
  Circuit c(2);
  c.append(Gate::h(0));      // id 0, excluded
  c.append(Gate::h(0));      // id 1
  c.append(Gate::cx(0, 1));  // id 2
  const std::vector<std::int32_t> sub{1, 2};
  const Layering l = build_layering(c, sub, LayeringMode::Coarse);
  REQUIRE(l.layer_of[0] == 0);  // uncovered
  REQUIRE(l.layer_of[1] == 1);
  REQUIRE(l.layer_of[2] == 2);
  REQUIRE(l.domain() == sub);
}

TEST_CASE("removing front gates relayers like a rebuild") {
  Rng rng(404);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Circuit c = salted_circuit(4, 50, seed + 1000);
    const LayeringMode mode =
        seed % 2 == 0 ? LayeringMode::Coarse : LayeringMode::Fine;
    Layering cur = build_layering(c, mode);
    while (cur.num_layers() > 0) {
      // Remove a random nonempty prefix of the first layer.
      std::vector<std::int32_t> removed = cur.front();
      const auto keep = rng.below(removed.size());
      removed.resize(removed.size() - keep);
      cur = relayer_after_removal(cur, removed, c, mode);

      std::vector<std::int32_t> kept_ids = cur.domain();
      const auto want = oracles::layering_by_pairwise_scan(c, kept_ids, mode);
      for (std::size_t i = 0; i < kept_ids.size(); ++i) {
        REQUIRE(cur.layer_of[kept_ids[i]] == want[i]);
      }
    }
  }
}

TEST_CASE("removing a non-front gate is an error") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::h(0));
  const Layering l = build_layering(c, LayeringMode::Coarse);
  REQUIRE(l.layer_of[1] == 2);
  REQUIRE_THROWS_AS(relayer_after_removal(l, {1}, c, LayeringMode::Coarse),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(relayer_after_removal(l, {-1}, c, LayeringMode::Coarse),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(relayer_after_removal(l, {9}, c, LayeringMode::Coarse),
                    std::invalid_argument);
}

TEST_CASE("the scanner agrees with the builder") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Circuit c = salted_circuit(5, 70, seed + 2000);
    const std::int32_t horizon = 1 + static_cast<std::int32_t>(seed % 12);
    LayerScan scan(c, horizon);
    Rng rng(seed);

    // Random suffix of the circuit as the remaining set.
    std::vector<std::int32_t> remaining = all_ids(c);
    remaining.erase(remaining.begin(),
                    remaining.begin() + rng.below(remaining.size() / 2 + 1));

    for (LayeringMode mode : {LayeringMode::Coarse, LayeringMode::Fine}) {
      scan.run(remaining, mode);
      const Layering want = build_layering(c, remaining, mode);

      REQUIRE(scan.front() == want.front());
      REQUIRE(scan.num_layers() == want.num_layers());

      // Oracle horizon: two-qubit gates by (layer, program order), first N.
      std::vector<std::pair<std::int32_t, std::int32_t>> cnots;
      for (std::int32_t id : remaining) {
        if (c.gate(id).is_cx()) cnots.push_back({want.layer_of[id], id});
      }
      std::sort(cnots.begin(), cnots.end());
      if (cnots.size() > static_cast<std::size_t>(horizon)) {
        cnots.resize(horizon);
      }
      REQUIRE(scan.horizon().size() == cnots.size());
      for (std::size_t i = 0; i < cnots.size(); ++i) {
        REQUIRE(scan.horizon()[i].gate == cnots[i].second);
        REQUIRE(scan.horizon()[i].layer == cnots[i].first);
        REQUIRE(scan.horizon()[i].a == c.gate(cnots[i].second).qubits[0]);
        REQUIRE(scan.horizon()[i].b == c.gate(cnots[i].second).qubits[1]);
      }
    }
  }
}
