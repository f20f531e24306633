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

#include "qroute/circuit.hpp"
#include "qroute/rng.hpp"

namespace qroute {

/// Random circuit over `num_qubits` qubits with `num_gates` gates, where each
/// gate is a CNOT on a uniform distinct pair with probability
/// `two_qubit_fraction` and otherwise a uniform one-qubit gate. Deterministic
/// in `seed`.
inline Circuit random_circuit(std::int32_t num_qubits, std::int64_t num_gates,
                              double two_qubit_fraction, std::uint64_t seed) {
  if (num_qubits < 1) throw std::invalid_argument("random_circuit: needs at least one qubit");
  if (num_gates < 0) throw std::invalid_argument("random_circuit: negative gate count");
  if (two_qubit_fraction < 0.0 || two_qubit_fraction > 1.0) {
    throw std::invalid_argument("random_circuit: fraction outside [0, 1]");
  }
  if (two_qubit_fraction > 0.0 && num_qubits < 2) {
    throw std::invalid_argument("random_circuit: two-qubit gates need two qubits");
  }
  Rng rng(seed);
  Circuit c(num_qubits);
  constexpr double kTwoPi = 6.28318530717958647692;
  for (std::int64_t i = 0; i < num_gates; ++i) {
    if (rng.chance(two_qubit_fraction)) {
      const auto a = static_cast<std::int32_t>(rng.below(num_qubits));
      auto b = static_cast<std::int32_t>(rng.below(num_qubits - 1));
      if (b >= a) ++b;
      c.append(Gate::cx(a, b));
      continue;
    }
    const auto q = static_cast<std::int32_t>(rng.below(num_qubits));
    switch (rng.below(8)) {
      case 0: c.append(Gate::h(q)); break;
      case 1: c.append(Gate::x(q)); break;
      case 2: c.append(Gate::t(q)); break;
      case 3: c.append(Gate::tdg(q)); break;
      case 4: c.append(Gate::one_qubit(GateKind::S, q)); break;
      case 5: c.append(Gate::rz(q, rng.unit() * kTwoPi)); break;
      case 6: c.append(Gate::rx(q, rng.unit() * kTwoPi)); break;
      default: c.append(Gate::ry(q, rng.unit() * kTwoPi)); break;
    }
  }
  return c;
}

}  // namespace qroute
