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

// Regenerates the bundled workload suite under benchmarks/. Two families:
//
//  * transverse-field Ising chains: field preparation plus ten first-order
//    Trotter steps (CX-RZ-CX per chain pair, then RZ and RX on every qubit);
//  * reversible-arithmetic style netlists: a deterministic interleaving of
//    Toffolis (standard 15-gate decomposition), bare CNOTs, and X gates,
//    with carry-chain operand locality.
//
// Every circuit's qubit and gate counts are fixed by the tables below and
// re-checked after generation.

#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/qasm.hpp"
#include "qroute/rng.hpp"

namespace {

using qroute::Circuit;
using qroute::Gate;
using qroute::Rng;

constexpr double kTwoPi = 6.28318530717958647692;

Circuit ising_chain(std::int32_t qubits, std::uint64_t seed) {
  Rng rng(seed);
  Circuit c(qubits);
  auto angle = [&rng]() { return rng.unit() * kTwoPi; };
  for (std::int32_t q = 0; q < qubits; ++q) c.append(Gate::h(q));
  constexpr int kSteps = 10;
  for (int step = 0; step < kSteps; ++step) {
    for (std::int32_t q = 0; q + 1 < qubits; ++q) {
      c.append(Gate::cx(q, q + 1));
      c.append(Gate::rz(q + 1, angle()));
      c.append(Gate::cx(q, q + 1));
    }
    for (std::int32_t q = 0; q < qubits; ++q) {
      c.append(Gate::rz(q, angle()));
      c.append(Gate::rx(q, angle()));
    }
  }
  return c;
}

// 15 gates, 6 of them CNOTs.
void append_toffoli(Circuit& c, std::int32_t a, std::int32_t b, std::int32_t t) {
  c.append(Gate::h(t));
  c.append(Gate::cx(b, t));
  c.append(Gate::tdg(t));
  c.append(Gate::cx(a, t));
  c.append(Gate::t(t));
  c.append(Gate::cx(b, t));
  c.append(Gate::tdg(t));
  c.append(Gate::cx(a, t));
  c.append(Gate::t(b));
  c.append(Gate::t(t));
  c.append(Gate::h(t));
  c.append(Gate::cx(a, b));
  c.append(Gate::t(a));
  c.append(Gate::tdg(b));
  c.append(Gate::cx(a, b));
}

struct NetlistSpec {
  std::int32_t qubits;
  std::int64_t toffolis;
  std::int64_t cnots;
  std::int64_t nots;
  std::uint64_t seed;
};

// The carry-chain window sweeps up and down the register like a
// ripple-carry compute/uncompute pass; a small fraction of operations
// touch a random qubit instead.
Circuit arithmetic_netlist(const NetlistSpec& spec) {
  Rng rng(spec.seed);
  Circuit c(spec.qubits);
  const std::int32_t m = spec.qubits;
  std::int32_t window = 0;
  std::int32_t dir = 1;
  auto advance_window = [&]() {
    if (!rng.chance(0.6)) return;
    if (window + dir < 0 || window + dir > m - 3) dir = -dir;
    window += dir;
  };
  std::int64_t toffolis = spec.toffolis, cnots = spec.cnots, nots = spec.nots;
  while (toffolis + cnots + nots > 0) {
    const auto pick = static_cast<std::int64_t>(
        rng.below(static_cast<std::size_t>(toffolis + cnots + nots)));
    if (pick < toffolis) {
      append_toffoli(c, window, window + 1, window + 2);
      --toffolis;
      advance_window();
    } else if (pick < toffolis + cnots) {
      std::int32_t a, b;
      if (rng.chance(0.8)) {
        a = window;
        b = window + 1;
      } else {
        a = static_cast<std::int32_t>(rng.below(m));
        b = static_cast<std::int32_t>(rng.below(m - 1));
        if (b >= a) ++b;
      }
      c.append(Gate::cx(a, b));
      --cnots;
      if (rng.chance(0.3)) advance_window();
    } else {
      c.append(Gate::x(static_cast<std::int32_t>(rng.below(m))));
      --nots;
    }
  }
  return c;
}

struct Entry {
  std::string name;
  std::int32_t qubits;
  std::int64_t gates;
  Circuit circuit;
};

std::vector<Entry> build_suite() {
  std::vector<Entry> suite;
  auto add = [&suite](std::string name, std::int32_t qubits, std::int64_t gates,
                      Circuit c) {
    if (c.num_qubits() != qubits ||
        static_cast<std::int64_t>(c.size()) != gates) {
      throw std::logic_error(name + ": generated " + std::to_string(c.size()) +
                             " gates on " + std::to_string(c.num_qubits()) +
                             " qubits, expected " + std::to_string(gates) +
                             " on " + std::to_string(qubits));
    }
    suite.push_back({std::move(name), qubits, gates, std::move(c)});
  };

  add("ising_model_10", 10, 480, ising_chain(10, 1001));
  add("ising_model_13", 13, 633, ising_chain(13, 1002));
  add("ising_model_16", 16, 786, ising_chain(16, 1003));

  // 15*T + C + X gate identities per circuit.
  add("4mod5-v1_22", 5, 21, arithmetic_netlist({5, 1, 5, 1, 2001}));
  add("mod5mils_65", 5, 35, arithmetic_netlist({5, 2, 4, 1, 2002}));
  add("alu-v0_27", 5, 36, arithmetic_netlist({5, 2, 5, 1, 2003}));
  add("decod24-v2_43", 4, 52, arithmetic_netlist({4, 3, 4, 3, 2004}));
  add("4gt13_92", 5, 66, arithmetic_netlist({5, 4, 6, 0, 2005}));
  add("rd84_142", 15, 343, arithmetic_netlist({15, 21, 28, 0, 2006}));
  add("adr4_197", 13, 3439, arithmetic_netlist({13, 215, 208, 6, 2007}));
  add("sym9_193", 10, 34881, arithmetic_netlist({10, 2178, 2164, 47, 2008}));
  return suite;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_dir = "benchmarks";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--out-dir" && i + 1 < argc) {
      out_dir = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--out-dir DIR]\n", argv[0]);
      return 2;
    }
  }
  try {
    std::filesystem::create_directories(out_dir);
    for (const Entry& e : build_suite()) {
      const std::string path = out_dir + "/" + e.name + ".qasm";
      qroute::write_qasm_file(e.circuit, path);
      std::printf("%-16s %3d qubits %6lld gates -> %s\n", e.name.c_str(),
                  e.qubits, static_cast<long long>(e.gates), path.c_str());
    }
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 0;
}
