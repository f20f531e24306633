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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qroute {

enum class GateKind : std::uint8_t {
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  Rx,
  Ry,
  Rz,
  U1,
  U2,
  U3,
  Opaque,  // unknown one-qubit gate, kept by name
  Cx,
  Swap,
  Barrier,
  Measure,
};

constexpr bool is_two_qubit(GateKind k) {
  return k == GateKind::Cx || k == GateKind::Swap;
}

/// Number of angle parameters a kind carries; -1 for Opaque (variable).
constexpr int param_count(GateKind k) {
  switch (k) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::U1:
      return 1;
    case GateKind::U2:
      return 2;
    case GateKind::U3:
      return 3;
    case GateKind::Opaque:
      return -1;
    default:
      return 0;
  }
}

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Rx: return "rx";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::U1: return "u1";
    case GateKind::U2: return "u2";
    case GateKind::U3: return "u3";
    case GateKind::Opaque: return "opaque";
    case GateKind::Cx: return "cx";
    case GateKind::Swap: return "swap";
    case GateKind::Barrier: return "barrier";
    case GateKind::Measure: return "measure";
  }
  return "?";
}

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<std::int32_t> qubits;
  std::vector<double> params;
  std::int32_t cbit = -1;        // classical target of a measure
  std::int32_t seq_index = -1;   // position in the owning circuit
  std::string name;              // original mnemonic for Opaque gates

  static Gate one_qubit(GateKind k, std::int32_t q,
                        std::vector<double> params = {}) {
    Gate g;
    g.kind = k;
    g.qubits = {q};
    g.params = std::move(params);
    return g;
  }
  static Gate h(std::int32_t q) { return one_qubit(GateKind::H, q); }
  static Gate x(std::int32_t q) { return one_qubit(GateKind::X, q); }
  static Gate t(std::int32_t q) { return one_qubit(GateKind::T, q); }
  static Gate tdg(std::int32_t q) { return one_qubit(GateKind::Tdg, q); }
  static Gate rx(std::int32_t q, double a) {
    return one_qubit(GateKind::Rx, q, {a});
  }
  static Gate ry(std::int32_t q, double a) {
    return one_qubit(GateKind::Ry, q, {a});
  }
  static Gate rz(std::int32_t q, double a) {
    return one_qubit(GateKind::Rz, q, {a});
  }
  static Gate cx(std::int32_t control, std::int32_t target) {
    Gate g;
    g.kind = GateKind::Cx;
    g.qubits = {control, target};
    return g;
  }
  static Gate swap(std::int32_t a, std::int32_t b) {
    Gate g;
    g.kind = GateKind::Swap;
    g.qubits = {a, b};
    return g;
  }
  static Gate barrier(std::vector<std::int32_t> qs) {
    Gate g;
    g.kind = GateKind::Barrier;
    g.qubits = std::move(qs);
    return g;
  }
  static Gate measure(std::int32_t q, std::int32_t c) {
    Gate g;
    g.kind = GateKind::Measure;
    g.qubits = {q};
    g.cbit = c;
    return g;
  }
  static Gate opaque(std::string name, std::int32_t q,
                     std::vector<double> params = {}) {
    Gate g;
    g.kind = GateKind::Opaque;
    g.qubits = {q};
    g.params = std::move(params);
    g.name = std::move(name);
    return g;
  }

  bool is_two_qubit() const { return qroute::is_two_qubit(kind); }
  bool is_cx() const { return kind == GateKind::Cx; }

  /// Identity test ignoring circuit position.
  bool same_operation(const Gate& o) const {
    return kind == o.kind && qubits == o.qubits && params == o.params &&
           cbit == o.cbit && name == o.name;
  }
  friend bool operator==(const Gate& a, const Gate& b) {
    return a.same_operation(b);
  }
};

/// A gate list over `num_qubits` logical qubits. Gate order is program order;
/// `seq_index` of each gate equals its position.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::int32_t num_qubits, std::string register_name = "q")
      : num_qubits_(num_qubits), register_name_(std::move(register_name)) {
    if (num_qubits < 0) {
      throw std::invalid_argument("circuit: negative qubit count");
    }
  }

  std::int32_t num_qubits() const { return num_qubits_; }
  const std::string& register_name() const { return register_name_; }
  std::int32_t num_cbits() const { return num_cbits_; }
  void set_num_cbits(std::int32_t n) {
    if (n < min_cbits_) {
      throw std::invalid_argument("circuit: classical register too small");
    }
    num_cbits_ = n;
  }

  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::int32_t i) const { return gates_.at(i); }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Gates excluding barriers and measures: the count routing cares about.
  std::int64_t gate_count() const { return gate_count_; }
  std::int64_t two_qubit_count() const { return two_qubit_count_; }

  std::string qubit_name(std::int32_t q) const {
    return register_name_ + "[" + std::to_string(q) + "]";
  }
  std::vector<std::string> qubit_names() const {
    std::vector<std::string> names;
    names.reserve(num_qubits_);
    for (std::int32_t q = 0; q < num_qubits_; ++q) names.push_back(qubit_name(q));
    return names;
  }

  void append(Gate g) {
    validate(g);
    g.seq_index = static_cast<std::int32_t>(gates_.size());
    if (g.kind != GateKind::Barrier && g.kind != GateKind::Measure) {
      ++gate_count_;
      if (g.is_two_qubit()) ++two_qubit_count_;
    }
    if (g.kind == GateKind::Measure) {
      min_cbits_ = std::max(min_cbits_, g.cbit + 1);
      num_cbits_ = std::max(num_cbits_, min_cbits_);
    }
    gates_.push_back(std::move(g));
  }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits_ == b.num_qubits_ && a.gates_ == b.gates_ &&
           a.register_name_ == b.register_name_ && a.num_cbits_ == b.num_cbits_;
  }

 private:
  void validate(const Gate& g) const {
    const auto arity = static_cast<std::int32_t>(g.qubits.size());
    switch (g.kind) {
      case GateKind::Cx:
      case GateKind::Swap:
        if (arity != 2) throw std::invalid_argument("gate: needs two operands");
        break;
      case GateKind::Barrier:
        if (arity < 1) throw std::invalid_argument("barrier: needs operands");
        break;
      case GateKind::Measure:
        if (arity != 1 || g.cbit < 0) {
          throw std::invalid_argument("measure: needs one qubit and a cbit");
        }
        break;
      default:
        if (arity != 1) throw std::invalid_argument("gate: needs one operand");
        break;
    }
    const int np = param_count(g.kind);
    if (np >= 0 && static_cast<int>(g.params.size()) != np) {
      throw std::invalid_argument(std::string("gate: wrong parameter count for ") +
                                  gate_name(g.kind));
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (g.qubits[i] < 0 || g.qubits[i] >= num_qubits_) {
        throw std::invalid_argument("gate: operand out of range");
      }
      for (std::size_t j = i + 1; j < g.qubits.size(); ++j) {
        if (g.qubits[i] == g.qubits[j]) {
          throw std::invalid_argument("gate: duplicate operand");
        }
      }
    }
  }

  std::vector<Gate> gates_;
  std::int32_t num_qubits_ = 0;
  std::int32_t num_cbits_ = 0;
  std::int32_t min_cbits_ = 0;
  std::int64_t gate_count_ = 0;
  std::int64_t two_qubit_count_ = 0;
  std::string register_name_ = "q";
};

}  // namespace qroute
