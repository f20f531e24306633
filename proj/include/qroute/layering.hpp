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
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

enum class LayeringMode { Fine, Coarse };

inline const char* layering_name(LayeringMode m) {
  return m == LayeringMode::Fine ? "fine" : "coarse";
}

/// How a gate acts on one of its operands, for commutation purposes.
enum class QubitRole : std::uint8_t {
  ZRotation,  // diagonal one-qubit gates: z, s, sdg, t, tdg, rz, u1
  XRotation,  // x, rx
  Control,    // CNOT control
  Target,     // CNOT target
  Other,      // everything else; commutes with nothing
};

inline QubitRole role_on(const Gate& g, std::int32_t q) {
  switch (g.kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz:
    case GateKind::U1:
      return QubitRole::ZRotation;
    case GateKind::X:
    case GateKind::Rx:
      return QubitRole::XRotation;
    case GateKind::Cx:
      return q == g.qubits[0] ? QubitRole::Control : QubitRole::Target;
    default:
      return QubitRole::Other;
  }
}

/// The four recognized commuting role pairs on a shared qubit: Z-rotation
/// with a control, control with control, X-rotation with a target, target
/// with target. Every other combination is treated as conflicting.
inline bool roles_commute(QubitRole a, QubitRole b) {
  auto zc = [](QubitRole x, QubitRole y) {
    return (x == QubitRole::ZRotation || x == QubitRole::Control) &&
           (y == QubitRole::ZRotation || y == QubitRole::Control) &&
           !(x == QubitRole::ZRotation && y == QubitRole::ZRotation);
  };
  auto xt = [](QubitRole x, QubitRole y) {
    return (x == QubitRole::XRotation || x == QubitRole::Target) &&
           (y == QubitRole::XRotation || y == QubitRole::Target) &&
           !(x == QubitRole::XRotation && y == QubitRole::XRotation);
  };
  return zc(a, b) || xt(a, b);
}

/// True when the two gates may be freely reordered: either they act on
/// disjoint qubits, or every shared qubit falls under a recognized commuting
/// role pair.
inline bool commutes(const Gate& a, const Gate& b) {
  for (std::int32_t qa : a.qubits) {
    for (std::int32_t qb : b.qubits) {
      if (qa == qb && !roles_commute(role_on(a, qa), role_on(b, qb))) {
        return false;
      }
    }
  }
  return true;
}

/// Assignment of gates to 1-based layers. `layer_of` is indexed by gate
/// seq_index; 0 marks gates outside the covered subsequence. `layers[k]`
/// holds the gate ids of layer k+1 in ascending program order.
struct Layering {
  std::vector<std::int32_t> layer_of;
  std::vector<std::vector<std::int32_t>> layers;

  std::int32_t layer(std::int32_t gate) const { return layer_of.at(gate); }
  std::int32_t num_layers() const {
    return static_cast<std::int32_t>(layers.size());
  }
  const std::vector<std::int32_t>& front() const {
    static const std::vector<std::int32_t> kEmpty;
    return layers.empty() ? kEmpty : layers.front();
  }
  /// Covered gate ids, ascending.
  std::vector<std::int32_t> domain() const {
    std::vector<std::int32_t> d;
    for (std::size_t i = 0; i < layer_of.size(); ++i) {
      if (layer_of[i] > 0) d.push_back(static_cast<std::int32_t>(i));
    }
    return d;
  }
};

/// Earliest-fit layering of a subsequence of gates: each gate lands one past
/// the deepest earlier gate it conflicts with (layer 1 when there is none).
/// Fine mode treats any shared qubit as a conflict; coarse mode exempts the
/// recognized commuting role pairs.
inline Layering build_layering(const Circuit& c,
                               std::span<const std::int32_t> gates,
                               LayeringMode mode) {
  constexpr int kRoles = 5;
  const std::int32_t m = c.num_qubits();
  std::vector<std::array<std::int32_t, kRoles>> frontier(
      m, std::array<std::int32_t, kRoles>{0, 0, 0, 0, 0});
  Layering out;
  out.layer_of.assign(c.size(), 0);
  for (std::int32_t id : gates) {
    const Gate& g = c.gate(id);
    std::int32_t layer = 1;
    for (std::int32_t q : g.qubits) {
      const QubitRole role = role_on(g, q);
      for (int r = 0; r < kRoles; ++r) {
        const bool conflicting =
            mode == LayeringMode::Fine ||
            !roles_commute(role, static_cast<QubitRole>(r));
        if (conflicting) layer = std::max(layer, frontier[q][r] + 1);
      }
    }
    for (std::int32_t q : g.qubits) {
      auto& f = frontier[q][static_cast<int>(role_on(g, q))];
      f = std::max(f, layer);
    }
    out.layer_of[id] = layer;
    if (static_cast<std::size_t>(layer) > out.layers.size()) {
      out.layers.resize(layer);
    }
    out.layers[layer - 1].push_back(id);
  }
  return out;
}

inline Layering build_layering(const Circuit& c, LayeringMode mode) {
  std::vector<std::int32_t> all(c.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = static_cast<std::int32_t>(i);
  }
  return build_layering(c, all, mode);
}

/// Layering of the previous domain minus `removed`. Every removed gate must
/// sit in the previous first layer; anything else throws.
inline Layering relayer_after_removal(const Layering& prev,
                                      const std::vector<std::int32_t>& removed,
                                      const Circuit& c, LayeringMode mode) {
  std::vector<char> drop(c.size(), 0);
  for (std::int32_t id : removed) {
    if (id < 0 || static_cast<std::size_t>(id) >= c.size() ||
        prev.layer_of[id] != 1) {
      throw std::invalid_argument(
          "relayer_after_removal: gate " + std::to_string(id) +
          " is not in the first layer");
    }
    drop[id] = 1;
  }
  std::vector<std::int32_t> kept;
  for (std::size_t i = 0; i < prev.layer_of.size(); ++i) {
    if (prev.layer_of[i] > 0 && !drop[i]) {
      kept.push_back(static_cast<std::int32_t>(i));
    }
  }
  return build_layering(c, kept, mode);
}

/// Reusable earliest-fit scanner for the router's hot loop. Precomputes a
/// compact per-gate operand/role table once, then `run` recomputes the first
/// layer and the first `horizon` two-qubit gates (by layer, then program
/// order) over any remaining-gate subsequence without heap churn.
class LayerScan {
 public:
  struct HorizonGate {
    std::int32_t gate;
    std::int32_t layer;
    std::int32_t a, b;  // CNOT operands
  };

  LayerScan(const Circuit& c, std::int32_t horizon)
      : circuit_(&c), horizon_(horizon) {
    const auto& gates = c.gates();
    info_.resize(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      GateInfo& fi = info_[i];
      fi.multi = g.qubits.size() > 2;
      fi.cx = g.kind == GateKind::Cx;
      fi.a = g.qubits[0];
      fi.role_a = static_cast<std::uint8_t>(role_on(g, fi.a));
      if (g.qubits.size() >= 2 && !fi.multi) {
        fi.b = g.qubits[1];
        fi.role_b = static_cast<std::uint8_t>(role_on(g, fi.b));
      } else {
        fi.b = -1;
      }
    }
    frontier_.resize(static_cast<std::size_t>(c.num_qubits()) * kRoles);
    for (int a = 0; a < kRoles; ++a) {
      for (int b = 0; b < kRoles; ++b) {
        conflict_coarse_[a][b] = !roles_commute(static_cast<QubitRole>(a),
                                                static_cast<QubitRole>(b));
      }
    }
  }

  void run(std::span<const std::int32_t> remaining, LayeringMode mode) {
    std::fill(frontier_.begin(), frontier_.end(), 0);
    front_.clear();
    heap_.clear();
    num_layers_ = 0;
    const bool fine = mode == LayeringMode::Fine;
    for (std::int32_t id : remaining) {
      const GateInfo& fi = info_[id];
      std::int32_t layer;
      if (fi.multi) [[unlikely]] {
        layer = place_multi(id);
      } else {
        layer = conflict_layer(fi.a, fi.role_a, fine);
        if (fi.b >= 0) {
          layer = std::max(layer, conflict_layer(fi.b, fi.role_b, fine));
        }
        bump(fi.a, fi.role_a, layer);
        if (fi.b >= 0) bump(fi.b, fi.role_b, layer);
      }
      num_layers_ = std::max(num_layers_, layer);
      if (layer == 1) front_.push_back(id);
      if (fi.cx && horizon_ > 0) {
        if (static_cast<std::int32_t>(heap_.size()) < horizon_) {
          heap_.push_back({id, layer, fi.a, fi.b});
          std::push_heap(heap_.begin(), heap_.end(), earlier);
        } else if (earlier({id, layer, fi.a, fi.b}, heap_.front())) {
          std::pop_heap(heap_.begin(), heap_.end(), earlier);
          heap_.back() = {id, layer, fi.a, fi.b};
          std::push_heap(heap_.begin(), heap_.end(), earlier);
        }
      }
    }
    std::sort(heap_.begin(), heap_.end(), [](const auto& x, const auto& y) {
      return x.layer != y.layer ? x.layer < y.layer : x.gate < y.gate;
    });
  }

  const std::vector<std::int32_t>& front() const { return front_; }
  const std::vector<HorizonGate>& horizon() const { return heap_; }
  std::int32_t num_layers() const { return num_layers_; }
  std::int32_t horizon_size() const { return horizon_; }

 private:
  static constexpr int kRoles = 5;

  struct GateInfo {
    std::int32_t a, b;
    std::uint8_t role_a = 0, role_b = 0;
    bool multi = false, cx = false;
  };

  static bool earlier(const HorizonGate& x, const HorizonGate& y) {
    return x.layer != y.layer ? x.layer < y.layer : x.gate < y.gate;
  }

  std::int32_t conflict_layer(std::int32_t q, std::uint8_t role,
                              bool fine) const {
    const std::int32_t* f = frontier_.data() + q * kRoles;
    std::int32_t layer = 1;
    for (int r = 0; r < kRoles; ++r) {
      if (fine || conflict_coarse_[role][r]) layer = std::max(layer, f[r] + 1);
    }
    return layer;
  }

  void bump(std::int32_t q, std::uint8_t role, std::int32_t layer) {
    auto& f = frontier_[q * kRoles + role];
    f = std::max(f, layer);
  }

  std::int32_t place_multi(std::int32_t id) {
    const Gate& g = circuit_->gate(id);
    std::int32_t layer = 1;
    for (std::int32_t q : g.qubits) {
      const std::int32_t* f = frontier_.data() + q * kRoles;
      for (int r = 0; r < kRoles; ++r) layer = std::max(layer, f[r] + 1);
    }
    for (std::int32_t q : g.qubits) {
      bump(q, static_cast<std::uint8_t>(QubitRole::Other), layer);
    }
    return layer;
  }

  const Circuit* circuit_;
  std::int32_t horizon_;
  std::vector<GateInfo> info_;
  std::vector<std::int32_t> frontier_;
  std::vector<std::int32_t> front_;
  std::vector<HorizonGate> heap_;
  std::int32_t num_layers_ = 0;
  bool conflict_coarse_[kRoles][kRoles] = {};
};

}  // namespace qroute
