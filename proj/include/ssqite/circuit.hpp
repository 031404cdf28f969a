// Copyright 2026 The SSQITE Authors
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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ssqite/types.hpp"

namespace ssqite {

enum class GateKind { kRX, kRY, kRZ, kCNOT, kCSX, kX };

const char* to_string(GateKind kind) noexcept;

inline bool is_rotation(GateKind kind) noexcept {
  return kind == GateKind::kRX || kind == GateKind::kRY || kind == GateKind::kRZ;
}

/// One circuit element. Two-qubit gates store {control, target}.
/// Rotations are R_G(theta) = exp(-i theta G / 2) with theta = params[param_slot].
struct Gate {
  GateKind kind;
  std::array<int, 2> qubits{-1, -1};
  std::optional<int> param_slot;

  int arity() const noexcept { return (kind == GateKind::kCNOT || kind == GateKind::kCSX) ? 2 : 1; }
  int target() const noexcept { return arity() == 2 ? qubits[1] : qubits[0]; }
  int control() const noexcept { return arity() == 2 ? qubits[0] : -1; }
};

/// Ordered gate list over a fixed register with shared parameter slots.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  Circuit& rx(int q, int slot) { return add({GateKind::kRX, {q, -1}, slot}); }
  Circuit& ry(int q, int slot) { return add({GateKind::kRY, {q, -1}, slot}); }
  Circuit& rz(int q, int slot) { return add({GateKind::kRZ, {q, -1}, slot}); }
  Circuit& x(int q) { return add({GateKind::kX, {q, -1}, std::nullopt}); }
  Circuit& cnot(int control, int target) { return add({GateKind::kCNOT, {control, target}, std::nullopt}); }
  Circuit& csx(int control, int target) { return add({GateKind::kCSX, {control, target}, std::nullopt}); }

  /// Validates and appends; throws on bad qubits or slot/kind mismatch.
  Circuit& add(const Gate& gate);

  int num_qubits() const noexcept { return num_qubits_; }
  int num_params() const noexcept { return num_params_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  /// True when every slot in [0, num_params) is used by some gate.
  bool slots_dense() const;

  std::string to_string() const;

 private:
  int num_qubits_;
  int num_params_ = 0;
  std::vector<Gate> gates_;
};

/// Hardware-efficient two-qubit ansatz: `rotation_layers` layers of
/// RX(q0) RX(q1) RY(q0) RY(q1) with a CNOT(q0 -> q1) between consecutive
/// layers (no trailing CNOT). Slots are numbered in that gate order.
Circuit build_twolocal(int num_qubits = 2, int rotation_layers = 4);

/// Appends the two-parameter excitation-preserving block on (a, b):
/// CNOT(a->b) CSX(b->a) CNOT(a->b) RZ_a RZ_b CNOT(a->b) CSX(b->a) CNOT(a->b).
void append_excitation_block(Circuit& c, int a, int b, int slot_a, int slot_b);

/// Three-qubit Hamming-weight preserving ansatz: `blocks` two-qubit blocks
/// alternating on (q0, q1) and (q1, q2), two slots per block.
Circuit build_excitation_preserving(int num_qubits = 3, int blocks = 8);

}  // namespace ssqite
