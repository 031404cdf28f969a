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

#include "ssqite/circuit.hpp"

#include <algorithm>
#include <sstream>

namespace ssqite {

const char* to_string(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::kRX: return "RX";
    case GateKind::kRY: return "RY";
    case GateKind::kRZ: return "RZ";
    case GateKind::kCNOT: return "CNOT";
    case GateKind::kCSX: return "CSX";
    case GateKind::kX: return "X";
  }
  return "?";
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw Error(ErrorCode::kInvalidArgument, "qubit count " + std::to_string(num_qubits));
  }
}

Circuit& Circuit::add(const Gate& gate) {
  for (int i = 0; i < gate.arity(); ++i) {
    const int q = gate.qubits[static_cast<std::size_t>(i)];
    if (q < 0 || q >= num_qubits_) {
      throw Error(ErrorCode::kInvalidArgument, std::string(ssqite::to_string(gate.kind)) + " on qubit " +
                                                   std::to_string(q) + " of " + std::to_string(num_qubits_));
    }
  }
  if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw Error(ErrorCode::kInvalidArgument, "control equals target");
  }
  if (is_rotation(gate.kind) != gate.param_slot.has_value()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(ssqite::to_string(gate.kind)) + (is_rotation(gate.kind) ? " needs" : " takes no") +
                    " parameter slot");
  }
  if (gate.param_slot) {
    if (*gate.param_slot < 0) throw Error(ErrorCode::kSlotOutOfRange, "negative slot");
    num_params_ = std::max(num_params_, *gate.param_slot + 1);
  }
  gates_.push_back(gate);
  return *this;
}

bool Circuit::slots_dense() const {
  std::vector<bool> used(static_cast<std::size_t>(num_params_), false);
  for (const auto& g : gates_) {
    if (g.param_slot) used[static_cast<std::size_t>(*g.param_slot)] = true;
  }
  return std::all_of(used.begin(), used.end(), [](bool u) { return u; });
}

std::string Circuit::to_string() const {
  std::ostringstream os;
  os << "circuit " << num_qubits_ << " qubits, " << num_params_ << " params\n";
  for (const auto& g : gates_) {
    os << "  " << ssqite::to_string(g.kind);
    if (g.arity() == 2) {
      os << " q" << g.control() << " -> q" << g.target();
    } else {
      os << " q" << g.target();
    }
    if (g.param_slot) os << " theta[" << *g.param_slot << "]";
    os << '\n';
  }
  return os.str();
}

Circuit build_twolocal(int num_qubits, int rotation_layers) {
  if (num_qubits != 2) throw Error(ErrorCode::kInvalidArgument, "TwoLocal ansatz is defined for 2 qubits");
  if (rotation_layers < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one rotation layer");
  Circuit c(2);
  int slot = 0;
  for (int layer = 0; layer < rotation_layers; ++layer) {
    c.rx(0, slot).rx(1, slot + 1).ry(0, slot + 2).ry(1, slot + 3);
    slot += 4;
    if (layer + 1 < rotation_layers) c.cnot(0, 1);
  }
  return c;
}

void append_excitation_block(Circuit& c, int a, int b, int slot_a, int slot_b) {
  c.cnot(a, b).csx(b, a).cnot(a, b);
  c.rz(a, slot_a).rz(b, slot_b);
  c.cnot(a, b).csx(b, a).cnot(a, b);
}

Circuit build_excitation_preserving(int num_qubits, int blocks) {
  if (num_qubits != 3) {
    throw Error(ErrorCode::kInvalidArgument, "excitation-preserving ansatz is defined for 3 qubits");
  }
  if (blocks < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one block");
  Circuit c(3);
  for (int k = 0; k < blocks; ++k) {
    const int a = (k % 2 == 0) ? 0 : 1;
    append_excitation_block(c, a, a + 1, 2 * k, 2 * k + 1);
  }
  return c;
}

}  // namespace ssqite
