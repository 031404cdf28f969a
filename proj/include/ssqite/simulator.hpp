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

#include <cstdint>
#include <variant>

#include "ssqite/circuit.hpp"
#include "ssqite/pauli.hpp"
#include "ssqite/types.hpp"

namespace ssqite {

/// Normalized pure state of an n-qubit register; amplitude b stores basis
/// state |b>, qubit q being bit q of b.
class Statevector {
 public:
  /// Throws kInvalidArgument unless the vector has length 2^n and unit norm.
  Statevector(int num_qubits, ComplexVector amplitudes);

  static Statevector basis(int num_qubits, std::uint64_t index);
  /// Parses a bitstring such as "010"; leftmost character is the highest qubit.
  static Statevector from_bitstring(std::string_view bits);

  int num_qubits() const noexcept { return num_qubits_; }
  Eigen::Index dimension() const noexcept { return amps_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  Complex operator[](Eigen::Index i) const { return amps_[i]; }

 private:
  int num_qubits_;
  ComplexVector amps_;
};

inline constexpr Real kNormTolerance = 1e-10;

/// U(theta)|s>.
Statevector apply(const Circuit& c, const RealVector& theta, const Statevector& s);

/// In-place variant on a raw amplitude vector (no normalization checks).
void apply_in_place(const Circuit& c, const RealVector& theta, ComplexVector& amps);

/// P|v> for a raw amplitude vector.
ComplexVector apply_pauli(const PauliString& p, const ComplexVector& v);
/// H|v> for a raw amplitude vector.
ComplexVector apply_hamiltonian(const PauliSum& h, const ComplexVector& v);

Real expectation(const PauliSum& h, const Statevector& s);
Complex overlap(const Statevector& a, const Statevector& b);

/// d/dtheta_i of U(theta)|s0>, summed over every gate that reads slot i.
ComplexVector derivative_state(const Circuit& c, const RealVector& theta, int slot, const Statevector& s0);

/// All parameter derivatives at once; column i is derivative_state(..., i, ...).
ComplexMatrix derivative_states(const Circuit& c, const RealVector& theta, const Statevector& s0);

enum class HadamardMode {
  kAReal,  // Re<d_i phi | d_j phi>
  kCReal,  // -Re<d_i phi | H | phi>
};

/// Second operand of a Hadamard test: another slot (A entries) or the
/// Hamiltonian (C entries).
using HadamardOperand = std::variant<int, PauliSum>;

/// Builds the ancilla-assisted interference circuit for one McLachlan entry
/// and returns the exact ancilla expectation (infinite-shot limit), scaled to
/// the matrix-element convention above.
Real hadamard_test(const Circuit& c, const RealVector& theta, int slot, const HadamardOperand& operand,
                   HadamardMode mode, const Statevector& s0);

/// Shot-sampled <h>; each non-identity term is measured in its own eigenbasis
/// with `shots` independent draws. Deterministic for a fixed seed.
Real sample_expectation(const PauliSum& h, const Statevector& s, std::int64_t shots, std::uint64_t seed);

}  // namespace ssqite
