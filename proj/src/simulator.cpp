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

#include "ssqite/simulator.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace ssqite {

namespace {

using Mat2 = Eigen::Matrix2cd;
constexpr Complex kI{0.0, 1.0};

void apply_1q(ComplexVector& v, int q, const Mat2& u, std::uint64_t cmask = 0, std::uint64_t cval = 0) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  const auto dim = static_cast<std::uint64_t>(v.size());
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & bit) || (i & cmask) != cval) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | bit);
    const Complex a = v[i0];
    const Complex b = v[i1];
    v[i0] = u(0, 0) * a + u(0, 1) * b;
    v[i1] = u(1, 0) * a + u(1, 1) * b;
  }
}

Mat2 pauli_matrix(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::kI: m << 1, 0, 0, 1; break;
    case Pauli::kX: m << 0, 1, 1, 0; break;
    case Pauli::kY: m << 0, -kI, kI, 0; break;
    case Pauli::kZ: m << 1, 0, 0, -1; break;
  }
  return m;
}

Mat2 hadamard() {
  Mat2 m;
  const Real r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

Mat2 sqrt_x() {
  Mat2 m;
  m << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5);
  return m;
}

Pauli generator_of(GateKind kind) {
  switch (kind) {
    case GateKind::kRX: return Pauli::kX;
    case GateKind::kRY: return Pauli::kY;
    case GateKind::kRZ: return Pauli::kZ;
    default: return Pauli::kI;
  }
}

Mat2 rotation(GateKind kind, Real angle) {
  // exp(-i angle G / 2) = cos(angle/2) I - i sin(angle/2) G
  const Real c = std::cos(0.5 * angle);
  const Real s = std::sin(0.5 * angle);
  return c * Mat2::Identity() - kI * s * pauli_matrix(generator_of(kind));
}

void apply_gate(ComplexVector& v, const Gate& g, const RealVector& theta) {
  switch (g.kind) {
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ: apply_1q(v, g.target(), rotation(g.kind, theta[*g.param_slot])); break;
    case GateKind::kX: apply_1q(v, g.target(), pauli_matrix(Pauli::kX)); break;
    case GateKind::kCNOT: {
      const std::uint64_t cbit = std::uint64_t{1} << g.control();
      apply_1q(v, g.target(), pauli_matrix(Pauli::kX), cbit, cbit);
      break;
    }
    case GateKind::kCSX: {
      const std::uint64_t cbit = std::uint64_t{1} << g.control();
      apply_1q(v, g.target(), sqrt_x(), cbit, cbit);
      break;
    }
  }
}

// Multiplies by the rotation generator, optionally controlled on extra bits.
void apply_generator(ComplexVector& v, const Gate& g, std::uint64_t cmask = 0, std::uint64_t cval = 0) {
  apply_1q(v, g.target(), pauli_matrix(generator_of(g.kind)), cmask, cval);
}

void apply_pauli_controlled(ComplexVector& v, const PauliString& p, std::uint64_t cmask, std::uint64_t cval) {
  for (int q = 0; q < p.num_qubits(); ++q) {
    if (p.on_qubit(q) != Pauli::kI) apply_1q(v, q, pauli_matrix(p.on_qubit(q)), cmask, cval);
  }
}

void check_theta(const Circuit& c, const RealVector& theta) {
  if (theta.size() != c.num_params()) {
    throw Error(ErrorCode::kDimensionMismatch, "theta has " + std::to_string(theta.size()) + " entries, circuit " +
                                                   std::to_string(c.num_params()));
  }
}

void check_state(const Circuit& c, const Statevector& s) {
  if (s.num_qubits() != c.num_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch, "state has " + std::to_string(s.num_qubits()) + " qubits, circuit " +
                                                   std::to_string(c.num_qubits()));
  }
}

std::vector<std::size_t> gates_for_slot(const Circuit& c, int slot) {
  if (slot < 0 || slot >= c.num_params()) {
    throw Error(ErrorCode::kSlotOutOfRange, "slot " + std::to_string(slot) + " of " + std::to_string(c.num_params()));
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < c.gates().size(); ++k) {
    if (c.gates()[k].param_slot == slot) out.push_back(k);
  }
  return out;
}

// Ancilla (top bit) in |+>, system in s0.
ComplexVector ancilla_register(const Statevector& s0) {
  const Eigen::Index dim = s0.dimension();
  ComplexVector v(2 * dim);
  const Real r = 1.0 / std::sqrt(2.0);
  v.head(dim) = r * s0.amplitudes();
  v.tail(dim) = r * s0.amplitudes();
  return v;
}

Real ancilla_z(const ComplexVector& v) {
  const Eigen::Index half = v.size() / 2;
  return v.head(half).squaredNorm() - v.tail(half).squaredNorm();
}

// Interference of U with G inserted after gate `a` on the ancilla-0 branch,
// and either G after gate `b` or P at the end on the ancilla-1 branch.
ComplexVector interference_state(const Circuit& c, const RealVector& theta, const Statevector& s0, std::size_t a,
                                 std::optional<std::size_t> b, const PauliString* tail_pauli) {
  ComplexVector v = ancilla_register(s0);
  const std::uint64_t anc = std::uint64_t{1} << c.num_qubits();
  for (std::size_t k = 0; k < c.gates().size(); ++k) {
    const Gate& g = c.gates()[k];
    apply_gate(v, g, theta);
    if (k == a) apply_generator(v, g, anc, 0);
    if (b && k == *b) apply_generator(v, g, anc, anc);
  }
  if (tail_pauli != nullptr) apply_pauli_controlled(v, *tail_pauli, anc, anc);
  return v;
}

}  // namespace

Statevector::Statevector(int num_qubits, ComplexVector amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 1 || num_qubits > 30) throw Error(ErrorCode::kInvalidArgument, "bad qubit count");
  if (amps_.size() != (Eigen::Index{1} << num_qubits)) {
    throw Error(ErrorCode::kDimensionMismatch, "amplitude vector length " + std::to_string(amps_.size()));
  }
  if (std::abs(amps_.squaredNorm() - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kInvalidArgument, "state not normalized");
  }
}

Statevector Statevector::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 1 || num_qubits > 30 || index >= (std::uint64_t{1} << num_qubits)) {
    throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << num_qubits);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return Statevector(num_qubits, std::move(v));
}

Statevector Statevector::from_bitstring(std::string_view bits) {
  if (bits.empty()) throw Error(ErrorCode::kInvalidArgument, "empty bitstring");
  std::uint64_t index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw Error(ErrorCode::kInvalidArgument, "bad bitstring " + std::string(bits));
    index = (index << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return basis(static_cast<int>(bits.size()), index);
}

void apply_in_place(const Circuit& c, const RealVector& theta, ComplexVector& amps) {
  for (const auto& g : c.gates()) apply_gate(amps, g, theta);
}

Statevector apply(const Circuit& c, const RealVector& theta, const Statevector& s) {
  check_theta(c, theta);
  check_state(c, s);
  ComplexVector v = s.amplitudes();
  apply_in_place(c, theta, v);
  // renormalize away rounding drift so the invariant holds on long runs
  v /= v.norm();
  return Statevector(s.num_qubits(), std::move(v));
}

ComplexVector apply_pauli(const PauliString& p, const ComplexVector& v) {
  static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex base = kIPow[p.y_count() % 4];
  ComplexVector out(v.size());
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const Complex phase = (std::popcount(ub & p.z_mask()) % 2) ? -base : base;
    out[static_cast<Eigen::Index>(ub ^ p.x_mask())] = phase * v[b];
  }
  return out;
}

ComplexVector apply_hamiltonian(const PauliSum& h, const ComplexVector& v) {
  ComplexVector out = ComplexVector::Zero(v.size());
  for (const auto& t : h.terms()) out += t.coefficient * apply_pauli(t.string, v);
  return out;
}

Real expectation(const PauliSum& h, const Statevector& s) {
  if (h.num_qubits() != s.num_qubits()) throw Error(ErrorCode::kDimensionMismatch, "Hamiltonian/state qubits");
  return s.amplitudes().dot(apply_hamiltonian(h, s.amplitudes())).real();
}

Complex overlap(const Statevector& a, const Statevector& b) {
  if (a.num_qubits() != b.num_qubits()) throw Error(ErrorCode::kDimensionMismatch, "overlap of unequal registers");
  return a.amplitudes().dot(b.amplitudes());
}

ComplexVector derivative_state(const Circuit& c, const RealVector& theta, int slot, const Statevector& s0) {
  check_theta(c, theta);
  check_state(c, s0);
  const auto owners = gates_for_slot(c, slot);
  ComplexVector total = ComplexVector::Zero(s0.dimension());
  for (std::size_t a : owners) {
    ComplexVector v = s0.amplitudes();
    for (std::size_t k = 0; k < c.gates().size(); ++k) {
      apply_gate(v, c.gates()[k], theta);
      if (k == a) {
        apply_generator(v, c.gates()[k]);
        v *= Complex(0.0, -0.5);
      }
    }
    total += v;
  }
  return total;
}

ComplexMatrix derivative_states(const Circuit& c, const RealVector& theta, const Statevector& s0) {
  check_theta(c, theta);
  check_state(c, s0);
  const Eigen::Index dim = s0.dimension();
  // One pending vector per rotation gate, pushed through the remaining gates.
  std::vector<ComplexVector> pending;
  std::vector<int> pending_slot;
  ComplexVector v = s0.amplitudes();
  for (const auto& g : c.gates()) {
    apply_gate(v, g, theta);
    for (auto& p : pending) apply_gate(p, g, theta);
    if (g.param_slot) {
      ComplexVector d = v;
      apply_generator(d, g);
      pending.push_back(Complex(0.0, -0.5) * d);
      pending_slot.push_back(*g.param_slot);
    }
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim, c.num_params());
  for (std::size_t k = 0; k < pending.size(); ++k) out.col(pending_slot[k]) += pending[k];
  return out;
}

Real hadamard_test(const Circuit& c, const RealVector& theta, int slot, const HadamardOperand& operand,
                   HadamardMode mode, const Statevector& s0) {
  check_theta(c, theta);
  check_state(c, s0);
  const int anc_qubit = c.num_qubits();

  if (mode == HadamardMode::kAReal) {
    const int* other = std::get_if<int>(&operand);
    if (other == nullptr) throw Error(ErrorCode::kUnsupportedMode, "A-real needs a second parameter slot");
    const auto left = gates_for_slot(c, slot);
    const auto right = gates_for_slot(c, *other);
    Real sum = 0.0;
    for (std::size_t a : left) {
      for (std::size_t b : right) {
        ComplexVector v = interference_state(c, theta, s0, a, b, nullptr);
        apply_1q(v, anc_qubit, hadamard());  // <Z> after H is <X>
        sum += ancilla_z(v);
      }
    }
    // (i/2)(-i/2) from the two generator insertions
    return 0.25 * sum;
  }

  if (mode == HadamardMode::kCReal) {
    const PauliSum* h = std::get_if<PauliSum>(&operand);
    if (h == nullptr) throw Error(ErrorCode::kUnsupportedMode, "C-real needs the Hamiltonian operand");
    if (h->num_qubits() != c.num_qubits()) throw Error(ErrorCode::kDimensionMismatch, "Hamiltonian/circuit qubits");
    Mat2 sdg;
    sdg << 1, 0, 0, -kI;
    Real sum = 0.0;
    for (std::size_t a : gates_for_slot(c, slot)) {
      for (const auto& term : h->terms()) {
        ComplexVector v = interference_state(c, theta, s0, a, std::nullopt, &term.string);
        apply_1q(v, anc_qubit, sdg);
        apply_1q(v, anc_qubit, hadamard());  // <Z> after H S^dagger is <Y>
        sum += term.coefficient * ancilla_z(v);
      }
    }
    // -Re(i/2 <Psi_a|H|psi>) = 1/2 Im<Psi_a|H|psi>
    return 0.5 * sum;
  }
  throw Error(ErrorCode::kUnsupportedMode, "unknown Hadamard-test mode");
}

Real sample_expectation(const PauliSum& h, const Statevector& s, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw Error(ErrorCode::kZeroShots, "shots must be positive");
  if (h.num_qubits() != s.num_qubits()) throw Error(ErrorCode::kDimensionMismatch, "Hamiltonian/state qubits");
  std::mt19937_64 rng(seed);
  Mat2 sdg;
  sdg << 1, 0, 0, -kI;
  Real total = 0.0;
  for (const auto& term : h.terms()) {
    if (term.string.is_identity()) {
      total += term.coefficient;
      continue;
    }
    ComplexVector v = s.amplitudes();
    std::uint64_t support = 0;
    for (int q = 0; q < s.num_qubits(); ++q) {
      const Pauli p = term.string.on_qubit(q);
      if (p == Pauli::kI) continue;
      support |= std::uint64_t{1} << q;
      if (p == Pauli::kY) apply_1q(v, q, sdg);
      if (p != Pauli::kZ) apply_1q(v, q, hadamard());
    }
    const RealVector probs = v.cwiseAbs2();
    std::discrete_distribution<std::uint64_t> outcome(probs.data(), probs.data() + probs.size());
    std::int64_t sum = 0;
    for (std::int64_t k = 0; k < shots; ++k) {
      sum += (std::popcount(outcome(rng) & support) % 2) ? -1 : 1;
    }
    total += term.coefficient * static_cast<Real>(sum) / static_cast<Real>(shots);
  }
  return total;
}

}  // namespace ssqite
