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

// Reference implementations used only by the tests. They share no code with
// the library: Pauli operators are built from Kronecker products, circuits
// from full 2^n x 2^n gate matrices.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "ssqite/circuit.hpp"
#include "ssqite/pauli.hpp"

namespace oracle {

using ssqite::Complex;
using ssqite::ComplexMatrix;
using ssqite::ComplexVector;
using ssqite::Real;
using ssqite::RealVector;

inline ComplexMatrix pauli_2x2(char p) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  switch (p) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli label");
  }
  return m;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

/// Leftmost label ends up as the most significant Kronecker factor.
inline ComplexMatrix pauli_kron(const std::string& label) {
  ComplexMatrix m = ComplexMatrix::Identity(1, 1);
  for (char p : label) m = kron(m, pauli_2x2(p));
  return m;
}

inline ComplexMatrix dense_sum(const std::vector<std::pair<Real, std::string>>& terms) {
  const auto dim = Eigen::Index{1} << terms.front().second.size();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& [c, s] : terms) m += c * pauli_kron(s);
  return m;
}

/// c = 2^-n Tr[m P].
inline Real trace_coefficient(const ComplexMatrix& m, const std::string& label) {
  return ((m * pauli_kron(label)).trace() / static_cast<Real>(m.rows())).real();
}

/// All 4^n labels in lexicographic I < X < Y < Z order.
inline std::vector<std::string> all_labels(int n) {
  std::vector<std::string> out{""};
  for (int q = 0; q < n; ++q) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (char p : {'I', 'X', 'Y', 'Z'}) next.push_back(s + p);
    }
    out = std::move(next);
  }
  return out;
}

inline ComplexMatrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<Real> g;
  ComplexMatrix a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = Complex(g(rng), g(rng));
  }
  return 0.5 * (a + a.adjoint());
}

inline ComplexVector random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<Real> g;
  ComplexVector v(dim);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return v / v.norm();
}

inline RealVector random_theta(Eigen::Index size, std::mt19937_64& rng, Real scale = M_PI) {
  std::uniform_real_distribution<Real> u(-scale, scale);
  RealVector t(size);
  for (auto& x : t) x = u(rng);
  return t;
}

/// 2x2 matrix of a single-qubit gate.
inline ComplexMatrix gate_2x2(ssqite::GateKind kind, Real theta) {
  const Complex i(0.0, 1.0);
  const Real c = std::cos(theta / 2), s = std::sin(theta / 2);
  ComplexMatrix m(2, 2);
  switch (kind) {
    case ssqite::GateKind::kRX: m << c, -i * s, -i * s, c; break;
    case ssqite::GateKind::kRY: m << c, -s, s, c; break;
    case ssqite::GateKind::kRZ: m << std::exp(-i * (theta / 2)), 0, 0, std::exp(i * (theta / 2)); break;
    case ssqite::GateKind::kX: m << 0, 1, 1, 0; break;
    case ssqite::GateKind::kCNOT: m << 0, 1, 1, 0; break;
    case ssqite::GateKind::kCSX: m << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5); break;
  }
  return m;
}

/// Full register matrix of one gate, assembled basis state by basis state.
inline ComplexMatrix gate_matrix(const ssqite::Gate& g, int n, const RealVector& theta) {
  const Real angle = g.param_slot ? theta[*g.param_slot] : 0.0;
  const ComplexMatrix u = gate_2x2(g.kind, angle);
  const auto dim = Eigen::Index{1} << n;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  const int t = g.target();
  for (Eigen::Index col = 0; col < dim; ++col) {
    if (g.arity() == 2 && !((col >> g.control()) & 1)) {
      m(col, col) = 1.0;
      continue;
    }
    const int bit = static_cast<int>((col >> t) & 1);
    for (int out = 0; out < 2; ++out) {
      const Eigen::Index row = (col & ~(Eigen::Index{1} << t)) | (Eigen::Index{out} << t);
      m(row, col) += u(out, bit);
    }
  }
  return m;
}

inline ComplexMatrix circuit_unitary(const ssqite::Circuit& c, const RealVector& theta) {
  const auto dim = Eigen::Index{1} << c.num_qubits();
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const auto& g : c.gates()) u = gate_matrix(g, c.num_qubits(), theta) * u;
  return u;
}

/// Central difference of U(theta)|s0> in slot i.
inline ComplexVector fd_derivative(const ssqite::Circuit& c, const RealVector& theta, int slot,
                                   const ComplexVector& s0, Real h = 1e-5) {
  RealVector p = theta, m = theta;
  p[slot] += h;
  m[slot] -= h;
  return (circuit_unitary(c, p) * s0 - circuit_unitary(c, m) * s0) / (2 * h);
}

inline Real dense_energy(const ComplexMatrix& h, const ComplexVector& v) { return v.dot(h * v).real(); }

/// Fixed-step classical RK4 with many sub-steps, for scalar reference flows.
template <typename F>
Real fine_rk4(F f, Real y, Real t_end, int steps = 100000) {
  const Real dt = t_end / steps;
  for (int s = 0; s < steps; ++s) {
    const Real k1 = f(y), k2 = f(y + 0.5 * dt * k1), k3 = f(y + 0.5 * dt * k2), k4 = f(y + dt * k3);
    y += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y;
}

}  // namespace oracle
