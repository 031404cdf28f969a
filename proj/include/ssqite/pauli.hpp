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
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ssqite/types.hpp"

namespace ssqite {

enum class Pauli : std::uint8_t { kI, kX, kY, kZ };

/// Tensor product of single-qubit Pauli operators.
///
/// Position 0 is the leftmost character of the textual form and acts on the
/// highest-numbered qubit, i.e. "XZ" is X on qubit 1 and Z on qubit 0 and
/// basis index b has qubit q stored in bit q.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> ops);

  int num_qubits() const noexcept { return static_cast<int>(ops_.size()); }
  Pauli operator[](std::size_t pos) const { return ops_[pos]; }
  const std::vector<Pauli>& ops() const noexcept { return ops_; }

  /// Operator acting on qubit q.
  Pauli on_qubit(int q) const { return ops_[ops_.size() - 1 - static_cast<std::size_t>(q)]; }

  /// Bits flipped by the string (X or Y positions).
  std::uint64_t x_mask() const noexcept { return x_mask_; }
  /// Bits picking up a sign (Z or Y positions).
  std::uint64_t z_mask() const noexcept { return z_mask_; }
  int y_count() const noexcept { return y_count_; }
  bool is_identity() const noexcept { return x_mask_ == 0 && z_mask_ == 0; }

  std::string to_string() const;

  friend bool operator==(const PauliString& a, const PauliString& b) { return a.ops_ == b.ops_; }
  friend bool operator<(const PauliString& a, const PauliString& b) { return a.ops_ < b.ops_; }

 private:
  std::vector<Pauli> ops_;
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
  int y_count_ = 0;
};

PauliString parse_pauli_string(std::string_view text);

struct PauliTerm {
  Real coefficient;
  PauliString string;
};

/// Real-weighted sum of Pauli strings on a fixed register.
///
/// Terms with equal strings are merged by adding coefficients; first
/// occurrence fixes the term order.
class PauliSum {
 public:
  explicit PauliSum(int num_qubits);
  PauliSum(int num_qubits, const std::vector<PauliTerm>& terms);

  void add_term(Real coefficient, const PauliString& string);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of `string`, zero when absent.
  Real coefficient(const PauliString& string) const;

 private:
  int num_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Convenience: {{1.0, "ZI"}, {0.5, "XX"}} style construction.
PauliSum make_pauli_sum(const std::vector<std::pair<Real, std::string>>& terms);

ComplexMatrix to_dense(const PauliString& p);
ComplexMatrix to_dense(const PauliSum& h);

/// Projects a Hermitian matrix onto the Pauli basis, c_j = 2^-n Tr[m P_j].
PauliSum decompose_dense(const ComplexMatrix& m, Real drop_tol = 1e-12, Real hermitian_tol = 1e-10);

struct GeometryPoint {
  Real bond_length;  // Angstrom
  PauliSum hamiltonian;
};

struct GeometrySeries {
  std::string label;
  std::vector<GeometryPoint> points;

  int num_qubits() const { return points.empty() ? 0 : points.front().hamiltonian.num_qubits(); }
};

GeometrySeries parse_geometry_series(std::istream& in);
GeometrySeries load_geometry_series(const std::filesystem::path& path);

}  // namespace ssqite
