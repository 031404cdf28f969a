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

#include "ssqite/exact.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace ssqite {

int Spectrum::num_qubits() const {
  return std::countr_zero(static_cast<std::uint64_t>(eigenvalues.size()));
}

Statevector Spectrum::state(Eigen::Index j) const {
  ComplexVector v = eigenvectors.col(j);
  return Statevector(num_qubits(), v / v.norm());
}

Spectrum eigensolve(const PauliSum& h) {
  if (h.num_qubits() > kMaxDenseQubits) {
    throw Error(ErrorCode::kTooManyQubits, std::to_string(h.num_qubits()) + " qubits");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(to_dense(h));
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::kInvalidArgument, "eigensolver did not converge");

  Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index j = 0; j < s.eigenvectors.cols(); ++j) {
    auto col = s.eigenvectors.col(j);
    const Real peak = col.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(col[pivot]) < peak - 1e-12) ++pivot;
    col *= std::conj(col[pivot]) / std::abs(col[pivot]);
    col[pivot] = std::abs(col[pivot]);
  }
  return s;
}

ReferenceCurve reference_curve(const GeometrySeries& series, int k) {
  ReferenceCurve curve;
  if (series.points.empty()) return curve;
  const Eigen::Index dim = Eigen::Index{1} << series.num_qubits();
  if (k < 1 || k > dim) {
    throw Error(ErrorCode::kInvalidArgument, "k = " + std::to_string(k) + " outside [1, " + std::to_string(dim) + "]");
  }
  curve.energies.resize(static_cast<Eigen::Index>(series.points.size()), k);
  for (std::size_t g = 0; g < series.points.size(); ++g) {
    const Spectrum s = eigensolve(series.points[g].hamiltonian);
    curve.bond_lengths.push_back(series.points[g].bond_length);
    curve.energies.row(static_cast<Eigen::Index>(g)) = s.eigenvalues.head(k).transpose();
  }
  return curve;
}

}  // namespace ssqite
