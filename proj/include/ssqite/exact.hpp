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

#include <vector>

#include "ssqite/pauli.hpp"
#include "ssqite/simulator.hpp"

namespace ssqite {

/// Full spectrum of a Pauli sum, eigenvalues ascending. Each eigenvector is
/// phased so its largest-magnitude component (lowest index on ties) is real
/// and positive.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  int num_qubits() const;
  Statevector state(Eigen::Index j) const;
};

Spectrum eigensolve(const PauliSum& h);

/// k lowest eigenvalues per geometry; row g belongs to bond_lengths[g].
struct ReferenceCurve {
  std::vector<Real> bond_lengths;
  RealMatrix energies;
};

ReferenceCurve reference_curve(const GeometrySeries& series, int k);

}  // namespace ssqite
