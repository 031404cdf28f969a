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

#include <doctest.h>

#include <sstream>

#include "oracle.hpp"
#include "ssqite/exact.hpp"

using namespace ssqite;

TEST_CASE("eigensolve small cases") {
  const Spectrum z = eigensolve(make_pauli_sum({{1.0, "Z"}}));
  CHECK(z.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(z.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(std::abs(z.state(0)[1]) == doctest::Approx(1.0));

  const Spectrum zz = eigensolve(make_pauli_sum({{1.0, "ZZ"}}));
  const std::vector<Real> expected{-1, -1, 1, 1};
  for (int j = 0; j < 4; ++j) CHECK(zz.eigenvalues[j] == doctest::Approx(expected[static_cast<std::size_t>(j)]));
  CHECK(zz.num_qubits() == 2);
}

TEST_CASE("eigensolve residuals, orthonormality and phase convention") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix m = oracle::random_hermitian(8, rng);
    const PauliSum h = decompose_dense(m);
    const Spectrum s = eigensolve(h);
    for (Eigen::Index j = 0; j < 8; ++j) {
      if (j > 0) CHECK(s.eigenvalues[j] >= s.eigenvalues[j - 1]);
      const ComplexVector v = s.eigenvectors.col(j);
      CHECK((m * v - s.eigenvalues[j] * v).norm() < 1e-9);
      CHECK(std::abs(expectation(h, s.state(j)) - s.eigenvalues[j]) < 1e-9);
      Eigen::Index big = 0;
      v.cwiseAbs().maxCoeff(&big);
      CHECK(std::abs(v[big].imag()) < 1e-12);
      CHECK(v[big].real() > 0.0);
      for (Eigen::Index i = 0; i < 8; ++i) {
        const Complex o = s.eigenvectors.col(i).dot(v);
        CHECK(std::abs(o - Complex(i == j ? 1.0 : 0.0)) < 1e-9);
      }
    }
    // Trace identity: only the identity string contributes.
    const Real trace = 8.0 * h.coefficient(parse_pauli_string("III"));
    CHECK(std::abs(s.eigenvalues.sum() - trace) < 1e-9);
  }
}

TEST_CASE("reference curves") {
  const GeometrySeries h2 = load_geometry_series(std::filesystem::path(SSQITE_DATA_DIR) / "h2.ham");
  const ReferenceCurve curve = reference_curve(h2, 3);
  REQUIRE(curve.bond_lengths.size() == h2.points.size());
  CHECK(curve.energies.rows() == static_cast<Eigen::Index>(h2.points.size()));
  CHECK(curve.energies.cols() == 3);

  // The ground-state minimum sits in the interior, near the equilibrium bond.
  Eigen::Index best = 0;
  curve.energies.col(0).minCoeff(&best);
  CHECK(best > 0);
  CHECK(best < curve.energies.rows() - 1);
  CHECK(curve.bond_lengths[static_cast<std::size_t>(best)] > 0.6);
  CHECK(curve.bond_lengths[static_cast<std::size_t>(best)] < 0.9);

  const ReferenceCurve full = reference_curve(h2, 4);
  CHECK(full.energies.cols() == 4);
  CHECK_THROWS_AS(reference_curve(h2, 5), Error);
  CHECK_THROWS_AS(reference_curve(h2, 0), Error);

  std::istringstream one("molecule X\ngeometry 1.0\nZ 1.0\n");
  const ReferenceCurve single = reference_curve(parse_geometry_series(one), 2);
  CHECK(single.energies.rows() == 1);
  CHECK(single.energies(0, 0) == doctest::Approx(-1.0));
}

TEST_CASE("register size bound") {
  PauliSum big(kMaxDenseQubits + 1);
  CHECK_THROWS_AS(eigensolve(big), Error);
}
