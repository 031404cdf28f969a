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

#include "oracle.hpp"
#include "ssqite/exact.hpp"
#include "ssqite/qite.hpp"

using namespace ssqite;

namespace {

Circuit single_ry() {
  Circuit c(1);
  c.ry(0, 0);
  return c;
}

RealVector scalar(Real x) { return RealVector::Constant(1, x); }

const PauliSum& z1() {
  static const PauliSum h = make_pauli_sum({{1.0, "Z"}});
  return h;
}

GeometryPoint h2_point(Real r) {
  const GeometrySeries s = load_geometry_series(std::filesystem::path(SSQITE_DATA_DIR) / "h2.ham");
  for (const auto& p : s.points) {
    if (std::abs(p.bond_length - r) < 1e-9) return p;
  }
  throw std::runtime_error("missing geometry");
}

}  // namespace

TEST_CASE("assemble on a single RY") {
  const McLachlanSystem sys = assemble(single_ry(), scalar(M_PI / 2), z1(), Statevector::basis(1, 0));
  CHECK(sys.a(0, 0) == doctest::Approx(0.25));
  CHECK(sys.c[0] == doctest::Approx(0.5));
  CHECK(std::abs(sys.energy) < 1e-15);
}

TEST_CASE("A is a Gram matrix and C is minus half the energy gradient") {
  std::mt19937_64 rng(43);
  const Circuit two = build_twolocal();
  const PauliSum h = h2_point(0.735).hamiltonian;
  const ComplexMatrix hm = to_dense(h);
  Real worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const RealVector theta = oracle::random_theta(16, rng);
    const auto s0 = Statevector::basis(2, trial % 3);
    for (Metric metric : {Metric::kPlain, Metric::kPhaseCorrected}) {
      const McLachlanSystem sys = assemble(two, theta, h, s0, metric);
      CHECK((sys.a - sys.a.transpose()).cwiseAbs().maxCoeff() == 0.0);
      CHECK(Eigen::SelfAdjointEigenSolver<RealMatrix>(sys.a).eigenvalues().minCoeff() >= -1e-9);
    }
    const McLachlanSystem sys = assemble(two, theta, h, s0);
    const ComplexVector phi = oracle::circuit_unitary(two, theta) * s0.amplitudes();
    CHECK(sys.energy == doctest::Approx(oracle::dense_energy(hm, phi)).epsilon(1e-12));
    for (int i = 0; i < 16; ++i) {
      const Real step = 1e-5;
      RealVector p = theta, m = theta;
      p[i] += step;
      m[i] -= step;
      const Real ep = oracle::dense_energy(hm, oracle::circuit_unitary(two, p) * s0.amplitudes());
      const Real em = oracle::dense_energy(hm, oracle::circuit_unitary(two, m) * s0.amplitudes());
      worst = std::max(worst, std::abs(sys.c[i] + 0.25 * (ep - em) / step));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("phase-corrected metric removes the global-phase direction") {
  Circuit c(1);
  c.rz(0, 0);
  // RZ on |0> only changes the global phase: plain A = 1/4, corrected A = 0.
  const auto s0 = Statevector::basis(1, 0);
  CHECK(assemble(c, scalar(0.3), z1(), s0).a(0, 0) == doctest::Approx(0.25));
  CHECK(std::abs(assemble(c, scalar(0.3), z1(), s0, Metric::kPhaseCorrected).a(0, 0)) < 1e-15);
}

TEST_CASE("solve") {
  McLachlanSystem sys;
  sys.a = RealMatrix::Constant(1, 1, 0.25);
  sys.c = scalar(0.5);
  CHECK(solve(sys, 0.0)[0] == doctest::Approx(2.0));

  sys.a = RealMatrix::Zero(3, 3);
  sys.c = RealVector::Zero(3);
  CHECK(solve(sys, 1e-6).cwiseAbs().maxCoeff() == 0.0);

  std::mt19937_64 rng(47);
  std::normal_distribution<Real> g;
  RealMatrix b(6, 6);
  for (auto& x : b.reshaped()) x = g(rng);
  sys.a = b * b.transpose() + 0.1 * RealMatrix::Identity(6, 6);
  sys.c = RealVector(6);
  for (auto& x : sys.c) x = g(rng);
  CHECK((sys.a * solve(sys, 0.0) - sys.c).norm() < 1e-9);

  SUBCASE("indefinite input falls back to the truncated pseudo-solve") {
    sys.a = RealMatrix::Zero(2, 2);
    sys.a(0, 0) = 1.0;
    sys.a(1, 1) = -1e-20;
    sys.c = RealVector::Zero(2);
    sys.c[0] = 3.0;
    const RealVector x = solve(sys, 0.0);
    CHECK(x[0] == doctest::Approx(3.0));
    CHECK(x[1] == 0.0);
  }
  CHECK_THROWS_AS(solve(sys, -1.0), Error);
}

TEST_CASE("single steps") {
  QiteConfig cfg;
  cfg.regularization = 0.0;
  cfg.integrator = Integrator::kEuler;
  const auto s0 = Statevector::basis(1, 0);
  CHECK(step(single_ry(), scalar(M_PI / 2), z1(), s0, cfg)[0] == doctest::Approx(M_PI / 2 + 0.2));

  // On this circuit theta_dot = 2 sin(theta) exactly.
  cfg.integrator = Integrator::kRK4;
  const Real rk4 = step(single_ry(), scalar(M_PI / 2), z1(), s0, cfg)[0];
  const Real reference = oracle::fine_rk4([](Real t) { return 2.0 * std::sin(t); }, M_PI / 2, 0.1);
  CHECK(std::abs(rk4 - reference) < 1e-6);
}

TEST_CASE("small Euler steps descend monotonically and converge at first order") {
  const PauliSum h = h2_point(0.735).hamiltonian;
  const Circuit two = build_twolocal();
  std::mt19937_64 rng(53);
  const RealVector theta0 = oracle::random_theta(16, rng, 0.5);
  const auto s0 = Statevector::basis(2, 0);

  QiteConfig cfg;
  cfg.integrator = Integrator::kEuler;
  cfg.dtau = 0.05;
  RealVector theta = theta0;
  Real previous = assemble(two, theta, h, s0).energy;
  for (int k = 0; k < 100; ++k) {
    theta = step(two, theta, h, s0, cfg);
    const Real e = assemble(two, theta, h, s0).energy;
    CHECK(e <= previous + 1e-9);
    previous = e;
  }

  auto evolve = [&](Integrator integrator, Real dtau, Real total) {
    QiteConfig c = cfg;
    c.integrator = integrator;
    c.dtau = dtau;
    RealVector t = theta0;
    for (int k = 0; k < static_cast<int>(std::lround(total / dtau)); ++k) t = step(two, t, h, s0, c);
    return t;
  };
  const RealVector reference = evolve(Integrator::kRK4, 0.01, 0.4);
  const Real coarse = (evolve(Integrator::kEuler, 0.04, 0.4) - reference).norm();
  const Real fine = (evolve(Integrator::kEuler, 0.02, 0.4) - reference).norm();
  CHECK(coarse / fine >= 1.8);
}

TEST_CASE("run_qite") {
  QiteConfig cfg;
  const auto s0 = Statevector::basis(1, 0);
  const QiteResult r = run_qite(single_ry(), scalar(M_PI / 2), z1(), s0, cfg);
  CHECK(std::abs(r.energies.back() + 1.0) < 1e-6);
  CHECK(r.energies.size() == static_cast<std::size_t>(r.steps) + 1);

  const QiteResult at_ground = run_qite(single_ry(), scalar(M_PI), z1(), s0, cfg);
  CHECK(at_ground.steps <= 1);

  QiteConfig few = cfg;
  few.max_steps = 2;
  try {
    run_qite(single_ry(), scalar(M_PI / 2), z1(), s0, few);
    FAIL("expected MaxStepsExceeded");
  } catch (const MaxStepsExceeded& e) {
    CHECK(e.partial().steps == 2);
    CHECK(e.partial().energies.size() == 3);
  }

  QiteConfig bad = cfg;
  bad.dtau = -1.0;
  CHECK_THROWS_AS(run_qite(single_ry(), scalar(0.1), z1(), s0, bad), Error);
}

TEST_CASE("run_qite reaches the H2 ground state") {
  const GeometryPoint p = h2_point(0.95);
  QiteConfig cfg;
  cfg.dtau = 0.5;
  cfg.grad_tol = 1e-4;
  cfg.max_steps = 5000;
  std::mt19937_64 rng(59);
  const QiteResult r =
      run_qite(build_twolocal(), oracle::random_theta(16, rng, 0.1), p.hamiltonian, Statevector::basis(2, 0), cfg);
  const Real exact = eigensolve(p.hamiltonian).eigenvalues[0];
  CHECK(std::abs(r.energies.back() - exact) < 1.6e-3);
}
