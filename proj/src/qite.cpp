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

#include "ssqite/qite.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>

namespace ssqite {

void QiteConfig::validate() const {
  if (!(dtau > 0.0)) throw Error(ErrorCode::kInvalidArgument, "dtau must be positive");
  if (!(regularization >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "regularization must be >= 0");
  if (max_steps < 1) throw Error(ErrorCode::kInvalidArgument, "max_steps must be >= 1");
  if (!(grad_tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "grad_tol must be positive");
}

McLachlanSystem assemble(const Circuit& c, const RealVector& theta, const PauliSum& h, const Statevector& s0,
                         Metric metric) {
  if (h.num_qubits() != c.num_qubits()) throw Error(ErrorCode::kDimensionMismatch, "Hamiltonian/circuit qubits");
  const ComplexMatrix d = derivative_states(c, theta, s0);
  ComplexVector phi = s0.amplitudes();
  apply_in_place(c, theta, phi);
  const ComplexVector h_phi = apply_hamiltonian(h, phi);

  McLachlanSystem sys;
  sys.a = (d.adjoint() * d).real();
  sys.c = -(d.adjoint() * h_phi).real();
  sys.energy = phi.dot(h_phi).real();
  if (metric == Metric::kPhaseCorrected) {
    const ComplexVector berry = d.adjoint() * phi;  // <d_i phi|phi>
    sys.a -= (berry * berry.adjoint()).real();
  }
  // symmetrize away rounding
  sys.a = 0.5 * (sys.a + sys.a.transpose()).eval();
  return sys;
}

RealVector solve(const McLachlanSystem& sys, Real lambda) {
  if (!(lambda >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be >= 0");
  if (sys.a.rows() != sys.a.cols() || sys.a.rows() != sys.c.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "A/C shapes");
  }
  if (!sys.a.allFinite() || !sys.c.allFinite()) throw Error(ErrorCode::kSingularSystem, "non-finite A or C");

  const Eigen::Index p = sys.a.rows();
  const RealMatrix shifted = sys.a + lambda * RealMatrix::Identity(p, p);
  Eigen::LLT<RealMatrix> llt(shifted);
  if (llt.info() == Eigen::Success) {
    RealVector x = llt.solve(sys.c);
    if (x.allFinite()) return x;
  }

  Eigen::JacobiSVD<RealMatrix> svd(shifted, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sigma = svd.singularValues();
  const Real cutoff = 1e-8 * (sigma.size() > 0 ? sigma[0] : 0.0);
  RealVector coeffs = svd.matrixU().transpose() * sys.c;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    coeffs[i] = (sigma[i] > cutoff && sigma[i] > 0.0) ? coeffs[i] / sigma[i] : 0.0;
  }
  RealVector x = svd.matrixV() * coeffs;
  if (!x.allFinite()) throw Error(ErrorCode::kSingularSystem, "Cholesky and pseudo-solve both failed");
  return x;
}

RealVector parameter_velocity(const Circuit& c, const RealVector& theta, const PauliSum& h, const Statevector& s0,
                              const QiteConfig& cfg) {
  return solve(assemble(c, theta, h, s0, cfg.metric), cfg.regularization);
}

RealVector step(const Circuit& c, const RealVector& theta, const PauliSum& h, const Statevector& s0,
                const QiteConfig& cfg) {
  cfg.validate();
  auto field = [&](const RealVector& t) { return parameter_velocity(c, t, h, s0, cfg); };
  return integrate_step(theta, field(theta), cfg.dtau, cfg.integrator, field);
}

QiteResult run_qite(const Circuit& c, const RealVector& theta0, const PauliSum& h, const Statevector& s0,
                    const QiteConfig& cfg) {
  cfg.validate();
  auto field = [&](const RealVector& t) { return parameter_velocity(c, t, h, s0, cfg); };

  QiteResult r;
  r.theta = theta0;
  for (int k = 0;; ++k) {
    const McLachlanSystem sys = assemble(c, r.theta, h, s0, cfg.metric);
    const RealVector velocity = solve(sys, cfg.regularization);
    const Real grad = velocity.size() ? velocity.cwiseAbs().maxCoeff() : 0.0;
    r.energies.push_back(sys.energy);
    r.grad_norms.push_back(grad);
    if (grad < cfg.grad_tol) return r;
    if (k == cfg.max_steps) throw MaxStepsExceeded(std::move(r));
    r.theta = integrate_step(r.theta, velocity, cfg.dtau, cfg.integrator, field);
    r.steps = k + 1;
  }
}

}  // namespace ssqite
