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

#include "ssqite/circuit.hpp"
#include "ssqite/integrator.hpp"
#include "ssqite/pauli.hpp"
#include "ssqite/simulator.hpp"

namespace ssqite {

/// Variant of the McLachlan metric.
enum class Metric {
  kPlain,           // A_ij = Re<d_i phi|d_j phi>
  kPhaseCorrected,  // A_ij - Re(<d_i phi|phi><phi|d_j phi>)
};

/// Linear system A theta_dot = C for one state at fixed parameters.
struct McLachlanSystem {
  RealMatrix a;
  RealVector c;
  Real energy = 0.0;
};

struct QiteConfig {
  Real dtau = 0.1;
  Real regularization = 1e-6;
  int max_steps = 1000;
  Real grad_tol = 1e-5;  // on ||theta_dot||_inf
  Integrator integrator = Integrator::kRK4;
  Metric metric = Metric::kPlain;

  void validate() const;
};

/// A_ij = Re<d_i phi|d_j phi>, C_i = -Re<d_i phi|H|phi>, energy = <phi|H|phi>
/// with |phi> = U(theta)|s0>.
McLachlanSystem assemble(const Circuit& c, const RealVector& theta, const PauliSum& h, const Statevector& s0,
                         Metric metric = Metric::kPlain);

/// Solves (A + lambda I) x = C by Cholesky, falling back to a truncated SVD
/// pseudo-solve (singular values below 1e-8 sigma_max dropped).
RealVector solve(const McLachlanSystem& sys, Real lambda);

/// theta_dot at theta, i.e. solve(assemble(...)).
RealVector parameter_velocity(const Circuit& c, const RealVector& theta, const PauliSum& h, const Statevector& s0,
                              const QiteConfig& cfg);

/// Advances theta by one imaginary-time step of cfg.dtau.
RealVector step(const Circuit& c, const RealVector& theta, const PauliSum& h, const Statevector& s0,
                const QiteConfig& cfg);

struct QiteResult {
  RealVector theta;
  std::vector<Real> energies;    // energy at each visited iterate
  std::vector<Real> grad_norms;  // ||theta_dot||_inf at each visited iterate
  int steps = 0;                 // parameter updates performed
};

class MaxStepsExceeded : public Error {
 public:
  explicit MaxStepsExceeded(QiteResult partial)
      : Error(ErrorCode::kMaxStepsExceeded, "no convergence after " + std::to_string(partial.steps) + " steps"),
        partial_(std::move(partial)) {}
  const QiteResult& partial() const noexcept { return partial_; }

 private:
  QiteResult partial_;
};

/// Iterates `step` until ||theta_dot||_inf < grad_tol; throws
/// MaxStepsExceeded (carrying the trace) after cfg.max_steps updates.
QiteResult run_qite(const Circuit& c, const RealVector& theta0, const PauliSum& h, const Statevector& s0,
                    const QiteConfig& cfg);

}  // namespace ssqite
