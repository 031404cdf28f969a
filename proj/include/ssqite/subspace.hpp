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

#include <optional>
#include <span>
#include <vector>

#include "ssqite/circuit.hpp"
#include "ssqite/integrator.hpp"
#include "ssqite/pauli.hpp"
#include "ssqite/qite.hpp"
#include "ssqite/simulator.hpp"

namespace ssqite {

enum class UpdateMode {
  kShared,    // theta <- theta + sum_l dtau_l theta_dot_l, one unitary for all levels
  kPerLevel,  // theta_l <- theta_l + dtau_l theta_dot_l, one parameter vector per level
};

/// Which step sizes double when level l first converges.
enum class DoublingRule {
  kFromLevel,     // dtau_i for i >= l
  kHigherLevels,  // dtau_i for i > l
};

/// How the base step b is interpreted.
enum class StepScale {
  kAbsolute,    // dtau_0 = b
  kNormalized,  // dtau_0 = b / sum_j |c_j| over non-identity terms
};

struct SsqiteConfig {
  Real b = 0.5;
  StepScale step_scale = StepScale::kNormalized;
  Real grad_tol = 5e-4;  // per-level ||theta_dot_l||_inf
  int patience = 3;      // consecutive iterations below grad_tol
  int max_iters = 5000;
  Real ortho_tol = 1e-6;
  UpdateMode update_mode = UpdateMode::kShared;
  DoublingRule doubling = DoublingRule::kFromLevel;
  Integrator integrator = Integrator::kRK4;
  Metric metric = Metric::kPlain;
  Real regularization = 1e-3;

  void validate() const;
};

/// dtau_i = b / 2^i for i in [0, k).
std::vector<Real> init_schedule(int k, Real b);

/// Base step actually used for `h` under cfg.step_scale.
Real base_step(const PauliSum& h, const SsqiteConfig& cfg);

/// One row of the per-iteration trace.
struct TraceRecord {
  int iteration;
  int level;
  Real energy;
  Real grad_inf;
  Real dtau;
  Real ortho_max_offdiag;
};

/// Mutable state of one subspace-search run.
struct SubspaceRun {
  int k = 0;
  Real b = 0.0;
  UpdateMode mode = UpdateMode::kShared;
  RealVector theta;                      // shared mode
  std::vector<RealVector> level_theta;   // per-level mode
  std::vector<Statevector> initial_states;
  std::vector<Statevector> states;       // current trial states
  std::vector<Real> dtau;
  std::vector<bool> converged;
  std::vector<int> streak;
  std::vector<int> doublings;
  std::vector<std::optional<Statevector>> snapshots;  // trial state when the level converged
  std::vector<std::vector<Real>> traces;              // per-level energies
  std::vector<TraceRecord> records;
  int iterations = 0;

  bool all_converged() const;
  const RealVector& parameters(int level) const;
};

/// Builds the run without validating orthogonality of the inputs.
SubspaceRun init_run(const Circuit& c, const RealVector& theta0, std::vector<Statevector> initial_states, Real b,
                     UpdateMode mode);

/// One pass of the subspace-search loop: assemble and solve every level,
/// update convergence flags, double step sizes on new convergence, then move
/// the parameters unless every level has converged.
void iterate(SubspaceRun& run, const PauliSum& h, const Circuit& c, const SsqiteConfig& cfg);

struct OrthoReport {
  RealMatrix pairwise;        // |<psi_i|psi_j>|
  RealMatrix with_exact;      // |<E_j|psi_i>|, rows = levels; empty without exact states
  RealMatrix with_snapshots;  // |<snap_j|psi_i>| for converged j < i, NaN elsewhere
  Real max_offdiag = 0.0;
  bool flagged = false;       // max_offdiag > tolerance
};

OrthoReport ortho_report(const SubspaceRun& run, std::span<const Statevector> exact_states = {},
                         Real tolerance = 1e-6);

struct SubspaceResult {
  RealVector theta;
  std::vector<RealVector> level_theta;
  RealVector energies;  // level order, from the final iterate
  bool ascending = true;
  bool converged = false;
  int iterations = 0;
  Real b = 0.0;
  std::vector<Real> final_dtau;
  std::vector<Statevector> states;
  std::vector<std::vector<Real>> traces;
  std::vector<TraceRecord> records;
  std::vector<Real> ortho_history;  // max off-diagonal overlap per iteration
  OrthoReport ortho;
};

class MaxItersExceeded : public Error {
 public:
  explicit MaxItersExceeded(SubspaceResult partial)
      : Error(ErrorCode::kMaxItersExceeded, "not all levels converged after " +
                                                std::to_string(partial.iterations) + " iterations"),
        partial_(std::move(partial)) {}
  const SubspaceResult& partial() const noexcept { return partial_; }

 private:
  SubspaceResult partial_;
};

/// Evolves k orthogonal inputs until every level converges. Throws
/// kNonOrthogonalInputs for bad inputs and MaxItersExceeded (with the partial
/// result) when cfg.max_iters passes run out.
SubspaceResult run_ssqite(const PauliSum& h, const Circuit& c, const RealVector& theta0,
                          const std::vector<Statevector>& initial_states, const SsqiteConfig& cfg,
                          std::span<const Statevector> exact_states = {});

struct SsvqeWeights {
  RealVector omega;  // strictly decreasing, positive
  void validate() const;
};

/// sum_j omega_j <phi_j|U^dagger H U|phi_j>.
Real ssvqe_loss(const PauliSum& h, const Circuit& c, const RealVector& theta,
                const std::vector<Statevector>& initial_states, const SsvqeWeights& w);

}  // namespace ssqite
