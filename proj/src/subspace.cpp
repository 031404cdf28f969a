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

#include "ssqite/subspace.hpp"

#include <algorithm>

#include <cmath>
#include <limits>

namespace ssqite {

namespace {

constexpr Real kOrthoInputTol = 1e-10;

Real max_offdiag(const std::vector<Statevector>& states) {
  Real worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) worst = std::max(worst, std::abs(overlap(states[i], states[j])));
  }
  return worst;
}

void refresh_states(SubspaceRun& run, const Circuit& c) {
  run.states.clear();
  for (int l = 0; l < run.k; ++l) {
    run.states.push_back(apply(c, run.parameters(l), run.initial_states[static_cast<std::size_t>(l)]));
  }
}

RealVector level_velocity(const Circuit& c, const RealVector& theta, const PauliSum& h, const Statevector& phi,
                          const SsqiteConfig& cfg, int level, Real* energy = nullptr) {
  try {
    const McLachlanSystem sys = assemble(c, theta, h, phi, cfg.metric);
    if (energy != nullptr) *energy = sys.energy;
    return solve(sys, cfg.regularization);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingularSystem) throw;
    throw Error(ErrorCode::kSingularSystem, "level " + std::to_string(level) + ": " + e.what());
  }
}

SubspaceResult snapshot_result(const SubspaceRun& run, const PauliSum& h, std::span<const Statevector> exact,
                               std::vector<Real> ortho_history, Real ortho_tol) {
  SubspaceResult r;
  r.theta = run.theta;
  r.level_theta = run.level_theta;
  r.energies.resize(run.k);
  for (int l = 0; l < run.k; ++l) r.energies[l] = expectation(h, run.states[static_cast<std::size_t>(l)]);
  for (int l = 0; l + 1 < run.k; ++l) {
    if (r.energies[l] > r.energies[l + 1] + 1e-6) r.ascending = false;
  }
  r.converged = run.all_converged();
  r.iterations = run.iterations;
  r.b = run.b;
  r.final_dtau = run.dtau;
  r.states = run.states;
  r.traces = run.traces;
  r.records = run.records;
  r.ortho_history = std::move(ortho_history);
  r.ortho = ortho_report(run, exact, ortho_tol);
  return r;
}

}  // namespace

void SsqiteConfig::validate() const {
  if (!(b > 0.0)) throw Error(ErrorCode::kInvalidArgument, "b must be positive");
  if (!(grad_tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "grad_tol must be positive");
  if (patience < 1) throw Error(ErrorCode::kInvalidArgument, "patience must be >= 1");
  if (max_iters < 1) throw Error(ErrorCode::kInvalidArgument, "max_iters must be >= 1");
  if (!(regularization >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "regularization must be >= 0");
}

std::vector<Real> init_schedule(int k, Real b) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (!(b > 0.0)) throw Error(ErrorCode::kInvalidArgument, "b must be positive");
  std::vector<Real> dtau(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) dtau[static_cast<std::size_t>(i)] = std::ldexp(b, -i);
  return dtau;
}

Real base_step(const PauliSum& h, const SsqiteConfig& cfg) {
  if (cfg.step_scale == StepScale::kAbsolute) return cfg.b;
  Real norm = 0.0;
  for (const auto& t : h.terms()) {
    if (!t.string.is_identity()) norm += std::abs(t.coefficient);
  }
  return norm > 0.0 ? cfg.b / norm : cfg.b;
}

bool SubspaceRun::all_converged() const {
  for (bool c : converged) {
    if (!c) return false;
  }
  return true;
}

const RealVector& SubspaceRun::parameters(int level) const {
  return mode == UpdateMode::kShared ? theta : level_theta[static_cast<std::size_t>(level)];
}

SubspaceRun init_run(const Circuit& c, const RealVector& theta0, std::vector<Statevector> initial_states, Real b,
                     UpdateMode mode) {
  if (initial_states.empty()) throw Error(ErrorCode::kInvalidArgument, "need at least one level");
  SubspaceRun run;
  run.k = static_cast<int>(initial_states.size());
  run.b = b;
  run.mode = mode;
  run.theta = theta0;
  if (mode == UpdateMode::kPerLevel) run.level_theta.assign(initial_states.size(), theta0);
  run.initial_states = std::move(initial_states);
  run.dtau = init_schedule(run.k, b);
  const auto k = static_cast<std::size_t>(run.k);
  run.converged.assign(k, false);
  run.streak.assign(k, 0);
  run.doublings.assign(k, 0);
  run.snapshots.assign(k, std::nullopt);
  run.traces.assign(k, {});
  refresh_states(run, c);
  return run;
}

void iterate(SubspaceRun& run, const PauliSum& h, const Circuit& c, const SsqiteConfig& cfg) {
  const auto k = static_cast<std::size_t>(run.k);
  std::vector<RealVector> velocity(k);
  std::vector<Real> energy(k, 0.0);
  std::vector<Real> grad(k, 0.0);
  for (std::size_t l = 0; l < k; ++l) {
    velocity[l] = level_velocity(c, run.parameters(static_cast<int>(l)), h, run.initial_states[l], cfg,
                                 static_cast<int>(l), &energy[l]);
    grad[l] = velocity[l].size() ? velocity[l].cwiseAbs().maxCoeff() : 0.0;
  }
  const Real ortho = max_offdiag(run.states);

  // A level may only be flagged once every lower level is flagged; doubling an
  // excited level ahead of the one below it would equalise their steps.
  std::vector<std::size_t> newly;
  bool lower_done = true;
  for (std::size_t l = 0; l < k; ++l) {
    run.streak[l] = grad[l] < cfg.grad_tol ? run.streak[l] + 1 : 0;
    if (!run.converged[l] && lower_done && run.streak[l] >= cfg.patience) {
      run.converged[l] = true;
      run.snapshots[l] = run.states[l];
      newly.push_back(l);
    }
    lower_done = lower_done && run.converged[l];
  }
  for (std::size_t l : newly) {
    const std::size_t first = cfg.doubling == DoublingRule::kFromLevel ? l : l + 1;
    for (std::size_t i = first; i < k; ++i) {
      run.dtau[i] *= 2.0;
      ++run.doublings[i];
    }
  }

  for (std::size_t l = 0; l < k; ++l) {
    run.traces[l].push_back(energy[l]);
    run.records.push_back({run.iterations, static_cast<int>(l), energy[l], grad[l], run.dtau[l], ortho});
  }
  ++run.iterations;
  if (run.all_converged()) return;

  if (run.mode == UpdateMode::kShared) {
    // Step dtau_0 along sum_l (dtau_l / dtau_0) theta_dot_l, so k = 1 is QITE exactly.
    std::vector<Real> weight(k);
    for (std::size_t l = 0; l < k; ++l) weight[l] = run.dtau[l] / run.dtau[0];
    auto field = [&](const RealVector& t) {
      RealVector total = weight[0] * level_velocity(c, t, h, run.initial_states[0], cfg, 0);
      for (std::size_t l = 1; l < k; ++l) {
        total += weight[l] * level_velocity(c, t, h, run.initial_states[l], cfg, static_cast<int>(l));
      }
      return total;
    };
    RealVector slope = weight[0] * velocity[0];
    for (std::size_t l = 1; l < k; ++l) slope += weight[l] * velocity[l];
    run.theta = integrate_step(run.theta, slope, run.dtau[0], cfg.integrator, field);
  } else {
    for (std::size_t l = 0; l < k; ++l) {
      auto field = [&](const RealVector& t) {
        return level_velocity(c, t, h, run.initial_states[l], cfg, static_cast<int>(l));
      };
      run.level_theta[l] = integrate_step(run.level_theta[l], velocity[l], run.dtau[l], cfg.integrator, field);
    }
  }
  refresh_states(run, c);
}

OrthoReport ortho_report(const SubspaceRun& run, std::span<const Statevector> exact_states, Real tolerance) {
  const Eigen::Index k = run.k;
  OrthoReport rep;
  rep.pairwise = RealMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      rep.pairwise(i, j) = std::abs(overlap(run.states[static_cast<std::size_t>(i)], run.states[static_cast<std::size_t>(j)]));
      if (i != j) rep.max_offdiag = std::max(rep.max_offdiag, rep.pairwise(i, j));
    }
  }
  rep.flagged = rep.max_offdiag > tolerance;

  if (!exact_states.empty()) {
    rep.with_exact.resize(k, static_cast<Eigen::Index>(exact_states.size()));
    for (Eigen::Index i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < exact_states.size(); ++j) {
        rep.with_exact(i, static_cast<Eigen::Index>(j)) =
            std::abs(overlap(exact_states[j], run.states[static_cast<std::size_t>(i)]));
      }
    }
  }

  rep.with_snapshots = RealMatrix::Constant(k, k, std::numeric_limits<Real>::quiet_NaN());
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      const auto& snap = run.snapshots[static_cast<std::size_t>(j)];
      if (snap) rep.with_snapshots(i, j) = std::abs(overlap(*snap, run.states[static_cast<std::size_t>(i)]));
    }
  }
  return rep;
}

SubspaceResult run_ssqite(const PauliSum& h, const Circuit& c, const RealVector& theta0,
                          const std::vector<Statevector>& initial_states, const SsqiteConfig& cfg,
                          std::span<const Statevector> exact_states) {
  cfg.validate();
  for (std::size_t i = 0; i < initial_states.size(); ++i) {
    for (std::size_t j = i; j < initial_states.size(); ++j) {
      const Real expected = i == j ? 1.0 : 0.0;
      if (std::abs(overlap(initial_states[i], initial_states[j]) - expected) > kOrthoInputTol) {
        throw Error(ErrorCode::kNonOrthogonalInputs,
                    "inputs " + std::to_string(i) + " and " + std::to_string(j) + " are not orthonormal");
      }
    }
  }

  SubspaceRun run = init_run(c, theta0, initial_states, base_step(h, cfg), cfg.update_mode);
  std::vector<Real> ortho_history;
  while (!run.all_converged() && run.iterations < cfg.max_iters) {
    iterate(run, h, c, cfg);
    ortho_history.push_back(ortho_report(run, {}, cfg.ortho_tol).max_offdiag);
  }
  SubspaceResult result = snapshot_result(run, h, exact_states, std::move(ortho_history), cfg.ortho_tol);
  if (!result.converged) throw MaxItersExceeded(std::move(result));
  return result;
}

void SsvqeWeights::validate() const {
  for (Eigen::Index i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0.0)) throw Error(ErrorCode::kNonDecreasingWeights, "weights must be positive");
    if (i > 0 && !(omega[i - 1] > omega[i])) {
      throw Error(ErrorCode::kNonDecreasingWeights, "weights must be strictly decreasing");
    }
  }
}

Real ssvqe_loss(const PauliSum& h, const Circuit& c, const RealVector& theta,
                const std::vector<Statevector>& initial_states, const SsvqeWeights& w) {
  w.validate();
  if (w.omega.size() != static_cast<Eigen::Index>(initial_states.size())) {
    throw Error(ErrorCode::kDimensionMismatch, "one weight per level required");
  }
  Real loss = 0.0;
  for (std::size_t j = 0; j < initial_states.size(); ++j) {
    loss += w.omega[static_cast<Eigen::Index>(j)] * expectation(h, apply(c, theta, initial_states[j]));
  }
  return loss;
}

}  // namespace ssqite
