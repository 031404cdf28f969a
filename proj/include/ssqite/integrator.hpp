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

#include "ssqite/types.hpp"

namespace ssqite {

enum class Integrator { kEuler, kRK4 };

/// One explicit step of d(theta)/dt = field(theta).
///
/// `slope` is field(theta), already evaluated by the caller (it doubles as
/// the convergence probe). The classical RK4 scheme re-evaluates the field at
/// every intermediate point.
template <typename Field>
RealVector integrate_step(const RealVector& theta, const RealVector& slope, Real dt, Integrator integrator,
                          Field&& field) {
  if (integrator == Integrator::kEuler) return theta + dt * slope;
  const RealVector k2 = field(RealVector(theta + 0.5 * dt * slope));
  const RealVector k3 = field(RealVector(theta + 0.5 * dt * k2));
  const RealVector k4 = field(RealVector(theta + dt * k3));
  return theta + (dt / 6.0) * (slope + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace ssqite
