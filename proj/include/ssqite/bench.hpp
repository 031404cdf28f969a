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
#include <iosfwd>
#include <string>
#include <vector>

#include "ssqite/circuit.hpp"
#include "ssqite/exact.hpp"
#include "ssqite/pauli.hpp"
#include "ssqite/subspace.hpp"

namespace ssqite::bench {

enum class Ansatz { kTwoLocal, kExcitationPreserving };

/// Flat key=value experiment description; see README for the keys.
struct RunConfig {
  std::filesystem::path hamiltonian_path;
  Ansatz ansatz = Ansatz::kTwoLocal;
  int k = 3;
  SsqiteConfig ssqite;
  std::uint64_t seed = 7;
  std::int64_t shots = 0;  // 0 = exact expectation values
  Real init_scale = 0.1;   // initial theta ~ U(-init_scale, init_scale)
  std::vector<std::string> initial_states;  // bitstrings; empty = ansatz default
  std::filesystem::path output_dir = ".";
  Real tolerance = 1.6e-3;  // Hartree

  void validate() const;
};

/// Parses key=value lines; relative paths resolve against `base_dir`.
RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir = {});
/// Loads a config file and applies the SSQITE_SEED environment override.
RunConfig load_run_config(const std::filesystem::path& path);

Circuit make_ansatz(Ansatz ansatz);
std::vector<Statevector> make_initial_states(const RunConfig& cfg, int num_qubits);
RealVector initial_theta(int num_params, std::uint64_t seed, Real scale);

struct GeometryRun {
  Real bond_length = 0.0;
  SubspaceResult result;
  Spectrum exact;
  RealVector reported;  // energies written to the CSV (sampled when shots > 0)
  bool converged = false;
  std::string diagnostic;
};

/// Runs SSQITE and the exact oracle on one Hamiltonian.
GeometryRun run_geometry(const RunConfig& cfg, const GeometryPoint& point, std::size_t geometry_index = 0);

struct ScanRow {
  Real bond_length;
  int level;
  Real e_ssqite;
  Real e_exact;
  Real abs_err;
  int iters;
};

struct ScanResult {
  std::string molecule;
  std::vector<ScanRow> rows;  // sorted by (bond_length, level)
  std::vector<Real> max_abs_err;  // per level
  bool all_converged = true;
  std::vector<std::string> diagnostics;
  double wall_seconds = 0.0;

  Real max_error() const;
};

/// Runs every geometry (concurrently) and collects rows.
ScanResult scan(const RunConfig& cfg, const GeometrySeries& series);

/// Nearest geometry within 1e-6 Angstrom or throws kGeometryNotFound.
const GeometryPoint& find_geometry(const GeometrySeries& series, Real bond_length);

/// 17 significant digits with a '.' decimal point regardless of locale.
std::string format_real(Real value);

void write_scan_csv(std::ostream& out, const ScanResult& result);
void write_summary_json(std::ostream& out, const ScanResult& result, Real tolerance);
void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& records);
void write_reference_csv(std::ostream& out, const ReferenceCurve& curve);
ReferenceCurve read_reference_csv(std::istream& in);

}  // namespace ssqite::bench
