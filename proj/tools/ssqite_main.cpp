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

// ssqite: run subspace-search QITE scans, traces and exact reference curves.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ssqite/bench.hpp"

namespace fs = std::filesystem;
using namespace ssqite;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAccuracy = 1;
constexpr int kExitInput = 2;

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  return out;
}

int cmd_scan(const fs::path& config, std::optional<Real> tolerance, std::optional<fs::path> out_dir) {
  bench::RunConfig cfg = bench::load_run_config(config);
  if (tolerance) cfg.tolerance = *tolerance;
  if (out_dir) cfg.output_dir = *out_dir;
  cfg.validate();
  const GeometrySeries series = load_geometry_series(cfg.hamiltonian_path);
  const bench::ScanResult result = bench::scan(cfg, series);

  auto csv = open_output(cfg.output_dir / "scan.csv");
  bench::write_scan_csv(csv, result);
  auto json = open_output(cfg.output_dir / "summary.json");
  bench::write_summary_json(json, result, cfg.tolerance);

  for (const auto& d : result.diagnostics) std::cerr << "warning: " << d << '\n';
  std::cout << result.molecule << ": " << series.points.size() << " geometries, max |error| "
            << bench::format_real(result.max_error()) << " Ha (tolerance " << bench::format_real(cfg.tolerance)
            << "), " << result.wall_seconds << " s\n";
  if (!result.all_converged || !(result.max_error() < cfg.tolerance)) return kExitAccuracy;
  return kExitOk;
}

int cmd_trace(const fs::path& config, Real bond_length, std::optional<fs::path> out_path) {
  const bench::RunConfig cfg = bench::load_run_config(config);
  const GeometrySeries series = load_geometry_series(cfg.hamiltonian_path);
  const GeometryPoint& point = bench::find_geometry(series, bond_length);
  const bench::GeometryRun run = bench::run_geometry(cfg, point);

  const fs::path path = out_path.value_or(cfg.output_dir / "trace.csv");
  auto out = open_output(path);
  bench::write_trace_csv(out, run.result.records);

  std::cout << "R=" << bench::format_real(run.bond_length) << " iterations " << run.result.iterations;
  for (Eigen::Index l = 0; l < run.result.energies.size(); ++l) {
    std::cout << " E" << l << "=" << bench::format_real(run.result.energies[l]);
  }
  std::cout << (run.result.ascending ? " ascending" : " NOT ascending") << '\n';
  if (!run.converged) {
    std::cerr << "error: " << run.diagnostic << '\n';
    return kExitAccuracy;
  }
  return kExitOk;
}

int cmd_exact(std::optional<fs::path> config, std::optional<fs::path> hamiltonian, int k,
              std::optional<fs::path> out_path) {
  fs::path ham;
  fs::path out_dir = ".";
  if (config) {
    const bench::RunConfig cfg = bench::load_run_config(*config);
    ham = cfg.hamiltonian_path;
    out_dir = cfg.output_dir;
    if (k <= 0) k = cfg.k;
  }
  if (hamiltonian) ham = *hamiltonian;
  if (ham.empty()) throw Error(ErrorCode::kInvalidArgument, "exact needs --config or --hamiltonian");
  if (k <= 0) k = 3;
  const ReferenceCurve curve = reference_curve(load_geometry_series(ham), k);
  auto out = open_output(out_path.value_or(out_dir / "reference.csv"));
  bench::write_reference_csv(out, curve);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subspace-search quantum imaginary time evolution benchmarks"};
  app.require_subcommand(1);

  fs::path config;
  std::optional<Real> tolerance;
  std::optional<fs::path> out;
  Real bond_length = 0.0;
  std::optional<fs::path> exact_config;
  std::optional<fs::path> hamiltonian;
  int k = 0;

  auto* scan = app.add_subcommand("scan", "Run SSQITE over every geometry and compare with the exact spectrum");
  scan->add_option("--config", config, "Run configuration file")->required();
  scan->add_option("--tolerance", tolerance, "Pass threshold on max |E_ssqite - E_exact| (Ha)");
  scan->add_option("--out", out, "Output directory for scan.csv and summary.json");

  auto* trace = app.add_subcommand("trace", "Write the per-iteration trace at one bond length");
  trace->add_option("--config", config, "Run configuration file")->required();
  trace->add_option("--bond-length,-R", bond_length, "Bond length in Angstrom")->required();
  trace->add_option("--out", out, "Output CSV path");

  auto* exact = app.add_subcommand("exact", "Write the k lowest exact eigenvalues per geometry");
  exact->add_option("--config", exact_config, "Run configuration file");
  exact->add_option("--hamiltonian", hamiltonian, "Geometry series file");
  exact->add_option("--k", k, "Number of levels");
  exact->add_option("--out", out, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*scan) return cmd_scan(config, tolerance, out);
    if (*trace) return cmd_trace(config, bond_length, out);
    return cmd_exact(exact_config, hamiltonian, k, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kMaxItersExceeded:
      case ErrorCode::kMaxStepsExceeded:
      case ErrorCode::kSingularSystem:
        return kExitAccuracy;
      default:
        return kExitInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
