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

#include "ssqite/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace ssqite::bench {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Real to_real(const std::string& key, const std::string& value) {
  Real out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out)) {
    throw Error(ErrorCode::kInvalidArgument, key + ": not a number '" + value + "'");
  }
  return out;
}

std::int64_t to_int(const std::string& key, const std::string& value) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kInvalidArgument, key + ": not an integer '" + value + "'");
  }
  return out;
}

template <typename Enum>
Enum to_enum(const std::string& key, const std::string& value, const std::map<std::string, Enum>& table) {
  const auto it = table.find(value);
  if (it == table.end()) throw Error(ErrorCode::kInvalidArgument, key + ": unknown value '" + value + "'");
  return it->second;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (hamiltonian_path.empty()) throw Error(ErrorCode::kInvalidArgument, "hamiltonian path not set");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (shots < 0) throw Error(ErrorCode::kInvalidArgument, "shots must be >= 0");
  if (!(init_scale >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "init_scale must be >= 0");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  if (!initial_states.empty() && static_cast<int>(initial_states.size()) != k) {
    throw Error(ErrorCode::kInvalidArgument, "initial_states must list k bitstrings");
  }
  ssqite.validate();
}

RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir) {
  RunConfig cfg;
  std::string raw;
  std::size_t lineno = 0;
  auto resolve = [&](const std::string& value) {
    std::filesystem::path p(value);
    return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw ParseError(lineno, "empty value for '" + key + "'");

    auto& s = cfg.ssqite;
    try {
      if (key == "hamiltonian" || key == "hamiltonian_path") {
        cfg.hamiltonian_path = resolve(value);
      } else if (key == "ansatz") {
        cfg.ansatz = to_enum<Ansatz>(key, value, {{"twolocal", Ansatz::kTwoLocal},
                                                  {"excitation-preserving", Ansatz::kExcitationPreserving}});
      } else if (key == "k") {
        cfg.k = static_cast<int>(to_int(key, value));
      } else if (key == "b") {
        s.b = to_real(key, value);
      } else if (key == "step_scale") {
        s.step_scale = to_enum<StepScale>(key, value,
                                          {{"absolute", StepScale::kAbsolute}, {"normalized", StepScale::kNormalized}});
      } else if (key == "grad_tol") {
        s.grad_tol = to_real(key, value);
      } else if (key == "patience") {
        s.patience = static_cast<int>(to_int(key, value));
      } else if (key == "max_iters") {
        s.max_iters = static_cast<int>(to_int(key, value));
      } else if (key == "ortho_tol") {
        s.ortho_tol = to_real(key, value);
      } else if (key == "update_mode") {
        s.update_mode = to_enum<UpdateMode>(key, value,
                                            {{"shared", UpdateMode::kShared}, {"per-level", UpdateMode::kPerLevel}});
      } else if (key == "doubling") {
        s.doubling = to_enum<DoublingRule>(
            key, value, {{"from-level", DoublingRule::kFromLevel}, {"higher-levels", DoublingRule::kHigherLevels}});
      } else if (key == "integrator") {
        s.integrator = to_enum<Integrator>(key, value, {{"euler", Integrator::kEuler}, {"rk4", Integrator::kRK4}});
      } else if (key == "metric") {
        s.metric = to_enum<Metric>(key, value,
                                   {{"plain", Metric::kPlain}, {"phase-corrected", Metric::kPhaseCorrected}});
      } else if (key == "regularization") {
        s.regularization = to_real(key, value);
      } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(to_int(key, value));
      } else if (key == "shots") {
        cfg.shots = to_int(key, value);
      } else if (key == "init_scale") {
        cfg.init_scale = to_real(key, value);
      } else if (key == "initial_states") {
        cfg.initial_states = split_list(value);
      } else if (key == "output_dir") {
        cfg.output_dir = resolve(value);
      } else if (key == "tolerance") {
        cfg.tolerance = to_real(key, value);
      } else {
        throw Error(ErrorCode::kInvalidArgument, "unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  RunConfig cfg = parse_run_config(in, path.parent_path());
  if (const char* seed = std::getenv("SSQITE_SEED"); seed != nullptr && *seed != '\0') {
    cfg.seed = static_cast<std::uint64_t>(to_int("SSQITE_SEED", seed));
  }
  cfg.validate();
  return cfg;
}

Circuit make_ansatz(Ansatz ansatz) {
  return ansatz == Ansatz::kTwoLocal ? build_twolocal() : build_excitation_preserving();
}

std::vector<Statevector> make_initial_states(const RunConfig& cfg, int num_qubits) {
  std::vector<std::string> bits = cfg.initial_states;
  if (bits.empty()) {
    if (cfg.ansatz == Ansatz::kExcitationPreserving) {
      bits = {"010", "001", "100"};
    } else {
      for (int i = 0; i < cfg.k; ++i) {
        std::string s(static_cast<std::size_t>(num_qubits), '0');
        for (int q = 0; q < num_qubits; ++q) {
          if ((i >> q) & 1) s[static_cast<std::size_t>(num_qubits - 1 - q)] = '1';
        }
        bits.push_back(s);
      }
    }
    if (static_cast<int>(bits.size()) < cfg.k) {
      throw Error(ErrorCode::kInvalidArgument, "no default initial states for k = " + std::to_string(cfg.k));
    }
    bits.resize(static_cast<std::size_t>(cfg.k));
  }
  std::vector<Statevector> out;
  for (const auto& b : bits) {
    if (static_cast<int>(b.size()) != num_qubits) {
      throw Error(ErrorCode::kDimensionMismatch, "initial state '" + b + "' for " + std::to_string(num_qubits) +
                                                     " qubits");
    }
    out.push_back(Statevector::from_bitstring(b));
  }
  return out;
}

RealVector initial_theta(int num_params, std::uint64_t seed, Real scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<Real> dist(-scale, scale);
  RealVector theta(num_params);
  for (int i = 0; i < num_params; ++i) theta[i] = scale > 0.0 ? dist(rng) : 0.0;
  return theta;
}

GeometryRun run_geometry(const RunConfig& cfg, const GeometryPoint& point, std::size_t geometry_index) {
  const Circuit circuit = make_ansatz(cfg.ansatz);
  const PauliSum& h = point.hamiltonian;
  if (h.num_qubits() != circuit.num_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch, "Hamiltonian has " + std::to_string(h.num_qubits()) +
                                                   " qubits, ansatz " + std::to_string(circuit.num_qubits()));
  }
  GeometryRun out;
  out.bond_length = point.bond_length;
  out.exact = eigensolve(h);
  if (cfg.k > out.exact.eigenvalues.size()) throw Error(ErrorCode::kInvalidArgument, "k exceeds 2^n");

  std::vector<Statevector> exact_states;
  for (int j = 0; j < cfg.k; ++j) exact_states.push_back(out.exact.state(j));

  const auto inputs = make_initial_states(cfg, h.num_qubits());
  const RealVector theta0 = initial_theta(circuit.num_params(), cfg.seed, cfg.init_scale);
  try {
    out.result = run_ssqite(h, circuit, theta0, inputs, cfg.ssqite, exact_states);
    out.converged = true;
  } catch (const MaxItersExceeded& e) {
    out.result = e.partial();
    out.diagnostic = "R=" + format_real(point.bond_length) + ": " + e.what();
  }

  out.reported = out.result.energies;
  if (cfg.shots > 0) {
    for (int l = 0; l < cfg.k; ++l) {
      const std::uint64_t stream = cfg.seed + 1000003ULL * geometry_index + static_cast<std::uint64_t>(l);
      out.reported[l] = sample_expectation(h, out.result.states[static_cast<std::size_t>(l)], cfg.shots, stream);
    }
  }
  return out;
}

Real ScanResult::max_error() const {
  Real m = 0.0;
  for (Real e : max_abs_err) m = std::max(m, e);
  return m;
}

ScanResult scan(const RunConfig& cfg, const GeometrySeries& series) {
  const auto start = std::chrono::steady_clock::now();
  if (series.points.empty()) throw ParseError(0, "geometry series is empty");

  std::vector<std::future<GeometryRun>> jobs;
  for (std::size_t g = 0; g < series.points.size(); ++g) {
    jobs.push_back(std::async(std::launch::async, [&cfg, &series, g] { return run_geometry(cfg, series.points[g], g); }));
  }

  ScanResult out;
  out.molecule = series.label;
  out.max_abs_err.assign(static_cast<std::size_t>(cfg.k), 0.0);
  for (auto& job : jobs) {
    const GeometryRun run = job.get();
    if (!run.converged) {
      out.all_converged = false;
      out.diagnostics.push_back(run.diagnostic);
    }
    for (int l = 0; l < cfg.k; ++l) {
      const Real e = run.reported[l];
      const Real exact = run.exact.eigenvalues[l];
      const Real err = std::abs(e - exact);
      out.rows.push_back({run.bond_length, l, e, exact, err, run.result.iterations});
      out.max_abs_err[static_cast<std::size_t>(l)] = std::max(out.max_abs_err[static_cast<std::size_t>(l)], err);
    }
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return a.bond_length != b.bond_length ? a.bond_length < b.bond_length : a.level < b.level;
  });
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

const GeometryPoint& find_geometry(const GeometrySeries& series, Real bond_length) {
  const GeometryPoint* best = nullptr;
  for (const auto& p : series.points) {
    if (!best || std::abs(p.bond_length - bond_length) < std::abs(best->bond_length - bond_length)) best = &p;
  }
  if (!best || std::abs(best->bond_length - bond_length) > 1e-6) {
    throw Error(ErrorCode::kGeometryNotFound, "no geometry at R = " + format_real(bond_length));
  }
  return *best;
}

std::string format_real(Real value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw Error(ErrorCode::kInvalidArgument, "cannot format value");
  return std::string(buf, ptr);
}

void write_scan_csv(std::ostream& out, const ScanResult& result) {
  out << "R,level,E_ssqite,E_exact,abs_err,iters\n";
  for (const auto& r : result.rows) {
    out << format_real(r.bond_length) << ',' << r.level << ',' << format_real(r.e_ssqite) << ','
        << format_real(r.e_exact) << ',' << format_real(r.abs_err) << ',' << r.iters << '\n';
  }
}

void write_summary_json(std::ostream& out, const ScanResult& result, Real tolerance) {
  nlohmann::ordered_json j;
  j["molecule"] = result.molecule;
  j["tolerance_Ha"] = tolerance;
  j["max_abs_err_per_level"] = result.max_abs_err;
  j["max_abs_err"] = result.max_error();
  j["within_tolerance"] = result.max_error() < tolerance;
  j["all_converged"] = result.all_converged;
  j["diagnostics"] = result.diagnostics;
  j["geometries"] = result.rows.empty() ? 0 : result.rows.size() / result.max_abs_err.size();
  j["wall_time_s"] = result.wall_seconds;
  out << j.dump(2) << '\n';
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& records) {
  out << "iter,level,energy_Ha,grad_inf_norm,dtau,ortho_max_offdiag\n";
  for (const auto& r : records) {
    out << r.iteration << ',' << r.level << ',' << format_real(r.energy) << ',' << format_real(r.grad_inf) << ','
        << format_real(r.dtau) << ',' << format_real(r.ortho_max_offdiag) << '\n';
  }
}

void write_reference_csv(std::ostream& out, const ReferenceCurve& curve) {
  out << 'R';
  for (Eigen::Index l = 0; l < curve.energies.cols(); ++l) out << ",E" << l;
  out << '\n';
  for (std::size_t g = 0; g < curve.bond_lengths.size(); ++g) {
    out << format_real(curve.bond_lengths[g]);
    for (Eigen::Index l = 0; l < curve.energies.cols(); ++l) {
      out << ',' << format_real(curve.energies(static_cast<Eigen::Index>(g), l));
    }
    out << '\n';
  }
}

ReferenceCurve read_reference_csv(std::istream& in) {
  ReferenceCurve curve;
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line) || line.empty() || line[0] != 'R') throw ParseError(1, "missing reference header");
  const auto columns = static_cast<Eigen::Index>(std::count(line.begin(), line.end(), ','));
  std::vector<std::vector<Real>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(trim(f));
    if (static_cast<Eigen::Index>(fields.size()) != columns + 1) throw ParseError(lineno, "wrong column count");
    std::vector<Real> row;
    try {
      for (const auto& field : fields) row.push_back(to_real("column", field));
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
    curve.bond_lengths.push_back(row.front());
    rows.push_back(std::move(row));
  }
  curve.energies.resize(static_cast<Eigen::Index>(rows.size()), columns);
  for (std::size_t g = 0; g < rows.size(); ++g) {
    for (Eigen::Index l = 0; l < columns; ++l) {
      curve.energies(static_cast<Eigen::Index>(g), l) = rows[g][static_cast<std::size_t>(l + 1)];
    }
  }
  return curve;
}

}  // namespace ssqite::bench
