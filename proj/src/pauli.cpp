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

#include "ssqite/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ssqite {

namespace {

// P|b> = i^{#Y} (-1)^{popcount(b & z)} |b ^ x>
Complex basis_phase(const PauliString& p, std::uint64_t b) {
  static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex phase = kIPow[p.y_count() % 4];
  return (std::popcount(b & p.z_mask()) % 2) ? -phase : phase;
}

int qubits_for_dimension(Eigen::Index dim) {
  if (dim <= 1 || (dim & (dim - 1)) != 0) {
    throw Error(ErrorCode::kNotPowerOfTwo, "dimension " + std::to_string(dim));
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_real(std::string_view token, Real& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace

PauliString::PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw Error(ErrorCode::kEmptyString, "Pauli string has no factors");
  if (ops_.size() > 63) throw Error(ErrorCode::kTooManyQubits, "Pauli string longer than 63");
  for (int q = 0; q < num_qubits(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (on_qubit(q)) {
      case Pauli::kI: break;
      case Pauli::kX: x_mask_ |= bit; break;
      case Pauli::kY:
        x_mask_ |= bit;
        z_mask_ |= bit;
        ++y_count_;
        break;
      case Pauli::kZ: z_mask_ |= bit; break;
    }
  }
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(ops_.size());
  for (Pauli p : ops_) s.push_back("IXYZ"[static_cast<int>(p)]);
  return s;
}

PauliString parse_pauli_string(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kEmptyString, "empty Pauli string");
  std::vector<Pauli> ops;
  ops.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'I': ops.push_back(Pauli::kI); break;
      case 'X': ops.push_back(Pauli::kX); break;
      case 'Y': ops.push_back(Pauli::kY); break;
      case 'Z': ops.push_back(Pauli::kZ); break;
      default:
        throw Error(ErrorCode::kInvalidLabel, "'" + std::string(1, ch) + "' in \"" + std::string(text) + "\"");
    }
  }
  return PauliString(std::move(ops));
}

PauliSum::PauliSum(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw Error(ErrorCode::kInvalidArgument, "qubit count must be >= 1");
}

PauliSum::PauliSum(int num_qubits, const std::vector<PauliTerm>& terms) : PauliSum(num_qubits) {
  for (const auto& t : terms) add_term(t.coefficient, t.string);
}

void PauliSum::add_term(Real coefficient, const PauliString& string) {
  if (string.num_qubits() != num_qubits_) {
    throw Error(ErrorCode::kDimensionMismatch, "term " + string.to_string() + " on " +
                                                   std::to_string(num_qubits_) + "-qubit sum");
  }
  for (auto& t : terms_) {
    if (t.string == string) {
      t.coefficient += coefficient;
      return;
    }
  }
  terms_.push_back({coefficient, string});
}

Real PauliSum::coefficient(const PauliString& string) const {
  for (const auto& t : terms_) {
    if (t.string == string) return t.coefficient;
  }
  return 0.0;
}

PauliSum make_pauli_sum(const std::vector<std::pair<Real, std::string>>& terms) {
  if (terms.empty()) throw Error(ErrorCode::kInvalidArgument, "empty term list");
  PauliSum h(static_cast<int>(terms.front().second.size()));
  for (const auto& [c, s] : terms) h.add_term(c, parse_pauli_string(s));
  return h;
}

ComplexMatrix to_dense(const PauliString& p) {
  if (p.num_qubits() > kMaxDenseQubits) {
    throw Error(ErrorCode::kTooManyQubits, std::to_string(p.num_qubits()) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    m(static_cast<Eigen::Index>(ub ^ p.x_mask()), b) = basis_phase(p, ub);
  }
  return m;
}

ComplexMatrix to_dense(const PauliSum& h) {
  if (h.num_qubits() > kMaxDenseQubits) {
    throw Error(ErrorCode::kTooManyQubits, std::to_string(h.num_qubits()) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      const auto ub = static_cast<std::uint64_t>(b);
      m(static_cast<Eigen::Index>(ub ^ t.string.x_mask()), b) += t.coefficient * basis_phase(t.string, ub);
    }
  }
  return m;
}

PauliSum decompose_dense(const ComplexMatrix& m, Real drop_tol, Real hermitian_tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
  const int n = qubits_for_dimension(m.rows());
  if (n > kMaxDenseQubits) throw Error(ErrorCode::kTooManyQubits, std::to_string(n) + " qubits");
  const Real asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > hermitian_tol) {
    throw Error(ErrorCode::kNotHermitian, "max |m - m^dagger| = " + std::to_string(asym));
  }

  const Eigen::Index dim = m.rows();
  const Real scale = 1.0 / static_cast<Real>(dim);
  PauliSum out(n);
  std::vector<Pauli> ops(static_cast<std::size_t>(n));
  const std::size_t count = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < count; ++code) {
    // base-4 digits, most significant digit is the leftmost factor
    std::size_t rest = code;
    for (int pos = n - 1; pos >= 0; --pos) {
      ops[static_cast<std::size_t>(pos)] = static_cast<Pauli>(rest % 4);
      rest /= 4;
    }
    PauliString p(ops);
    // Tr[m P] = sum_b m(b, b^x) * phase_P(b)
    Complex trace = 0.0;
    for (Eigen::Index b = 0; b < dim; ++b) {
      const auto ub = static_cast<std::uint64_t>(b);
      trace += m(b, static_cast<Eigen::Index>(ub ^ p.x_mask())) * basis_phase(p, ub);
    }
    const Real c = trace.real() * scale;
    if (std::abs(c) >= drop_tol) out.add_term(c, p);
  }
  return out;
}

GeometrySeries parse_geometry_series(std::istream& in) {
  GeometrySeries series;
  bool have_label = false;
  int num_qubits = 0;
  std::size_t lineno = 0;
  std::size_t block_line = 0;
  std::string raw;

  auto close_block = [&]() {
    if (!series.points.empty() && series.points.back().hamiltonian.size() == 0) {
      throw ParseError(block_line, "geometry block has no terms");
    }
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream fields{std::string(line)};
    std::string key, value, extra;
    fields >> key >> value;
    if (value.empty()) throw ParseError(lineno, "expected two fields");
    if (fields >> extra) throw ParseError(lineno, "unexpected trailing field '" + extra + "'");

    if (key == "molecule") {
      if (have_label) throw ParseError(lineno, "duplicate molecule header");
      series.label = value;
      have_label = true;
    } else if (key == "geometry") {
      close_block();
      Real r = 0.0;
      if (!parse_real(value, r)) throw ParseError(lineno, "bad bond length '" + value + "'");
      if (!series.points.empty() && !(r > series.points.back().bond_length)) {
        throw Error(ErrorCode::kNonMonotonicGeometry,
                    "line " + std::to_string(lineno) + ": bond length " + value + " not increasing");
      }
      block_line = lineno;
      // qubit count is fixed by the first term of the first block
      series.points.push_back({r, PauliSum(num_qubits > 0 ? num_qubits : 1)});
    } else {
      if (series.points.empty()) throw ParseError(lineno, "term before first geometry block");
      Real c = 0.0;
      if (!parse_real(value, c)) throw ParseError(lineno, "coefficient must be a real decimal, got '" + value + "'");
      PauliString p = [&] {
        try {
          return parse_pauli_string(key);
        } catch (const Error& e) {
          throw ParseError(lineno, e.what());
        }
      }();
      auto& block = series.points.back();
      if (num_qubits == 0) {
        num_qubits = p.num_qubits();
        block.hamiltonian = PauliSum(num_qubits);
      }
      if (p.num_qubits() != num_qubits) {
        throw ParseError(lineno, "term " + key + " has " + std::to_string(p.num_qubits()) + " qubits, expected " +
                                     std::to_string(num_qubits));
      }
      block.hamiltonian.add_term(c, p);
    }
  }
  close_block();
  if (!have_label) throw ParseError(lineno, "missing molecule header");
  if (series.points.empty()) throw ParseError(lineno, "no geometry blocks");
  return series;
}

GeometrySeries load_geometry_series(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_geometry_series(in);
}

}  // namespace ssqite
