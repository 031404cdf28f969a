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

#include <sstream>

#include "oracle.hpp"
#include "ssqite/pauli.hpp"

using namespace ssqite;

namespace {

ErrorCode parse_error_code(const std::string& text) {
  try {
    parse_pauli_string(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for '" << text << "'");
  return ErrorCode::kInvalidArgument;
}

GeometrySeries parse(const std::string& text) {
  std::istringstream in(text);
  return parse_geometry_series(in);
}

std::size_t parse_failure_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("parse_pauli_string maps labels left to right") {
  const PauliString zi = parse_pauli_string("ZI");
  CHECK(zi.num_qubits() == 2);
  CHECK(zi[0] == Pauli::kZ);
  CHECK(zi[1] == Pauli::kI);
  CHECK(zi.on_qubit(1) == Pauli::kZ);
  CHECK(zi.on_qubit(0) == Pauli::kI);

  const PauliString p = parse_pauli_string("XYZI");
  CHECK(p.ops() == std::vector<Pauli>{Pauli::kX, Pauli::kY, Pauli::kZ, Pauli::kI});
  CHECK(p.to_string() == "XYZI");
  CHECK(p.x_mask() == 0b1100);
  CHECK(p.z_mask() == 0b0110);
  CHECK(p.y_count() == 1);

  CHECK(parse_error_code("ZA") == ErrorCode::kInvalidLabel);
  CHECK(parse_error_code("") == ErrorCode::kEmptyString);
  CHECK(parse_error_code(std::string(64, 'Z')) == ErrorCode::kTooManyQubits);
}

TEST_CASE("to_dense matches Kronecker products") {
  const ComplexMatrix z = to_dense(make_pauli_sum({{1.0, "Z"}}));
  CHECK(z.isApprox(oracle::pauli_kron("Z")));
  CHECK(z(0, 0).real() == 1.0);
  CHECK(z(1, 1).real() == -1.0);

  const ComplexMatrix xx = to_dense(make_pauli_sum({{0.5, "XI"}, {0.5, "IX"}}));
  for (Eigen::Index r = 0; r < 4; ++r) {
    for (Eigen::Index c = 0; c < 4; ++c) {
      const int flips = std::popcount(static_cast<unsigned>(r ^ c));
      CHECK(xx(r, c).real() == doctest::Approx(flips == 1 ? 0.5 : 0.0));
      CHECK(xx(r, c).imag() == 0.0);
    }
  }

  for (int n = 1; n <= 3; ++n) {
    for (const auto& label : oracle::all_labels(n)) {
      const ComplexMatrix diff = to_dense(parse_pauli_string(label)) - oracle::pauli_kron(label);
      CHECK_MESSAGE(diff.cwiseAbs().maxCoeff() < 1e-15, label);
    }
  }
}

TEST_CASE("Pauli strings are trace-orthonormal") {
  for (int n = 1; n <= 3; ++n) {
    const auto labels = oracle::all_labels(n);
    const Real scale = std::ldexp(1.0, -n);
    for (const auto& a : labels) {
      const ComplexMatrix pa = to_dense(parse_pauli_string(a));
      for (const auto& b : labels) {
        const Complex t = scale * (pa * to_dense(parse_pauli_string(b))).trace();
        CHECK(std::abs(t - Complex(a == b ? 1.0 : 0.0)) < 1e-14);
      }
    }
  }
}

TEST_CASE("decompose_dense") {
  const PauliSum z = decompose_dense(oracle::pauli_kron("Z"));
  REQUIRE(z.size() == 1);
  CHECK(z.terms()[0].string.to_string() == "Z");
  CHECK(z.terms()[0].coefficient == doctest::Approx(1.0));

  const PauliSum id = decompose_dense(ComplexMatrix::Identity(4, 4));
  REQUIRE(id.size() == 1);
  CHECK(id.terms()[0].string.to_string() == "II");
  CHECK(id.terms()[0].coefficient == doctest::Approx(1.0));

  SUBCASE("random Hermitian matches the brute-force trace formula") {
    std::mt19937_64 rng(11);
    const ComplexMatrix m = oracle::random_hermitian(4, rng);
    const PauliSum h = decompose_dense(m);
    for (const auto& label : oracle::all_labels(2)) {
      CHECK(std::abs(h.coefficient(parse_pauli_string(label)) - oracle::trace_coefficient(m, label)) < 1e-12);
    }
  }

  SUBCASE("round trip for n <= 4") {
    std::mt19937_64 rng(5);
    std::normal_distribution<Real> g;
    for (int n = 1; n <= 4; ++n) {
      PauliSum h(n);
      for (const auto& label : oracle::all_labels(n)) {
        if (rng() % 3 == 0) h.add_term(g(rng), parse_pauli_string(label));
      }
      const ComplexMatrix m = to_dense(h);
      CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      const PauliSum back = decompose_dense(m);
      for (const auto& label : oracle::all_labels(n)) {
        const PauliString p = parse_pauli_string(label);
        CHECK(std::abs(back.coefficient(p) - h.coefficient(p)) < 1e-12);
      }
    }
  }

  SUBCASE("rejections") {
    ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(decompose_dense(bad), Error);
    CHECK_THROWS_AS(decompose_dense(ComplexMatrix::Identity(3, 3)), Error);
  }
}

TEST_CASE("PauliSum merges duplicate strings in first-occurrence order") {
  const PauliSum h = make_pauli_sum({{0.5, "ZI"}, {1.0, "XX"}, {0.25, "ZI"}});
  REQUIRE(h.size() == 2);
  CHECK(h.terms()[0].string.to_string() == "ZI");
  CHECK(h.terms()[0].coefficient == doctest::Approx(0.75));
  CHECK(h.coefficient(parse_pauli_string("YY")) == 0.0);
  CHECK_THROWS_AS(make_pauli_sum({{1.0, "Z"}, {1.0, "ZZ"}}), Error);
}

TEST_CASE("geometry series parsing") {
  const GeometrySeries s = parse(
      "# test\n"
      "molecule H2\n"
      "geometry 0.5\n"
      "ZI 0.5\n"
      "ZI 0.25   # merged\n"
      "XX -1e-1\n"
      "\n"
      "geometry 0.95\n"
      "II -1.0\n");
  CHECK(s.label == "H2");
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0].bond_length == 0.5);
  CHECK(s.points[1].bond_length == 0.95);
  CHECK(s.points[0].hamiltonian.size() == 2);
  CHECK(s.points[0].hamiltonian.coefficient(parse_pauli_string("ZI")) == 0.75);
  CHECK(s.num_qubits() == 2);

  CHECK(parse_failure_line("") == 0);
  CHECK(parse_failure_line("molecule H2\n") > 0);
  CHECK(parse_failure_line("geometry 1.0\nZ 1.0\n") > 0);  // missing header, reported at end of input
  CHECK(parse_failure_line("molecule H2\nZ 1.0\n") == 2);
  CHECK(parse_failure_line("molecule H2\ngeometry 1.0\nZ 1+2j\n") == 3);
  CHECK(parse_failure_line("molecule H2\ngeometry 1.0\nQ 1.0\n") == 3);
  CHECK(parse_failure_line("molecule H2\ngeometry 1.0\nZ 1.0\nZZ 1.0\n") == 4);
  CHECK(parse_failure_line("molecule H2\ngeometry 1.0\ngeometry 2.0\nZ 1.0\n") > 0);
  CHECK(parse_failure_line("molecule H2\nmolecule LiH\n") == 2);

  try {
    parse("molecule H2\ngeometry 1.0\nZ 1\ngeometry 0.5\nZ 1\n");
    FAIL("expected NonMonotonicGeometry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonMonotonicGeometry);
  }
}

TEST_CASE("shipped Hamiltonian files survive the dense round trip") {
  for (const char* name : {"h2.ham", "lih.ham"}) {
    const GeometrySeries s = load_geometry_series(std::filesystem::path(SSQITE_DATA_DIR) / name);
    REQUIRE(!s.points.empty());
    for (const auto& p : s.points) {
      const ComplexMatrix m = to_dense(p.hamiltonian);
      CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      const PauliSum back = decompose_dense(m);
      for (const auto& t : p.hamiltonian.terms()) {
        CHECK(std::abs(back.coefficient(t.string) - t.coefficient) < 1e-12);
      }
    }
  }
}
