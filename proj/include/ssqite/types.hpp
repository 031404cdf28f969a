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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace ssqite {

using Real = double;
using Complex = std::complex<Real>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RealVector = Vector<Real>;
using RealMatrix = Matrix<Real>;
using ComplexVector = Vector<Complex>;
using ComplexMatrix = Matrix<Complex>;

/// Largest register for which dense 2^n x 2^n matrices are built.
inline constexpr int kMaxDenseQubits = 12;

enum class ErrorCode {
  kInvalidLabel,
  kEmptyString,
  kTooManyQubits,
  kNotHermitian,
  kNotPowerOfTwo,
  kParseError,
  kNonMonotonicGeometry,
  kDimensionMismatch,
  kSlotOutOfRange,
  kUnsupportedMode,
  kZeroShots,
  kSingularSystem,
  kMaxStepsExceeded,
  kMaxItersExceeded,
  kNonDecreasingWeights,
  kNonOrthogonalInputs,
  kGeometryNotFound,
  kInvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ssqite
