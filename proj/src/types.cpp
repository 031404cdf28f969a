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

#include "ssqite/types.hpp"

namespace ssqite {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kEmptyString: return "EmptyString";
    case ErrorCode::kTooManyQubits: return "TooManyQubits";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNonMonotonicGeometry: return "NonMonotonicGeometry";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSlotOutOfRange: return "SlotOutOfRange";
    case ErrorCode::kUnsupportedMode: return "UnsupportedMode";
    case ErrorCode::kZeroShots: return "ZeroShots";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kMaxStepsExceeded: return "MaxStepsExceeded";
    case ErrorCode::kMaxItersExceeded: return "MaxItersExceeded";
    case ErrorCode::kNonDecreasingWeights: return "NonDecreasingWeights";
    case ErrorCode::kNonOrthogonalInputs: return "NonOrthogonalInputs";
    case ErrorCode::kGeometryNotFound: return "GeometryNotFound";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ssqite
