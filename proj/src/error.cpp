// Copyright 2026 The vqsvd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqsvd/error.hpp"

namespace vqsvd {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kAllZeroMatrix: return "AllZeroMatrix";
    case Errc::kNonFiniteEntry: return "NonFiniteEntry";
    case Errc::kInvalidRank: return "InvalidRank";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kParseError: return "ParseError";
    case Errc::kInvalidConfig: return "InvalidConfig";
    case Errc::kNotSymmetricPSD: return "NotSymmetricPSD";
    case Errc::kWrongLength: return "WrongLength";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kOverlappingQubits: return "OverlappingQubits";
    case Errc::kEmptySubset: return "EmptySubset";
    case Errc::kNotGroundState: return "NotGroundState";
    case Errc::kNormViolation: return "NormViolation";
    case Errc::kImpossibleOutcome: return "ImpossibleOutcome";
    case Errc::kPostselectionImpossible: return "PostselectionImpossible";
    case Errc::kNoSurvivingShots: return "NoSurvivingShots";
    case Errc::kDegenerateReference: return "DegenerateReference";
    case Errc::kVanishingP00: return "VanishingP00";
    case Errc::kCalibrationMismatch: return "CalibrationMismatch";
    case Errc::kZeroMatrix: return "ZeroMatrix";
    case Errc::kConvergenceFailure: return "ConvergenceFailure";
  }
  return "Unknown";
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::kAllZeroMatrix:
    case Errc::kNonFiniteEntry:
    case Errc::kInvalidRank:
    case Errc::kDimensionMismatch:
    case Errc::kParseError:
    case Errc::kInvalidConfig:
    case Errc::kNotSymmetricPSD:
    case Errc::kWrongLength:
    case Errc::kIndexOutOfRange:
    case Errc::kOverlappingQubits:
    case Errc::kEmptySubset:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace vqsvd
