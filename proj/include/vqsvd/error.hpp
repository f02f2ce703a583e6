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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vqsvd {

enum class Errc {
  // Input and configuration.
  kAllZeroMatrix,
  kNonFiniteEntry,
  kInvalidRank,
  kDimensionMismatch,
  kParseError,
  kInvalidConfig,
  kNotSymmetricPSD,
  kWrongLength,
  kIndexOutOfRange,
  kOverlappingQubits,
  kEmptySubset,
  // Simulation and recovery.
  kNotGroundState,
  kNormViolation,
  kImpossibleOutcome,
  kPostselectionImpossible,
  kNoSurvivingShots,
  kDegenerateReference,
  kVanishingP00,
  kCalibrationMismatch,
  kZeroMatrix,
  kConvergenceFailure,
};

std::string_view to_string(Errc code);

/// True for errors caused by the caller's input or configuration, as opposed
/// to numerical or internal consistency failures.
bool is_input_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vqsvd
