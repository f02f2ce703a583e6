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

#include <cstdint>
#include <vector>

#include "vqsvd/types.hpp"

namespace vqsvd {

struct IterationRecord {
  int iter = 0;
  double l_value = 0.0;
  double grad_norm = 0.0;
  std::uint64_t params_checksum = 0;
};

struct RestartTrace {
  std::vector<double> initial_params;
  std::vector<double> final_params;
  /// L at the initial parameters followed by one entry per iteration.
  std::vector<IterationRecord> iterations;
  double final_l = 0.0;
  bool converged = false;
};

struct OptimizationTrace {
  std::vector<RestartTrace> restarts;
  int chosen_restart = -1;
  double wall_seconds = 0.0;
  /// Set when the best L is below the identity-parameter value q0 * a00.
  bool no_progress = false;

  bool converged() const {
    return chosen_restart >= 0 &&
           restarts[static_cast<std::size_t>(chosen_restart)].converged;
  }
};

/// Factorization a = u_hat * diag(d) * v_hat^T of a prepared matrix, plus the
/// same factorization mapped back onto the zero-padded original input.
struct SvdResult {
  std::vector<double> d;
  /// Whether entry j of d carried a nonzero weight in the objective.
  std::vector<bool> resolved;
  RealMatrix u_hat;
  RealMatrix v_hat;
  double residual = 0.0;
  bool tied = false;

  // Filled by restore_factors.
  std::vector<double> singular_values_original;
  ComplexMatrix u_original;
  ComplexMatrix v_original;
  double residual_original = 0.0;

  OptimizationTrace trace;
};

}  // namespace vqsvd
