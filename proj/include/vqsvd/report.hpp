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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vqsvd/svd_result.hpp"

namespace vqsvd {

struct InputInfo {
  std::string file;
  int rows = 0;
  int cols = 0;
  int n = 0;
  double scale = 1.0;
  double phase = 0.0;
  std::vector<int> row_perm;
  std::vector<int> col_perm;

  friend bool operator==(const InputInfo&, const InputInfo&) = default;
};

/// Everything needed to rerun a command and get the same numbers.
struct ConfigEcho {
  std::string command;
  int q_blocks = 0;
  std::string weights;
  int rank = 0;
  std::string mode;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string sampling;
  double learning_rate = 0.0;
  int max_iters = 0;
  double epsilon = 0.0;
  int restarts = 0;
  double init_scale = 0.0;
  bool adam = false;
  double pivot_tol = 0.0;

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct VerifyInfo {
  /// Oracle singular values (svd) or eigenvalues (eigen) of the padded input.
  std::vector<double> oracle_values;
  std::vector<double> abs_errors;
  /// Largest error over resolved entries.
  double max_abs_error = 0.0;

  friend bool operator==(const VerifyInfo&, const VerifyInfo&) = default;
};

using MatrixRows = std::vector<std::vector<double>>;

struct RunReport {
  InputInfo input;
  ConfigEcho config;

  std::vector<double> singular_values;
  std::vector<double> d;
  std::vector<bool> resolved;
  double residual = 0.0;
  double residual_original = 0.0;
  MatrixRows u_hat;
  MatrixRows v_hat;

  bool converged = false;
  int chosen_restart = -1;
  int iterations = 0;
  double final_l = 0.0;
  bool no_progress = false;

  /// G^2 / 2^(3n+1) at the chosen restart's initial and final angles.
  double postselect_prob_initial = 0.0;
  double postselect_prob_final = 0.0;

  std::optional<VerifyInfo> verify;
  /// Pseudoinverse of the padded input, real and imaginary parts.
  std::optional<MatrixRows> pinv_real;
  std::optional<MatrixRows> pinv_imag;
  std::string trace_path;
  std::optional<double> wall_seconds;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InputInfo, file, rows, cols, n, scale, phase,
                                   row_perm, col_perm)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConfigEcho, command, q_blocks, weights, rank,
                                   mode, shots, seed, sampling, learning_rate,
                                   max_iters, epsilon, restarts, init_scale,
                                   adam, pivot_tol)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyInfo, oracle_values, abs_errors,
                                   max_abs_error)

MatrixRows to_rows(const RealMatrix& m);

std::string to_json(const RunReport& report);
/// Throws ParseError on malformed input.
RunReport run_report_from_json(const std::string& text);

/// One row per recorded iteration: restart,iter,L,grad_norm,params_checksum.
std::string trace_csv(const OptimizationTrace& trace);

}  // namespace vqsvd
