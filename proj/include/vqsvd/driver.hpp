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

#include "vqsvd/ansatz.hpp"
#include "vqsvd/estimator.hpp"
#include "vqsvd/matrix_core.hpp"
#include "vqsvd/svd_result.hpp"

namespace vqsvd {

struct OptimizerConfig {
  double learning_rate = 0.5;
  int max_iters = 5000;
  /// Stop once |L[k+1] - L[k]| < epsilon.
  double epsilon = 1e-8;
  int restarts = 3;
  /// Initial angles are uniform in [-init_scale, init_scale].
  double init_scale = 0.1;
  std::uint64_t seed = 0;
  EvalConfig eval;
  /// Adam with beta1 = 0.9, beta2 = 0.999, eps = 1e-8.
  bool use_adam = false;

  void validate() const;
};

struct AnsatzShape {
  int n = 1;
  int q_blocks = 1;
  TieMode tie_mode = TieMode::kIndependent;
};

struct OptimizeResult {
  AnsatzParams best;
  OptimizationTrace trace;
};

/// Gradient ascent on L with restarts; returns the restart with the largest
/// final L. Restart r draws its initial angles from derive_seed(seed, r).
OptimizeResult optimize(const PreparedMatrix& prep, const WeightVector& weights,
                        const AnsatzShape& shape, const OptimizerConfig& config);

/// d_j = (b(alpha)^T a b(beta))_jj, u_hat = b(alpha), v_hat = b(beta).
///
/// Negative d_j flip sign together with column j of v_hat, unless params are
/// tied (then u_hat == v_hat is kept and d_j stays an eigenvalue estimate).
/// Entries are then sorted descending with their columns.
SvdResult extract(const PreparedMatrix& prep, const WeightVector& weights,
                  const AnsatzParams& params);

/// Optimize plus extract plus restore_factors.
SvdResult run_svd(const PreparedMatrix& prep, const WeightVector& weights,
                  int q_blocks, const OptimizerConfig& config);

/// Tied-angle optimization of a symmetric positive semidefinite matrix.
/// Throws NotSymmetricPSD when asymmetry or a negative eigenvalue exceeds
/// 1e-10.
SvdResult eigendecompose_psd(const PreparedMatrix& prep,
                             const WeightVector& weights, int q_blocks,
                             const OptimizerConfig& config);

/// Sum over d_j > rank_tol * d_0 of v_hat_j u_hat_j^T / d_j.
ComplexMatrix pseudoinverse(const SvdResult& result, double rank_tol = 1e-8);

/// Pseudoinverse of the padded original from the restored factors.
ComplexMatrix pseudoinverse_original(const SvdResult& result,
                                     double rank_tol = 1e-8);

}  // namespace vqsvd
