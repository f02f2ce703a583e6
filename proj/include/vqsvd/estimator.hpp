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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vqsvd/ansatz.hpp"
#include "vqsvd/circuit.hpp"
#include "vqsvd/matrix_core.hpp"

namespace vqsvd {

enum class EvalMode {
  /// Full circuit simulation, probabilities read from amplitudes.
  kExact,
  /// Full circuit simulation with finite sampling of the readout.
  kShots,
  /// Classical evaluation of the weighted trace from ansatz matrices.
  kDirect,
};

struct EvalConfig {
  EvalMode mode = EvalMode::kExact;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  Sampling sampling = Sampling::kPostselected;
  KernelPolicy policy = KernelPolicy::kParallel;
};

struct ObjectiveSample {
  double l_value = 0.0;
  double g_squared = 0.0;
  EvalMode source = EvalMode::kExact;
  std::uint64_t shots = 0;
  std::uint64_t params_id = 0;
};

/// Default p00 floor: 1e-9 for exact probes, 1 / (10 shots) for shot probes.
double default_p00_floor(const ProbeResult& probe);

/// G^2 = a~00^2 / (2 p00), L = a~00 (p01 - p11) / (2 p00).
ObjectiveSample recover(const ProbeResult& probe, double p00_floor = -1.0);

/// Delta-method standard error of the recovered L under multinomial
/// sampling with `shots` draws from the probe's probabilities.
double recover_std_error(const ProbeResult& probe, std::uint64_t shots);

/// Sum_l q_l Re[(b(alpha)^T a b(beta))_ll] with b from ansatz_matrix.
ObjectiveSample objective_direct(const PreparedMatrix& prep,
                                 const WeightVector& weights,
                                 const AnsatzParams& params);

/// L through the configured route. Shot mode uses config.seed as is.
ObjectiveSample evaluate(const PreparedMatrix& prep,
                         const WeightVector& weights,
                         const AnsatzParams& params, const EvalConfig& config);

/// dL/dgamma_k = L(gamma with gamma_k + pi) / 2 for every free parameter.
///
/// In tied mode the shared angle enters both circuits, so its derivative is
/// the sum of the two independent shifts. Evaluations run concurrently;
/// evaluation j uses derive_seed(config.seed, j) in shot mode.
std::vector<double> gradient(const PreparedMatrix& prep,
                             const WeightVector& weights,
                             const AnsatzParams& params,
                             const EvalConfig& config);

/// d^2L/dgamma_k dgamma_m = L(gamma with gamma_k, gamma_m each + pi) / 4.
double hessian_entry(const PreparedMatrix& prep, const WeightVector& weights,
                     const AnsatzParams& params, std::size_t k, std::size_t m,
                     const EvalConfig& config);

}  // namespace vqsvd
