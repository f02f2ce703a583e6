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

#include "vqsvd/ansatz.hpp"
#include "vqsvd/matrix_core.hpp"
#include "vqsvd/sampling.hpp"
#include "vqsvd/statevector.hpp"

namespace vqsvd {

/// Squared norm of the state after one pipeline stage.
struct StageRecord {
  std::string stage;
  double norm_squared = 0.0;
  double postselect_prob = 0.0;
};

struct PipelineOptions {
  /// Post-select B~ = 1. When false the full state is kept so that B~ can be
  /// sampled together with K and B.
  bool postselect = true;
  /// Apply H_B and the B-controlled H_K.
  bool readout = true;
  bool record_trace = false;
  KernelPolicy policy = KernelPolicy::kParallel;
};

struct PipelineResult {
  Statevector state;
  /// Probability of B~ = 1 on the state before the controlled measurement.
  double postselect_prob = 0.0;
  /// Amplitude of (K=0, B=1, B~=1, all registers zero) before the
  /// measurement, times 2^((3n+1)/2). Equals 2^n q0 a00.
  cplx reference_amplitude;
  /// Same for the K=1 component; equals the weighted trace L~.
  cplx objective_amplitude;
  std::vector<StageRecord> trace;
};

/// Runs |Phi_0> through the readout transform.
///
/// Stages: load; H on chi and K; K,chi_i-controlled X on psi_i and q_i;
/// K-controlled U(alpha) on chi and U(beta) on psi; K,chi_i-controlled X on
/// R_i then K,psi_i-controlled X on C_i; H on chi and psi; X on B and B~
/// controlled on R, C, chi, psi, q all zero; post-select B~ = 1; H on B;
/// B-controlled H on K.
PipelineResult run_pipeline(const PreparedMatrix& prep,
                            const WeightVector& weights,
                            const AnsatzParams& params,
                            const PipelineOptions& options = {});

/// 2^n q0 a00.
double analytic_reference(const PreparedMatrix& prep,
                          const WeightVector& weights);

/// Simulated reference amplitude at zero angles.
double calibrate_reference(const PreparedMatrix& prep,
                           const WeightVector& weights);

enum class ProbeMode { kExact, kShots };
enum class Sampling {
  /// Sample (K, B) from the renormalized B~ = 1 branch.
  kPostselected,
  /// Sample (B~, K, B) and discard shots with B~ = 0.
  kRaw,
};

/// Readout probabilities p_ij of |i>_K |j>_B on the post-selected state.
struct ProbeResult {
  double p00 = 0.0;
  double p10 = 0.0;
  double p01 = 0.0;
  double p11 = 0.0;
  double a00_tilde = 0.0;
  double postselect_prob = 0.0;
  ProbeMode mode = ProbeMode::kExact;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  Sampling sampling = Sampling::kPostselected;
  /// (K, B) counts in shot mode, K as the high bit.
  std::optional<ShotCounts> counts;
};

/// Reads p_ij from amplitudes. Throws CalibrationMismatch when the simulated
/// reference amplitude differs from 2^n q0 a00 by more than 1e-8.
ProbeResult probe_exact(const PreparedMatrix& prep, const WeightVector& weights,
                        const AnsatzParams& params,
                        KernelPolicy policy = KernelPolicy::kParallel);

ProbeResult probe_shots(const PreparedMatrix& prep, const WeightVector& weights,
                        const AnsatzParams& params, std::uint64_t shots,
                        std::uint64_t seed,
                        Sampling sampling = Sampling::kPostselected,
                        KernelPolicy policy = KernelPolicy::kParallel);

}  // namespace vqsvd
