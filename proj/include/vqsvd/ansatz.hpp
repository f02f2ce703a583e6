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
#include <span>
#include <vector>

#include "vqsvd/layout.hpp"
#include "vqsvd/statevector.hpp"
#include "vqsvd/types.hpp"

namespace vqsvd {

enum class TieMode {
  kIndependent,
  /// beta is alpha; used for eigendecomposition of symmetric matrices.
  kTied,
};

/// Angles of the two orthogonal ansatz circuits U(alpha) and U(beta), each
/// made of q_blocks blocks of n Ry rotations.
///
/// The free parameter vector gamma is (alpha, beta) in independent mode and
/// alpha alone in tied mode; parameter indices below are 0-based into gamma.
class AnsatzParams {
 public:
  AnsatzParams(int n, int q_blocks, TieMode tie_mode, std::vector<double> alpha,
               std::vector<double> beta = {});

  static AnsatzParams zeros(int n, int q_blocks,
                            TieMode tie_mode = TieMode::kIndependent);
  /// Builds params from a free parameter vector gamma.
  static AnsatzParams from_gamma(int n, int q_blocks, TieMode tie_mode,
                                 std::span<const double> gamma);

  int n() const { return n_; }
  int q_blocks() const { return q_blocks_; }
  TieMode tie_mode() const { return tie_mode_; }
  /// n * Q, the angle count per circuit.
  std::size_t angles_per_circuit() const {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(q_blocks_);
  }
  std::size_t num_parameters() const;

  std::span<const double> alpha() const { return alpha_; }
  std::span<const double> beta() const {
    return tie_mode_ == TieMode::kTied ? std::span<const double>(alpha_)
                                       : std::span<const double>(beta_);
  }
  std::vector<double> gamma() const;
  /// Same angles with beta stored independently.
  AnsatzParams untied() const;
  /// FNV-1a hash over the free parameters.
  std::uint64_t checksum() const;

  friend bool operator==(const AnsatzParams&, const AnsatzParams&) = default;

 private:
  int n_;
  int q_blocks_;
  TieMode tie_mode_;
  std::vector<double> alpha_;
  std::vector<double> beta_;
};

/// ceil(N^2 / n), the smallest Q with n * Q >= N^2.
int default_q_blocks(int n);

/// Copy of params with gamma_k incremented by delta. In tied mode index k
/// addresses the shared angle.
AnsatzParams shift(const AnsatzParams& params, std::size_t k, double delta);

/// Applies U(angles) to one subsystem. Block b = 0..Q-1 in order: Ry on every
/// qubit j of the subsystem with angle[b * n + j], then CNOT(j -> j + 1) for
/// j = 0..n-2.
void apply_ansatz(Statevector& state, const Subsystem& reg,
                  std::span<const double> angles);

/// Applies U(angles) to `reg` on the |1> branch of `control` and identity on
/// the |0> branch. Rotations are built as Ry(t/2) C0Z Ry(t/2) C0Z sandwiches
/// with anti-controlled Z, CNOTs become Toffolis with `control` added.
void apply_controlled_ansatz(Statevector& state, const Subsystem& reg,
                             int control, std::span<const double> angles);

/// The N x N real matrix b with b(l, k) = <l| U(angles) |k>.
RealMatrix ansatz_matrix(int n, std::span<const double> angles);

}  // namespace vqsvd
