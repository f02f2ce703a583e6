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
#include <span>
#include <string>
#include <vector>

#include "vqsvd/layout.hpp"
#include "vqsvd/types.hpp"

namespace vqsvd {

struct PreparedMatrix;
struct WeightVector;

enum class KernelPolicy { kSerial, kParallel };

/// Control on `qubit`; polarity 1 fires on |1>, polarity 0 on |0>.
struct Control {
  int qubit;
  int polarity = 1;
};

/// Dense pure state over num_qubits qubits. Qubit 0 is the most significant
/// bit of the basis index. Gates mutate in place.
class Statevector {
 public:
  /// |0...0> on a bare register.
  explicit Statevector(int num_qubits,
                       KernelPolicy policy = KernelPolicy::kParallel);
  /// |0...0> on the 5n+3 qubit pipeline register.
  explicit Statevector(const RegisterLayout& layout,
                       KernelPolicy policy = KernelPolicy::kParallel);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t size() const { return amps_.size(); }
  const std::optional<RegisterLayout>& layout() const { return layout_; }
  KernelPolicy policy() const { return policy_; }

  std::span<const cplx> amplitudes() const { return amps_; }
  /// Direct write access. Forgets which qubits are known to be |0>; call
  /// refresh_support() afterwards to recover the gate-skipping speedup.
  std::span<cplx> mutable_amplitudes();
  cplx amplitude(std::uint64_t index) const { return amps_.at(index); }

  void apply_h(int qubit);
  void apply_x(int qubit);
  /// Ry(theta) = exp(-i sigma_y theta / 2).
  void apply_ry(int qubit, double theta);
  void apply_z(int qubit);
  /// X on every target where each control matches its polarity.
  void apply_mcx(std::span<const Control> controls,
                 std::span<const int> targets);
  void apply_mcx(std::initializer_list<Control> controls,
                 std::initializer_list<int> targets);
  /// Z on target when control is |0>.
  void apply_anticontrolled_z(int control, int target);
  /// H on target when control is |1>.
  void apply_controlled_h(int control, int target);

  /// Projects `qubit` onto `outcome`, renormalizes, and returns the
  /// probability of that outcome. Throws ImpossibleOutcome below 1e-14.
  double measure_postselect(int qubit, int outcome);
  double probability(int qubit, int outcome) const;
  /// Exact marginal distribution of `qubits`; qubits[0] is the MSB of the
  /// pattern index.
  std::vector<double> marginal(std::span<const int> qubits) const;
  double norm_squared() const;

  /// Bits of qubits that are |0> in every nonzero amplitude, as far as the
  /// applied gates tell. Gates skip the index half where such a qubit is 1.
  std::uint64_t known_zero_mask() const { return zero_bits_; }
  /// Recomputes known_zero_mask() from the amplitudes.
  void refresh_support();

 private:
  std::uint64_t bit(int qubit) const;
  void apply_real(int qubit, std::uint64_t ctrl_mask, std::uint64_t ctrl_value,
                  double m00, double m01, double m10, double m11);
  void apply_sign_pattern(std::uint64_t mask, std::uint64_t value);

  int num_qubits_;
  KernelPolicy policy_;
  std::optional<RegisterLayout> layout_;
  std::vector<cplx> amps_;
  std::uint64_t zero_bits_ = 0;
};

/// Smallest probability treated as a possible measurement outcome.
inline constexpr double kProbabilityFloor = 1e-14;

/// Writes |A>_RC |0>_chi |0>_psi |phi>_q |0>_KBB~ into a ground state:
/// the amplitude at (i, j, 0, 0, k, 0, 0, 0) becomes a(i, j) * q_k.
void load_product_state(Statevector& state, const PreparedMatrix& prep,
                        const WeightVector& weights);

struct AmplitudeEntry {
  std::uint64_t index;
  cplx amplitude;
  BasisLabel label;
};

/// Amplitudes with modulus above threshold, decoded into subsystem labels.
/// Requires a state built on a RegisterLayout.
std::vector<AmplitudeEntry> dump_amplitudes(const Statevector& state,
                                            double threshold);
std::string format_dump(const Statevector& state,
                        const std::vector<AmplitudeEntry>& entries);

}  // namespace vqsvd
