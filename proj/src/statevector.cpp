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

#include "vqsvd/statevector.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "vqsvd/error.hpp"
#include "vqsvd/kernels.hpp"
#include "vqsvd/matrix_core.hpp"

namespace vqsvd {

namespace {

constexpr int kMaxQubits = 34;

}  // namespace

Statevector::Statevector(int num_qubits, KernelPolicy policy)
    : num_qubits_(num_qubits), policy_(policy) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw Error(Errc::kInvalidConfig,
                "unsupported qubit count " + std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, cplx{});
  amps_[0] = 1.0;
  zero_bits_ = amps_.size() - 1;
}

Statevector::Statevector(const RegisterLayout& layout, KernelPolicy policy)
    : Statevector(layout.total_qubits(), policy) {
  layout_ = layout;
}

std::uint64_t Statevector::bit(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw Error(Errc::kIndexOutOfRange,
                "qubit " + std::to_string(qubit) + " outside register of " +
                    std::to_string(num_qubits_));
  }
  return std::uint64_t{1} << (num_qubits_ - 1 - qubit);
}

std::span<cplx> Statevector::mutable_amplitudes() {
  zero_bits_ = 0;
  return amps_;
}

void Statevector::refresh_support() {
  std::uint64_t used = 0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (amps_[i] != cplx{}) used |= i;
  }
  zero_bits_ = (amps_.size() - 1) & ~used;
}

void Statevector::apply_real(int qubit, std::uint64_t ctrl_mask,
                             std::uint64_t ctrl_value, double m00, double m01,
                             double m10, double m11) {
  const std::uint64_t t = bit(qubit);
  // A control waiting for |1> on a qubit that is |0> never fires.
  if (ctrl_value & zero_bits_) return;
  const std::uint64_t pinned = ctrl_mask | (zero_bits_ & ~(ctrl_mask | t));
  const kernels::Real2x2 m{m00, m01, m10, m11};
  if (policy_ == KernelPolicy::kSerial) {
    kernels::serial::apply_real_1q(amps_, t, pinned, ctrl_value, m);
  } else {
    kernels::parallel::apply_real_1q(amps_, t, pinned, ctrl_value, m);
  }
  if (m10 != 0.0) zero_bits_ &= ~t;
}

void Statevector::apply_sign_pattern(std::uint64_t mask, std::uint64_t value) {
  if (value & zero_bits_) return;
  const std::uint64_t pinned = mask | (zero_bits_ & ~mask);
  if (policy_ == KernelPolicy::kSerial) {
    kernels::serial::apply_sign(amps_, pinned, value);
  } else {
    kernels::parallel::apply_sign(amps_, pinned, value);
  }
}

void Statevector::apply_h(int qubit) {
  constexpr double s = std::numbers::sqrt2 / 2.0;
  apply_real(qubit, 0, 0, s, s, s, -s);
}

void Statevector::apply_x(int qubit) {
  const Control none[1] = {{0, 1}};
  const int target[1] = {qubit};
  apply_mcx(std::span<const Control>(none, 0), target);
}

void Statevector::apply_ry(int qubit, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  apply_real(qubit, 0, 0, c, -s, s, c);
}

void Statevector::apply_z(int qubit) {
  const std::uint64_t b = bit(qubit);
  apply_sign_pattern(b, b);
}

void Statevector::apply_mcx(std::span<const Control> controls,
                            std::span<const int> targets) {
  std::uint64_t ctrl_mask = 0;
  std::uint64_t ctrl_value = 0;
  for (const Control& c : controls) {
    const std::uint64_t b = bit(c.qubit);
    if (ctrl_mask & b) {
      throw Error(Errc::kOverlappingQubits, "repeated control qubit");
    }
    ctrl_mask |= b;
    if (c.polarity) ctrl_value |= b;
  }
  std::uint64_t flip = 0;
  for (int t : targets) {
    const std::uint64_t b = bit(t);
    if ((ctrl_mask | flip) & b) {
      throw Error(Errc::kOverlappingQubits,
                  "target " + std::to_string(t) + " overlaps another qubit");
    }
    flip |= b;
  }
  if (flip == 0 || (ctrl_value & zero_bits_)) return;
  const std::uint64_t pinned = ctrl_mask | (zero_bits_ & ~(ctrl_mask | flip));
  if (policy_ == KernelPolicy::kSerial) {
    kernels::serial::apply_flip(amps_, pinned, ctrl_value, flip);
  } else {
    kernels::parallel::apply_flip(amps_, pinned, ctrl_value, flip);
  }
  zero_bits_ &= ~flip;
}

void Statevector::apply_mcx(std::initializer_list<Control> controls,
                            std::initializer_list<int> targets) {
  apply_mcx(std::span<const Control>(controls.begin(), controls.size()),
            std::span<const int>(targets.begin(), targets.size()));
}

void Statevector::apply_anticontrolled_z(int control, int target) {
  if (control == target) {
    throw Error(Errc::kOverlappingQubits, "control equals target");
  }
  const std::uint64_t c = bit(control);
  const std::uint64_t t = bit(target);
  apply_sign_pattern(c | t, t);
}

void Statevector::apply_controlled_h(int control, int target) {
  if (control == target) {
    throw Error(Errc::kOverlappingQubits, "control equals target");
  }
  constexpr double s = std::numbers::sqrt2 / 2.0;
  const std::uint64_t c = bit(control);
  apply_real(target, c, c, s, s, s, -s);
}

double Statevector::probability(int qubit, int outcome) const {
  const std::uint64_t b = bit(qubit);
  const std::uint64_t value = outcome ? b : 0;
  return policy_ == KernelPolicy::kSerial
             ? kernels::serial::probability(amps_, b, value)
             : kernels::parallel::probability(amps_, b, value);
}

double Statevector::measure_postselect(int qubit, int outcome) {
  const double p = probability(qubit, outcome);
  if (p < kProbabilityFloor) {
    throw Error(Errc::kImpossibleOutcome,
                "outcome " + std::to_string(outcome) + " on qubit " +
                    std::to_string(qubit) + " has probability " +
                    std::to_string(p));
  }
  const std::uint64_t b = bit(qubit);
  const double scale = 1.0 / std::sqrt(p);
  if (policy_ == KernelPolicy::kSerial) {
    kernels::serial::project(amps_, b, outcome ? b : 0, scale);
  } else {
    kernels::parallel::project(amps_, b, outcome ? b : 0, scale);
  }
  if (!outcome) zero_bits_ |= b;
  return p;
}

std::vector<double> Statevector::marginal(std::span<const int> qubits) const {
  if (qubits.empty()) {
    throw Error(Errc::kEmptySubset, "marginal over no qubits");
  }
  std::vector<std::uint64_t> bits;
  std::uint64_t seen = 0;
  for (int q : qubits) {
    const std::uint64_t b = bit(q);
    if (seen & b) throw Error(Errc::kOverlappingQubits, "repeated qubit");
    seen |= b;
    bits.push_back(b);
  }
  std::vector<double> out(std::size_t{1} << qubits.size());
  if (policy_ == KernelPolicy::kSerial) {
    kernels::serial::marginal(amps_, bits, out);
  } else {
    kernels::parallel::marginal(amps_, bits, out);
  }
  return out;
}

double Statevector::norm_squared() const {
  return policy_ == KernelPolicy::kSerial
             ? kernels::serial::norm_squared(amps_)
             : kernels::parallel::norm_squared(amps_);
}

void load_product_state(Statevector& state, const PreparedMatrix& prep,
                        const WeightVector& weights) {
  if (!state.layout()) {
    throw Error(Errc::kInvalidConfig, "state has no register layout");
  }
  const RegisterLayout& layout = *state.layout();
  const int size = 1 << layout.n();
  if (prep.dim() != size || weights.dim() != size) {
    throw Error(Errc::kDimensionMismatch,
                "matrix and weights must both have dimension " +
                    std::to_string(size));
  }
  const auto amps = state.amplitudes();
  if (std::abs(amps[0] - cplx(1.0)) > 1e-14 ||
      std::abs(state.norm_squared() - 1.0) > 1e-14) {
    throw Error(Errc::kNotGroundState, "state is not |0...0>");
  }
  double q_norm = 0.0;
  for (double v : weights.q) q_norm += v * v;
  if (std::abs(prep.a.squaredNorm() - 1.0) > 1e-10 ||
      std::abs(q_norm - 1.0) > 1e-10) {
    throw Error(Errc::kNormViolation, "matrix or weights are not normalized");
  }
  auto out = state.mutable_amplitudes();
  out[0] = 0.0;
  BasisLabel label;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      for (int k = 0; k < size; ++k) {
        label.r = static_cast<std::uint64_t>(i);
        label.c = static_cast<std::uint64_t>(j);
        label.q = static_cast<std::uint64_t>(k);
        out[layout.index_of(label)] =
            prep.a(i, j) * weights.q[static_cast<std::size_t>(k)];
      }
    }
  }
  state.refresh_support();
}

std::vector<AmplitudeEntry> dump_amplitudes(const Statevector& state,
                                            double threshold) {
  if (!state.layout()) {
    throw Error(Errc::kInvalidConfig, "state has no register layout");
  }
  std::vector<AmplitudeEntry> out;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) > threshold) {
      out.push_back({i, amps[i], state.layout()->label_of(i)});
    }
  }
  return out;
}

std::string format_dump(const Statevector& state,
                        const std::vector<AmplitudeEntry>& entries) {
  std::ostringstream out;
  out << std::setprecision(12);
  for (const AmplitudeEntry& e : entries) {
    out << state.layout()->format(e.label) << "  " << e.amplitude.real()
        << (e.amplitude.imag() < 0 ? " - " : " + ")
        << std::abs(e.amplitude.imag()) << "i\n";
  }
  return out.str();
}

}  // namespace vqsvd
