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
#include <string>

namespace vqsvd {

/// A contiguous block of qubits inside the register.
struct Subsystem {
  int first = 0;
  int size = 0;

  /// Global index of the subsystem's qubit j (0-based, j = 0 is the most
  /// significant bit of the subsystem's label).
  int qubit(int j) const { return first + j; }
};

/// Subsystem labels of one computational basis state.
struct BasisLabel {
  std::uint64_t r = 0;
  std::uint64_t c = 0;
  std::uint64_t chi = 0;
  std::uint64_t psi = 0;
  std::uint64_t q = 0;
  int k = 0;
  int b = 0;
  int b_tilde = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// The 5n+3 qubit register R C chi psi q K B B~.
///
/// Qubit 0 is the most significant bit of the global basis index, so reading
/// an index from most to least significant bit gives
/// R_1..R_n C_1..C_n chi_1..chi_n psi_1..psi_n q_1..q_n K B B~.
class RegisterLayout {
 public:
  explicit RegisterLayout(int n);

  int n() const { return n_; }
  int total_qubits() const { return 5 * n_ + 3; }
  std::uint64_t dimension() const { return std::uint64_t{1} << total_qubits(); }

  Subsystem row() const { return {0, n_}; }
  Subsystem col() const { return {n_, n_}; }
  Subsystem chi() const { return {2 * n_, n_}; }
  Subsystem psi() const { return {3 * n_, n_}; }
  Subsystem weight() const { return {4 * n_, n_}; }
  int k() const { return 5 * n_; }
  int b() const { return 5 * n_ + 1; }
  int b_tilde() const { return 5 * n_ + 2; }

  /// Bit of the global basis index that holds `qubit`.
  std::uint64_t bit(int qubit) const {
    return std::uint64_t{1} << (total_qubits() - 1 - qubit);
  }

  std::uint64_t index_of(const BasisLabel& label) const;
  BasisLabel label_of(std::uint64_t index) const;
  std::string format(const BasisLabel& label) const;

 private:
  int n_;
};

}  // namespace vqsvd
