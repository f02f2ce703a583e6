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
#include <map>
#include <span>
#include <vector>

#include "vqsvd/statevector.hpp"

namespace vqsvd {

/// Measurement record over a named qubit subset. Patterns are integers with
/// qubits[0] as the most significant bit.
struct ShotCounts {
  std::vector<int> qubits;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  /// Shots rejected by post-selection; not present in `counts`.
  std::uint64_t discarded = 0;

  std::uint64_t kept() const { return shots - discarded; }
  std::uint64_t count(std::uint64_t pattern) const;
  double frequency(std::uint64_t pattern) const;
};

/// Draws `shots` independent outcomes from a distribution over patterns.
/// Deterministic for a fixed seed.
std::vector<std::uint64_t> draw_counts(std::span<const double> probabilities,
                                       std::uint64_t shots, std::uint64_t seed);

/// Samples the exact marginal of `qubits`.
ShotCounts sample(const Statevector& state, std::span<const int> qubits,
                  std::uint64_t shots, std::uint64_t seed);

/// Independent per-stream seed derived from a master seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace vqsvd
