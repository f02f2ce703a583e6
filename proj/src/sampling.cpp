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

#include "vqsvd/sampling.hpp"

#include <cmath>
#include <random>

#include "vqsvd/error.hpp"

namespace vqsvd {

std::uint64_t ShotCounts::count(std::uint64_t pattern) const {
  const auto it = counts.find(pattern);
  return it == counts.end() ? 0 : it->second;
}

double ShotCounts::frequency(std::uint64_t pattern) const {
  return kept() == 0 ? 0.0
                     : static_cast<double>(count(pattern)) /
                           static_cast<double>(kept());
}

std::vector<std::uint64_t> draw_counts(std::span<const double> probabilities,
                                       std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw Error(Errc::kInvalidConfig, "shots must be >= 1");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw Error(Errc::kInvalidConfig, "probabilities must be finite and >= 0");
    }
    total += p;
  }
  if (!(total > 0.0)) throw Error(Errc::kInvalidConfig, "all probabilities are zero");

  // Multinomial as a chain of conditional binomials: outcome k takes
  // Binomial(remaining shots, p_k / remaining mass).
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  std::size_t last = probabilities.size() - 1;
  while (probabilities[last] == 0.0) --last;
  std::uint64_t left = shots;
  double mass = total;
  for (std::size_t k = 0; k <= last && left > 0; ++k) {
    const double p = probabilities[k];
    if (k == last || p >= mass) {
      counts[k] = left;
      break;
    }
    if (p > 0.0) {
      std::binomial_distribution<std::uint64_t> dist(left, p / mass);
      counts[k] = dist(rng);
      left -= counts[k];
    }
    mass -= p;
  }
  return counts;
}

ShotCounts sample(const Statevector& state, std::span<const int> qubits,
                  std::uint64_t shots, std::uint64_t seed) {
  if (qubits.empty()) throw Error(Errc::kEmptySubset, "no qubits to sample");
  const std::vector<double> probs = state.marginal(qubits);
  const std::vector<std::uint64_t> drawn = draw_counts(probs, shots, seed);
  ShotCounts out;
  out.qubits.assign(qubits.begin(), qubits.end());
  out.shots = shots;
  out.seed = seed;
  for (std::size_t p = 0; p < drawn.size(); ++p) {
    if (drawn[p]) out.counts[p] = drawn[p];
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace vqsvd
