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

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "vqsvd/types.hpp"

// Amplitude-array kernels. Qubits are addressed by single-bit masks of the
// global basis index. Every kernel exists twice with identical signatures:
// `serial` is the reference implementation kept for testing, `parallel`
// splits the same loops across OpenMP threads. Elementwise kernels produce
// bitwise identical results in both; reductions in `parallel` sum fixed-size
// chunks in a fixed order so their result does not depend on thread count.
namespace vqsvd::kernels {

struct Real2x2 {
  double m00, m01, m10, m11;
};

/// Enumerates basis indices whose pinned bits equal a fixed value by
/// inserting zeros at the pinned positions of a dense counter.
class IndexPlan {
 public:
  IndexPlan(std::uint64_t pinned_mask, std::uint64_t pinned_value)
      : mask_(pinned_mask), value_(pinned_value & pinned_mask) {
    for (std::uint64_t m = pinned_mask; m != 0; m &= m - 1) {
      positions_.push_back(std::countr_zero(m));
    }
  }

  std::uint64_t count(std::uint64_t dim) const {
    return dim >> positions_.size();
  }

  std::uint64_t expand(std::uint64_t j) const {
    for (int p : positions_) {
      const std::uint64_t low = j & ((std::uint64_t{1} << p) - 1);
      j = ((j >> p) << (p + 1)) | low;
    }
    return j | value_;
  }

  /// The enumerated index following i, i.e. expand(j + 1) for i = expand(j).
  std::uint64_t next(std::uint64_t i) const {
    return (((i | mask_) + 1) & ~mask_) | value_;
  }

 private:
  std::vector<int> positions_;
  std::uint64_t mask_;
  std::uint64_t value_;
};

/// Fixed reduction chunk, in elements of the iteration space.
inline constexpr std::uint64_t kReductionChunk = std::uint64_t{1} << 12;
/// Below this many loop iterations the parallel kernels stay on one thread.
inline constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;

namespace serial {

/// 2x2 real gate on target_bit, applied where (i & ctrl_mask) == ctrl_value.
void apply_real_1q(std::span<cplx> amps, std::uint64_t target_bit,
                   std::uint64_t ctrl_mask, std::uint64_t ctrl_value,
                   const Real2x2& m);
/// Swaps amplitude i with i ^ flip_mask wherever the controls match.
void apply_flip(std::span<cplx> amps, std::uint64_t ctrl_mask,
                std::uint64_t ctrl_value, std::uint64_t flip_mask);
/// Negates every amplitude with (i & mask) == value.
void apply_sign(std::span<cplx> amps, std::uint64_t mask, std::uint64_t value);
double norm_squared(std::span<const cplx> amps);
/// Total probability of indices with (i & mask) == value.
double probability(std::span<const cplx> amps, std::uint64_t mask,
                   std::uint64_t value);
/// Zeroes indices outside the pattern and scales the rest.
void project(std::span<cplx> amps, std::uint64_t mask, std::uint64_t value,
             double scale);
/// out[p] = probability of pattern p on `bits`; bits[0] is the MSB of p.
void marginal(std::span<const cplx> amps, std::span<const std::uint64_t> bits,
              std::span<double> out);

}  // namespace serial

// Same contracts as the serial kernels.
namespace parallel {

void apply_real_1q(std::span<cplx> amps, std::uint64_t target_bit,
                   std::uint64_t ctrl_mask, std::uint64_t ctrl_value,
                   const Real2x2& m);
void apply_flip(std::span<cplx> amps, std::uint64_t ctrl_mask,
                std::uint64_t ctrl_value, std::uint64_t flip_mask);
void apply_sign(std::span<cplx> amps, std::uint64_t mask, std::uint64_t value);
double norm_squared(std::span<const cplx> amps);
double probability(std::span<const cplx> amps, std::uint64_t mask,
                   std::uint64_t value);
void project(std::span<cplx> amps, std::uint64_t mask, std::uint64_t value,
             double scale);
void marginal(std::span<const cplx> amps, std::span<const std::uint64_t> bits,
              std::span<double> out);

}  // namespace parallel

inline std::uint64_t gather_pattern(std::uint64_t index,
                                    std::span<const std::uint64_t> bits) {
  std::uint64_t p = 0;
  for (std::uint64_t b : bits) p = (p << 1) | ((index & b) ? 1 : 0);
  return p;
}

}  // namespace vqsvd::kernels
