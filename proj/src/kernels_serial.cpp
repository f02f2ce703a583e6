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

#include <algorithm>

#include "vqsvd/kernels.hpp"

namespace vqsvd::kernels::serial {

void apply_real_1q(std::span<cplx> amps, std::uint64_t target_bit,
                   std::uint64_t ctrl_mask, std::uint64_t ctrl_value,
                   const Real2x2& m) {
  const IndexPlan plan(ctrl_mask | target_bit, ctrl_value);
  const std::uint64_t count = plan.count(amps.size());
  std::uint64_t i0 = plan.expand(0);
  for (std::uint64_t j = 0; j < count; ++j, i0 = plan.next(i0)) {
    const std::uint64_t i1 = i0 | target_bit;
    const cplx a0 = amps[i0];
    const cplx a1 = amps[i1];
    amps[i0] = m.m00 * a0 + m.m01 * a1;
    amps[i1] = m.m10 * a0 + m.m11 * a1;
  }
}

void apply_flip(std::span<cplx> amps, std::uint64_t ctrl_mask,
                std::uint64_t ctrl_value, std::uint64_t flip_mask) {
  const std::uint64_t low = flip_mask & (~flip_mask + 1);
  const IndexPlan plan(ctrl_mask | low, ctrl_value);
  const std::uint64_t count = plan.count(amps.size());
  std::uint64_t i = plan.expand(0);
  for (std::uint64_t j = 0; j < count; ++j, i = plan.next(i)) {
    std::swap(amps[i], amps[i ^ flip_mask]);
  }
}

void apply_sign(std::span<cplx> amps, std::uint64_t mask, std::uint64_t value) {
  const IndexPlan plan(mask, value);
  const std::uint64_t count = plan.count(amps.size());
  std::uint64_t i = plan.expand(0);
  for (std::uint64_t j = 0; j < count; ++j, i = plan.next(i)) {
    amps[i] = -amps[i];
  }
}

double norm_squared(std::span<const cplx> amps) {
  double sum = 0.0;
  for (const cplx& a : amps) sum += std::norm(a);
  return sum;
}

double probability(std::span<const cplx> amps, std::uint64_t mask,
                   std::uint64_t value) {
  const IndexPlan plan(mask, value);
  const std::uint64_t count = plan.count(amps.size());
  double sum = 0.0;
  std::uint64_t i = plan.expand(0);
  for (std::uint64_t j = 0; j < count; ++j, i = plan.next(i)) sum += std::norm(amps[i]);
  return sum;
}

void project(std::span<cplx> amps, std::uint64_t mask, std::uint64_t value,
             double scale) {
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    amps[i] = (i & mask) == value ? amps[i] * scale : cplx{};
  }
}

void marginal(std::span<const cplx> amps, std::span<const std::uint64_t> bits,
              std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    out[gather_pattern(i, bits)] += std::norm(amps[i]);
  }
}

}  // namespace vqsvd::kernels::serial
