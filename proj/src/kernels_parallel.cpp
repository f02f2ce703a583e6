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
#include <cstdint>
#include <vector>

#include "vqsvd/kernels.hpp"

namespace vqsvd::kernels::parallel {

namespace {

using Index = std::int64_t;

Index num_chunks(std::uint64_t count) {
  return static_cast<Index>((count + kReductionChunk - 1) / kReductionChunk);
}

// Calls f(i) for every index of the plan. Work is split into fixed chunks of
// the iteration space; each chunk seeds its first index with expand() and
// walks the rest with next().
template <typename F>
void for_each_index(const IndexPlan& plan, std::uint64_t count, F&& f) {
  const Index chunks = num_chunks(count);
#pragma omp parallel for schedule(static) if (count >= kParallelThreshold)
  for (Index c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kReductionChunk;
    const std::uint64_t end = std::min(count, begin + kReductionChunk);
    std::uint64_t i = plan.expand(begin);
    for (std::uint64_t j = begin; j < end; ++j, i = plan.next(i)) f(i);
  }
}

// Sums f(i) over the plan chunk by chunk; partials are combined serially in
// chunk order.
template <typename F>
double chunked_sum(const IndexPlan& plan, std::uint64_t count, F&& f) {
  const Index chunks = num_chunks(count);
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static) if (count >= kParallelThreshold)
  for (Index c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kReductionChunk;
    const std::uint64_t end = std::min(count, begin + kReductionChunk);
    double s = 0.0;
    std::uint64_t i = plan.expand(begin);
    for (std::uint64_t j = begin; j < end; ++j, i = plan.next(i)) s += f(i);
    partial[static_cast<std::size_t>(c)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace

void apply_real_1q(std::span<cplx> amps, std::uint64_t target_bit,
                   std::uint64_t ctrl_mask, std::uint64_t ctrl_value,
                   const Real2x2& m) {
  const IndexPlan plan(ctrl_mask | target_bit, ctrl_value);
  for_each_index(plan, plan.count(amps.size()), [&](std::uint64_t i0) {
    const std::uint64_t i1 = i0 | target_bit;
    const cplx a0 = amps[i0];
    const cplx a1 = amps[i1];
    amps[i0] = m.m00 * a0 + m.m01 * a1;
    amps[i1] = m.m10 * a0 + m.m11 * a1;
  });
}

void apply_flip(std::span<cplx> amps, std::uint64_t ctrl_mask,
                std::uint64_t ctrl_value, std::uint64_t flip_mask) {
  const std::uint64_t low = flip_mask & (~flip_mask + 1);
  const IndexPlan plan(ctrl_mask | low, ctrl_value);
  for_each_index(plan, plan.count(amps.size()), [&](std::uint64_t i) {
    std::swap(amps[i], amps[i ^ flip_mask]);
  });
}

void apply_sign(std::span<cplx> amps, std::uint64_t mask, std::uint64_t value) {
  const IndexPlan plan(mask, value);
  for_each_index(plan, plan.count(amps.size()),
                 [&](std::uint64_t i) { amps[i] = -amps[i]; });
}

double norm_squared(std::span<const cplx> amps) {
  const IndexPlan all(0, 0);
  return chunked_sum(all, amps.size(),
                     [&](std::uint64_t i) { return std::norm(amps[i]); });
}

double probability(std::span<const cplx> amps, std::uint64_t mask,
                   std::uint64_t value) {
  const IndexPlan plan(mask, value);
  return chunked_sum(plan, plan.count(amps.size()),
                     [&](std::uint64_t i) { return std::norm(amps[i]); });
}

void project(std::span<cplx> amps, std::uint64_t mask, std::uint64_t value,
             double scale) {
  const auto size = static_cast<Index>(amps.size());
#pragma omp parallel for schedule(static) if (size >= static_cast<Index>(kParallelThreshold))
  for (Index s = 0; s < size; ++s) {
    const auto i = static_cast<std::uint64_t>(s);
    amps[i] = (i & mask) == value ? amps[i] * scale : cplx{};
  }
}

void marginal(std::span<const cplx> amps, std::span<const std::uint64_t> bits,
              std::span<double> out) {
  const Index chunks = num_chunks(amps.size());
  const std::size_t width = out.size();
  std::vector<double> partial(static_cast<std::size_t>(chunks) * width, 0.0);
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (Index c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kReductionChunk;
    const std::uint64_t end =
        std::min<std::uint64_t>(amps.size(), begin + kReductionChunk);
    double* row = partial.data() + static_cast<std::size_t>(c) * width;
    for (std::uint64_t i = begin; i < end; ++i) {
      row[gather_pattern(i, bits)] += std::norm(amps[i]);
    }
  }
  std::fill(out.begin(), out.end(), 0.0);
  for (Index c = 0; c < chunks; ++c) {
    for (std::size_t p = 0; p < width; ++p) {
      out[p] += partial[static_cast<std::size_t>(c) * width + p];
    }
  }
}

}  // namespace vqsvd::kernels::parallel
