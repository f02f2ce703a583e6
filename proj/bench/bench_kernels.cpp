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

// Serial vs OpenMP kernels, and one full pipeline run per policy.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "vqsvd/circuit.hpp"
#include "vqsvd/kernels.hpp"

namespace {

using vqsvd::cplx;
namespace kernels = vqsvd::kernels;

std::vector<cplx> random_state(int qubits) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  std::vector<cplx> v(std::size_t{1} << qubits);
  for (cplx& a : v) a = cplx(normal(rng), normal(rng));
  return v;
}

template <bool Parallel>
void BM_Rotation(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  std::vector<cplx> v = random_state(qubits);
  const kernels::Real2x2 m{0.6, -0.8, 0.8, 0.6};
  const std::uint64_t target = std::uint64_t{1} << (qubits / 2);
  const std::uint64_t ctrl = 0b11;  // two controls, a quarter of the space
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::apply_real_1q(v, target, ctrl, ctrl, m);
    } else {
      kernels::serial::apply_real_1q(v, target, ctrl, ctrl, m);
    }
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(v.size() / 4) *
                          static_cast<std::int64_t>(sizeof(cplx)));
}

template <bool Parallel>
void BM_Flip(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  std::vector<cplx> v = random_state(qubits);
  const std::uint64_t flip = (std::uint64_t{1} << (qubits - 1)) | 0b100;
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::apply_flip(v, 0b1, 0b1, flip);
    } else {
      kernels::serial::apply_flip(v, 0b1, 0b1, flip);
    }
    benchmark::ClobberMemory();
  }
}

template <bool Parallel>
void BM_NormSquared(benchmark::State& state) {
  const std::vector<cplx> v = random_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::norm_squared(v));
    } else {
      benchmark::DoNotOptimize(kernels::serial::norm_squared(v));
    }
  }
}

template <bool Parallel>
void BM_Marginal(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  const std::vector<cplx> v = random_state(qubits);
  const std::uint64_t bits[2] = {std::uint64_t{1} << (qubits - 1), 0b10};
  std::vector<double> out(4);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::marginal(v, bits, out);
    } else {
      kernels::serial::marginal(v, bits, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

template <vqsvd::KernelPolicy Policy>
void BM_ProbeExact(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::normal_distribution<double> normal;
  vqsvd::ComplexMatrix m(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) m(i, j) = normal(rng);
  }
  const vqsvd::PreparedMatrix prep = vqsvd::prepare(m);
  const vqsvd::WeightVector w = vqsvd::make_weights(size, vqsvd::WeightScheme::kLinear, size);
  const int q = vqsvd::default_q_blocks(prep.n);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  std::vector<double> gamma(static_cast<std::size_t>(2 * prep.n * q));
  for (double& g : gamma) g = angle(rng);
  const auto params =
      vqsvd::AnsatzParams::from_gamma(prep.n, q, vqsvd::TieMode::kIndependent, gamma);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vqsvd::probe_exact(prep, w, params, Policy).p01);
  }
}

constexpr bool kSerial = false;
constexpr bool kParallel = true;

BENCHMARK(BM_Rotation<kSerial>)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(BM_Rotation<kParallel>)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(BM_Flip<kSerial>)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(BM_Flip<kParallel>)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(BM_NormSquared<kSerial>)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(BM_NormSquared<kParallel>)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(BM_Marginal<kSerial>)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(BM_Marginal<kParallel>)->Arg(14)->Arg(18)->Arg(22);
BENCHMARK(BM_ProbeExact<vqsvd::KernelPolicy::kSerial>)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProbeExact<vqsvd::KernelPolicy::kParallel>)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
