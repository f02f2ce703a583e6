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

#include "vqsvd/estimator.hpp"

#include <cmath>
#include <exception>
#include <numbers>

#include "vqsvd/error.hpp"
#include "vqsvd/sampling.hpp"

namespace vqsvd {

namespace {

// Evaluates every point, concurrently; rethrows the first failure.
std::vector<double> evaluate_all(const PreparedMatrix& prep,
                                 const WeightVector& weights,
                                 const std::vector<AnsatzParams>& points,
                                 const EvalConfig& config) {
  std::vector<double> values(points.size(), 0.0);
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j < count; ++j) {
    try {
      EvalConfig local = config;
      local.seed = derive_seed(config.seed, static_cast<std::uint64_t>(j));
      values[static_cast<std::size_t>(j)] =
          evaluate(prep, weights, points[static_cast<std::size_t>(j)], local)
              .l_value;
    } catch (...) {
#pragma omp critical(vqsvd_eval_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return values;
}

// Indices into the untied gamma that a free parameter k feeds.
std::vector<std::size_t> untied_indices(const AnsatzParams& params,
                                        std::size_t k) {
  if (k >= params.num_parameters()) {
    throw Error(Errc::kIndexOutOfRange,
                "parameter index " + std::to_string(k) + " >= " +
                    std::to_string(params.num_parameters()));
  }
  if (params.tie_mode() == TieMode::kIndependent) return {k};
  return {k, k + params.angles_per_circuit()};
}

}  // namespace

double default_p00_floor(const ProbeResult& probe) {
  return probe.mode == ProbeMode::kExact
             ? 1e-9
             : 1.0 / (10.0 * static_cast<double>(probe.shots));
}

ObjectiveSample recover(const ProbeResult& probe, double p00_floor) {
  if (p00_floor < 0.0) p00_floor = default_p00_floor(probe);
  if (std::abs(probe.a00_tilde) < 1e-12) {
    throw Error(Errc::kDegenerateReference,
                "reference amplitude a~00 vanishes; enable pivoting");
  }
  if (probe.p00 <= p00_floor) {
    throw Error(Errc::kVanishingP00,
                "p00 = " + std::to_string(probe.p00) + " is below the floor " +
                    std::to_string(p00_floor) + "; increase shots");
  }
  ObjectiveSample s;
  const double a = probe.a00_tilde;
  s.g_squared = a * a / (2.0 * probe.p00);
  s.l_value = a * (probe.p01 - probe.p11) / (2.0 * probe.p00);
  s.source = probe.mode == ProbeMode::kExact ? EvalMode::kExact : EvalMode::kShots;
  s.shots = probe.shots;
  return s;
}

double recover_std_error(const ProbeResult& probe, std::uint64_t shots) {
  const double a = probe.a00_tilde;
  const double l = a * (probe.p01 - probe.p11) / (2.0 * probe.p00);
  const double p[4] = {probe.p00, probe.p10, probe.p01, probe.p11};
  const double g[4] = {-l / probe.p00, 0.0, a / (2.0 * probe.p00),
                       -a / (2.0 * probe.p00)};
  double second = 0.0;
  double first = 0.0;
  for (int i = 0; i < 4; ++i) {
    second += g[i] * g[i] * p[i];
    first += g[i] * p[i];
  }
  return std::sqrt(std::max(0.0, second - first * first) /
                   static_cast<double>(shots));
}

ObjectiveSample objective_direct(const PreparedMatrix& prep,
                                 const WeightVector& weights,
                                 const AnsatzParams& params) {
  const int size = prep.dim();
  if (params.n() != prep.n || weights.dim() != size) {
    throw Error(Errc::kDimensionMismatch,
                "matrix, weights and ansatz disagree on n");
  }
  const RealMatrix ba = ansatz_matrix(params.n(), params.alpha());
  const RealMatrix bb = ansatz_matrix(params.n(), params.beta());
  const ComplexMatrix m =
      ba.transpose().cast<cplx>() * prep.a * bb.cast<cplx>();
  cplx trace = 0.0;
  for (int l = 0; l < size; ++l) {
    trace += weights.q[static_cast<std::size_t>(l)] * m(l, l);
  }
  const double ref = analytic_reference(prep, weights);
  ObjectiveSample s;
  s.l_value = trace.real();
  s.g_squared = ref * ref + std::norm(trace);
  s.source = EvalMode::kDirect;
  s.params_id = params.checksum();
  return s;
}

ObjectiveSample evaluate(const PreparedMatrix& prep,
                         const WeightVector& weights,
                         const AnsatzParams& params, const EvalConfig& config) {
  ObjectiveSample s;
  switch (config.mode) {
    case EvalMode::kDirect:
      return objective_direct(prep, weights, params);
    case EvalMode::kExact:
      s = recover(probe_exact(prep, weights, params, config.policy));
      break;
    case EvalMode::kShots:
      s = recover(probe_shots(prep, weights, params, config.shots, config.seed,
                              config.sampling, config.policy));
      break;
  }
  s.params_id = params.checksum();
  return s;
}

std::vector<double> gradient(const PreparedMatrix& prep,
                             const WeightVector& weights,
                             const AnsatzParams& params,
                             const EvalConfig& config) {
  const AnsatzParams base = params.untied();
  std::vector<AnsatzParams> points;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < params.num_parameters(); ++k) {
    for (std::size_t u : untied_indices(params, k)) {
      points.push_back(shift(base, u, std::numbers::pi));
      owner.push_back(k);
    }
  }
  const std::vector<double> values = evaluate_all(prep, weights, points, config);
  std::vector<double> grad(params.num_parameters(), 0.0);
  for (std::size_t j = 0; j < values.size(); ++j) {
    grad[owner[j]] += 0.5 * values[j];
  }
  return grad;
}

double hessian_entry(const PreparedMatrix& prep, const WeightVector& weights,
                     const AnsatzParams& params, std::size_t k, std::size_t m,
                     const EvalConfig& config) {
  const AnsatzParams base = params.untied();
  std::vector<AnsatzParams> points;
  for (std::size_t s : untied_indices(params, k)) {
    for (std::size_t t : untied_indices(params, m)) {
      points.push_back(
          shift(shift(base, s, std::numbers::pi), t, std::numbers::pi));
    }
  }
  double sum = 0.0;
  for (double v : evaluate_all(prep, weights, points, config)) sum += v;
  return 0.25 * sum;
}

}  // namespace vqsvd
