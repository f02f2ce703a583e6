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

#include "vqsvd/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>

#include "vqsvd/circuit.hpp"
#include "vqsvd/error.hpp"
#include "vqsvd/oracle.hpp"
#include "vqsvd/sampling.hpp"

namespace vqsvd {

namespace {

constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEps = 1e-8;

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

RestartTrace run_restart(const PreparedMatrix& prep, const WeightVector& weights,
                         const AnsatzShape& shape, const OptimizerConfig& config,
                         std::uint64_t restart_seed) {
  const std::size_t count =
      AnsatzParams::zeros(shape.n, shape.q_blocks, shape.tie_mode)
          .num_parameters();
  std::mt19937_64 rng(restart_seed);
  std::uniform_real_distribution<double> init(-config.init_scale,
                                              config.init_scale);
  std::vector<double> gamma(count);
  for (double& g : gamma) g = init(rng);

  RestartTrace trace;
  trace.initial_params = gamma;

  // Shot-mode evaluations get fresh streams every step: 0 for the start,
  // 2k-1 for the gradient at step k, 2k for the objective after it.
  EvalConfig eval = config.eval;
  auto params_of = [&](const std::vector<double>& g) {
    return AnsatzParams::from_gamma(shape.n, shape.q_blocks, shape.tie_mode, g);
  };

  AnsatzParams current = params_of(gamma);
  eval.seed = derive_seed(restart_seed, 0);
  double l_value = evaluate(prep, weights, current, eval).l_value;
  trace.iterations.push_back({0, l_value, 0.0, current.checksum()});

  std::vector<double> m(count, 0.0);
  std::vector<double> v(count, 0.0);
  for (int iter = 1; iter <= config.max_iters; ++iter) {
    eval.seed = derive_seed(restart_seed, 2 * static_cast<std::uint64_t>(iter) - 1);
    const std::vector<double> grad = gradient(prep, weights, current, eval);
    if (config.use_adam) {
      const double c1 = 1.0 - std::pow(kAdamBeta1, iter);
      const double c2 = 1.0 - std::pow(kAdamBeta2, iter);
      for (std::size_t k = 0; k < count; ++k) {
        m[k] = kAdamBeta1 * m[k] + (1.0 - kAdamBeta1) * grad[k];
        v[k] = kAdamBeta2 * v[k] + (1.0 - kAdamBeta2) * grad[k] * grad[k];
        gamma[k] += config.learning_rate * (m[k] / c1) /
                    (std::sqrt(v[k] / c2) + kAdamEps);
      }
    } else {
      for (std::size_t k = 0; k < count; ++k) {
        gamma[k] += config.learning_rate * grad[k];
      }
    }
    current = params_of(gamma);
    eval.seed = derive_seed(restart_seed, 2 * static_cast<std::uint64_t>(iter));
    const double next = evaluate(prep, weights, current, eval).l_value;
    trace.iterations.push_back({iter, next, norm2(grad), current.checksum()});
    const double delta = std::abs(next - l_value);
    l_value = next;
    if (delta < config.epsilon) {
      trace.converged = true;
      break;
    }
  }
  trace.final_params = gamma;
  trace.final_l = l_value;
  return trace;
}

void check_square(const PreparedMatrix& prep, const WeightVector& weights,
                  const AnsatzParams& params) {
  if (params.n() != prep.n || weights.dim() != prep.dim()) {
    throw Error(Errc::kDimensionMismatch,
                "matrix, weights and ansatz disagree on n");
  }
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error(Errc::kInvalidConfig, "learning rate must be positive");
  }
  if (!(epsilon > 0.0)) {
    throw Error(Errc::kInvalidConfig, "epsilon must be positive");
  }
  if (restarts < 1) throw Error(Errc::kInvalidConfig, "restarts must be >= 1");
  if (max_iters < 0) throw Error(Errc::kInvalidConfig, "max_iters must be >= 0");
  if (!(init_scale >= 0.0) || !std::isfinite(init_scale)) {
    throw Error(Errc::kInvalidConfig, "init_scale must be finite and >= 0");
  }
  if (eval.mode == EvalMode::kShots && eval.shots == 0) {
    throw Error(Errc::kInvalidConfig, "shot mode needs shots > 0");
  }
}

OptimizeResult optimize(const PreparedMatrix& prep, const WeightVector& weights,
                        const AnsatzShape& shape, const OptimizerConfig& config) {
  config.validate();
  if (shape.n != prep.n || weights.dim() != prep.dim()) {
    throw Error(Errc::kDimensionMismatch,
                "matrix, weights and ansatz disagree on n");
  }
  if (shape.q_blocks < 1) {
    throw Error(Errc::kInvalidConfig, "q_blocks must be >= 1");
  }
  const auto start = std::chrono::steady_clock::now();

  OptimizationTrace trace;
  trace.restarts.resize(static_cast<std::size_t>(config.restarts));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < config.restarts; ++r) {
    try {
      trace.restarts[static_cast<std::size_t>(r)] =
          run_restart(prep, weights, shape, config,
                      derive_seed(config.seed, static_cast<std::uint64_t>(r)));
    } catch (...) {
#pragma omp critical(vqsvd_restart_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  int best = 0;
  for (int r = 1; r < config.restarts; ++r) {
    if (trace.restarts[static_cast<std::size_t>(r)].final_l >
        trace.restarts[static_cast<std::size_t>(best)].final_l) {
      best = r;
    }
  }
  trace.chosen_restart = best;
  const RestartTrace& chosen = trace.restarts[static_cast<std::size_t>(best)];
  trace.no_progress = chosen.final_l < analytic_reference(prep, weights) /
                                           std::ldexp(1.0, prep.n) -
                                           1e-12;
  trace.wall_seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return {AnsatzParams::from_gamma(shape.n, shape.q_blocks, shape.tie_mode,
                                   chosen.final_params),
          std::move(trace)};
}

SvdResult extract(const PreparedMatrix& prep, const WeightVector& weights,
                  const AnsatzParams& params) {
  check_square(prep, weights, params);
  const RealMatrix a = prep.real_a();
  const Eigen::Index size = a.rows();
  const RealMatrix u = ansatz_matrix(params.n(), params.alpha());
  RealMatrix v = params.tie_mode() == TieMode::kTied
                     ? u
                     : ansatz_matrix(params.n(), params.beta());
  const RealMatrix core = u.transpose() * a * v;

  SvdResult out;
  out.tied = params.tie_mode() == TieMode::kTied;
  std::vector<double> d(static_cast<std::size_t>(size));
  for (Eigen::Index j = 0; j < size; ++j) {
    d[static_cast<std::size_t>(j)] = core(j, j);
    if (!out.tied && core(j, j) < 0.0) {
      d[static_cast<std::size_t>(j)] = -core(j, j);
      v.col(j) = -v.col(j);
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(size));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return d[static_cast<std::size_t>(x)] > d[static_cast<std::size_t>(y)];
  });
  out.u_hat = RealMatrix(size, size);
  out.v_hat = RealMatrix(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    out.d.push_back(d[static_cast<std::size_t>(src)]);
    out.resolved.push_back(weights.q[static_cast<std::size_t>(src)] > 0.0);
    out.u_hat.col(j) = u.col(src);
    out.v_hat.col(j) = v.col(src);
  }
  const Eigen::VectorXd dv =
      Eigen::Map<const Eigen::VectorXd>(out.d.data(), size);
  out.residual = (a - out.u_hat * dv.asDiagonal() * out.v_hat.transpose()).norm();
  return out;
}

SvdResult run_svd(const PreparedMatrix& prep, const WeightVector& weights,
                  int q_blocks, const OptimizerConfig& config) {
  prep.real_a();  // complex inputs are rejected before any optimization
  OptimizeResult opt =
      optimize(prep, weights, {prep.n, q_blocks, TieMode::kIndependent}, config);
  SvdResult result = extract(prep, weights, opt.best);
  result.trace = std::move(opt.trace);
  return restore_factors(std::move(result), prep);
}

SvdResult eigendecompose_psd(const PreparedMatrix& prep,
                             const WeightVector& weights, int q_blocks,
                             const OptimizerConfig& config) {
  if (!prep.is_real()) {
    throw Error(Errc::kNotSymmetricPSD, "input has complex entries");
  }
  const RealMatrix a = prep.real_a();
  constexpr double kTol = 1e-10;
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > kTol) {
    throw Error(Errc::kNotSymmetricPSD,
                "asymmetry " + std::to_string(asym) + " exceeds 1e-10");
  }
  const oracle::OracleEigen eig = oracle::jacobi_eigen(a);
  if (eig.values.back() < -kTol) {
    throw Error(Errc::kNotSymmetricPSD,
                "smallest eigenvalue " + std::to_string(eig.values.back()) +
                    " is negative");
  }
  OptimizeResult opt =
      optimize(prep, weights, {prep.n, q_blocks, TieMode::kTied}, config);
  SvdResult result = extract(prep, weights, opt.best);
  result.trace = std::move(opt.trace);
  return restore_factors(std::move(result), prep);
}

ComplexMatrix pseudoinverse(const SvdResult& result, double rank_tol) {
  const Eigen::Index size = result.u_hat.rows();
  if (result.d.empty() || result.v_hat.rows() != size ||
      static_cast<Eigen::Index>(result.d.size()) != result.u_hat.cols()) {
    throw Error(Errc::kDimensionMismatch, "malformed factorization");
  }
  const double top = std::abs(result.d.front());
  RealMatrix pinv = RealMatrix::Zero(size, size);
  bool any = false;
  for (std::size_t j = 0; j < result.d.size(); ++j) {
    const double dj = result.d[j];
    if (!(std::abs(dj) > rank_tol * top) || dj == 0.0) continue;
    if (!result.resolved.empty() && !result.resolved[j]) continue;
    const auto col = static_cast<Eigen::Index>(j);
    pinv += result.v_hat.col(col) * result.u_hat.col(col).transpose() / dj;
    any = true;
  }
  if (!any) throw Error(Errc::kZeroMatrix, "no singular value above rank_tol");
  return pinv.cast<cplx>();
}

ComplexMatrix pseudoinverse_original(const SvdResult& result, double rank_tol) {
  const auto& sigma = result.singular_values_original;
  if (sigma.empty() || result.u_original.cols() != static_cast<Eigen::Index>(sigma.size())) {
    throw Error(Errc::kDimensionMismatch, "factors were not restored");
  }
  const double top = std::abs(sigma.front());
  const Eigen::Index size = result.u_original.rows();
  ComplexMatrix pinv = ComplexMatrix::Zero(size, size);
  bool any = false;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    const double s = sigma[j];
    if (!(std::abs(s) > rank_tol * top) || s == 0.0) continue;
    if (!result.resolved.empty() && !result.resolved[j]) continue;
    const auto col = static_cast<Eigen::Index>(j);
    pinv += result.v_original.col(col) * result.u_original.col(col).adjoint() / s;
    any = true;
  }
  if (!any) throw Error(Errc::kZeroMatrix, "no singular value above rank_tol");
  return pinv;
}

}  // namespace vqsvd
