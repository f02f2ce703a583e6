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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "vqsvd/error.hpp"
#include "vqsvd/oracle.hpp"

namespace vqsvd {
namespace {

PreparedMatrix prepare_real(const RealMatrix& m, PivotMode mode = PivotMode::kGeneral) {
  return prepare(m.cast<cplx>(), {1e-6, mode});
}

RealMatrix mat2(double a, double b, double c, double d) {
  RealMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kInvalidConfig;
}

OptimizerConfig fast_config(std::uint64_t seed = 1) {
  OptimizerConfig c;
  c.seed = seed;
  c.restarts = 2;
  c.epsilon = 1e-12;
  c.eval.mode = EvalMode::kExact;
  return c;
}

TEST(OptimizerConfig, Validation) {
  OptimizerConfig c;
  EXPECT_NO_THROW(c.validate());
  c.learning_rate = 0.0;
  EXPECT_EQ(code_of([&] { c.validate(); }), Errc::kInvalidConfig);
  c = {};
  c.epsilon = -1.0;
  EXPECT_EQ(code_of([&] { c.validate(); }), Errc::kInvalidConfig);
  c = {};
  c.restarts = 0;
  EXPECT_EQ(code_of([&] { c.validate(); }), Errc::kInvalidConfig);
  c = {};
  c.eval.mode = EvalMode::kShots;
  c.eval.shots = 0;
  EXPECT_EQ(code_of([&] { c.validate(); }), Errc::kInvalidConfig);
}

TEST(Optimize, RandomTwoByTwoMatchesOracle) {
  std::mt19937_64 rng(97);
  std::normal_distribution<double> normal;
  const RealMatrix m = mat2(normal(rng), normal(rng), normal(rng), normal(rng));
  const PreparedMatrix prep = prepare_real(m);
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const SvdResult r = run_svd(prep, w, default_q_blocks(1), fast_config());
  const oracle::OracleSvd o = oracle::jacobi_svd(m);
  EXPECT_TRUE(r.trace.converged());
  EXPECT_FALSE(r.trace.no_progress);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_NEAR(r.singular_values_original[j], o.sigma[j], 1e-5);
  }
  EXPECT_LT(r.residual_original / m.norm(), 1e-3);
  const RealMatrix id = RealMatrix::Identity(2, 2);
  EXPECT_LT((r.u_hat.transpose() * r.u_hat - id).norm(), 1e-12);
  EXPECT_LT((r.v_hat.transpose() * r.v_hat - id).norm(), 1e-12);
}

TEST(Optimize, SeedMakesRunsReproducible) {
  const PreparedMatrix prep = prepare_real(mat2(0.3, -1.2, 0.7, 0.4));
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const AnsatzShape shape{1, 4, TieMode::kIndependent};
  const OptimizeResult a = optimize(prep, w, shape, fast_config(5));
  const OptimizeResult b = optimize(prep, w, shape, fast_config(5));
  EXPECT_EQ(a.best.gamma(), b.best.gamma());
  ASSERT_EQ(a.trace.restarts.size(), 2u);
  EXPECT_NE(a.trace.restarts[0].initial_params, a.trace.restarts[1].initial_params);
  const int chosen = a.trace.chosen_restart;
  for (const RestartTrace& t : a.trace.restarts) {
    EXPECT_LE(t.final_l, a.trace.restarts[static_cast<std::size_t>(chosen)].final_l);
  }
}

TEST(Optimize, InitialAnglesRespectScale) {
  const PreparedMatrix prep = prepare_real(mat2(1, 0, 0, 0.5));
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  OptimizerConfig c = fast_config();
  c.max_iters = 0;
  c.init_scale = 0.01;
  const OptimizeResult r = optimize(prep, w, {1, 4, TieMode::kIndependent}, c);
  for (double g : r.trace.restarts[0].initial_params) EXPECT_LE(std::abs(g), 0.01);
  EXPECT_EQ(r.trace.restarts[0].iterations.size(), 1u);
  EXPECT_FALSE(r.trace.converged());
}

TEST(Optimize, LargeEpsilonStopsAfterOneStep) {
  const PreparedMatrix prep = prepare_real(mat2(1, 0.2, 0.1, 0.5));
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  OptimizerConfig c = fast_config();
  c.epsilon = std::numeric_limits<double>::infinity();
  const OptimizeResult r = optimize(prep, w, {1, 4, TieMode::kIndependent}, c);
  for (const RestartTrace& t : r.trace.restarts) {
    EXPECT_TRUE(t.converged);
    ASSERT_EQ(t.iterations.size(), 2u);
    EXPECT_EQ(t.iterations[1].iter, 1);
    EXPECT_GT(t.iterations[1].grad_norm, 0.0);
  }
}

TEST(Optimize, DiagonalInputStaysNearIdentity) {
  const PreparedMatrix prep = prepare_real(mat2(2, 0, 0, 1));
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  OptimizerConfig c = fast_config();
  c.init_scale = 0.0;
  const OptimizeResult r = optimize(prep, w, {1, 4, TieMode::kIndependent}, c);
  EXPECT_TRUE(r.trace.converged());
  // Zero angles are a stationary point and already optimal.
  EXPECT_LE(r.trace.restarts[0].iterations.size(), 2u);
  EXPECT_NEAR(r.trace.restarts[0].final_l, (2 * 2 + 1) / 5.0, 1e-14);
}

TEST(Optimize, AdamAlsoConverges) {
  const RealMatrix m = mat2(0.3, -1.2, 0.7, 0.4);
  const PreparedMatrix prep = prepare_real(m);
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  OptimizerConfig c = fast_config();
  c.use_adam = true;
  c.learning_rate = 0.05;
  c.epsilon = 1e-13;
  const SvdResult r = run_svd(prep, w, 4, c);
  const oracle::OracleSvd o = oracle::jacobi_svd(m);
  EXPECT_NEAR(r.singular_values_original[0], o.sigma[0], 1e-4);
  EXPECT_NEAR(r.singular_values_original[1], o.sigma[1], 1e-4);
}

TEST(Optimize, SingleQubitAnsatzCannotFlipDeterminantSign) {
  // Rotations keep det(u^T a v) = det(a) < 0, so the best weighted trace is
  // (2 q0 - q1) / sqrt(5) rather than (2 q0 + q1) / sqrt(5).
  const PreparedMatrix prep = prepare_real(mat2(2, 0, 0, -1));
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const SvdResult r = run_svd(prep, w, 4, fast_config());
  const RestartTrace& best =
      r.trace.restarts[static_cast<std::size_t>(r.trace.chosen_restart)];
  EXPECT_NEAR(best.final_l, 0.6, 1e-6);
  // Extraction flips the sign of the negative diagonal entry anyway.
  EXPECT_NEAR(r.singular_values_original[0], 2.0, 1e-5);
  EXPECT_NEAR(r.singular_values_original[1], 1.0, 1e-5);
  EXPECT_LT(r.residual_original, 1e-4);
}

TEST(Optimize, RejectsMismatchedShape) {
  const PreparedMatrix prep = prepare_real(mat2(1, 0, 0, 1));
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  EXPECT_EQ(code_of([&] { optimize(prep, w, {2, 4, TieMode::kIndependent}, fast_config()); }),
            Errc::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { optimize(prep, w, {1, 0, TieMode::kIndependent}, fast_config()); }),
            Errc::kInvalidConfig);
}

TEST(Extract, FlipsNegativeEntries) {
  PreparedMatrix prep;
  prep.n = 1;
  prep.a = mat2(-1, 0, 0, 0).cast<cplx>();
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const SvdResult r = extract(prep, w, AnsatzParams::zeros(1, 1));
  EXPECT_EQ(r.d, (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(r.u_hat(0, 0), 1.0);
  EXPECT_EQ(r.v_hat(0, 0), -1.0);
  EXPECT_EQ(r.residual, 0.0);
  EXPECT_EQ(r.resolved, (std::vector<bool>{true, true}));
}

TEST(Extract, TiedKeepsSignsAndFactorsEqual) {
  PreparedMatrix prep;
  prep.n = 1;
  prep.a = mat2(0.6, 0, 0, -0.8).cast<cplx>();
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 1);
  const SvdResult r = extract(prep, w, AnsatzParams::zeros(1, 1, TieMode::kTied));
  EXPECT_TRUE(r.tied);
  EXPECT_EQ(r.d, (std::vector<double>{0.6, -0.8}));
  EXPECT_EQ(r.u_hat, r.v_hat);
  EXPECT_EQ(r.resolved, (std::vector<bool>{true, false}));
}

TEST(Extract, SortsDescending) {
  PreparedMatrix prep;
  prep.n = 1;
  prep.a = mat2(0.6, 0, 0, 0.8).cast<cplx>();
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const SvdResult r = extract(prep, w, AnsatzParams::zeros(1, 1));
  EXPECT_EQ(r.d, (std::vector<double>{0.8, 0.6}));
  EXPECT_EQ(r.u_hat(1, 0), 1.0);
  EXPECT_EQ(r.v_hat(1, 0), 1.0);
}

TEST(RunSvd, RejectsComplexInput) {
  ComplexMatrix m(2, 2);
  m << 1, cplx(0, 1), 0, 1;
  const PreparedMatrix prep = prepare(m);
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  EXPECT_EQ(code_of([&] { run_svd(prep, w, 4, fast_config()); }), Errc::kInvalidConfig);
}

TEST(Eigen, DiagonalSpectrum) {
  const PreparedMatrix prep = prepare_real(mat2(0.8, 0, 0, 0.6), PivotMode::kSymmetric);
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const SvdResult r = eigendecompose_psd(prep, w, 4, fast_config());
  EXPECT_NEAR(r.singular_values_original[0], 0.8, 1e-6);
  EXPECT_NEAR(r.singular_values_original[1], 0.6, 1e-6);
  EXPECT_EQ(r.u_hat, r.v_hat);
  EXPECT_TRUE(r.tied);
}

TEST(Eigen, RankOneProjector) {
  const PreparedMatrix prep = prepare_real(mat2(0.5, 0.5, 0.5, 0.5), PivotMode::kSymmetric);
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const SvdResult r = eigendecompose_psd(prep, w, 4, fast_config());
  EXPECT_NEAR(r.singular_values_original[0], 1.0, 1e-6);
  EXPECT_NEAR(r.singular_values_original[1], 0.0, 1e-6);
  EXPECT_NEAR(std::abs(r.u_hat(0, 0)), 1 / std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(std::abs(r.u_hat(1, 0)), 1 / std::sqrt(2.0), 1e-4);
}

TEST(Eigen, RejectsNonPsdInput) {
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const auto code = [&](const ComplexMatrix& m) {
    const PreparedMatrix prep = prepare(m, {1e-6, PivotMode::kSymmetric});
    return code_of([&] { eigendecompose_psd(prep, w, 4, fast_config()); });
  };
  EXPECT_EQ(code(mat2(1, 2, 0, 1).cast<cplx>()), Errc::kNotSymmetricPSD);
  EXPECT_EQ(code(mat2(1, 0, 0, -0.5).cast<cplx>()), Errc::kNotSymmetricPSD);
  ComplexMatrix herm(2, 2);
  herm << 2, cplx(0, 1), cplx(0, -1), 2;
  EXPECT_EQ(code(herm), Errc::kNotSymmetricPSD);
}

TEST(Pseudoinverse, RankDeficientDiagonal) {
  const PreparedMatrix prep = prepare_real(mat2(2, 0, 0, 0));
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const SvdResult r = run_svd(prep, w, 4, fast_config());
  // Stopping at |dL| < 1e-12 leaves angle errors near sqrt(1e-12).
  const ComplexMatrix p = pseudoinverse(r);
  EXPECT_LT((p - mat2(1, 0, 0, 0).cast<cplx>()).norm(), 1e-5);
  const ComplexMatrix po = pseudoinverse_original(r);
  EXPECT_LT((po - mat2(0.5, 0, 0, 0).cast<cplx>()).norm(), 1e-5);
}

TEST(Pseudoinverse, OrthogonalInputInvertsExactly) {
  const double c = std::cos(0.3);
  const double s = std::sin(0.3);
  const RealMatrix rot = mat2(c, -s, s, c);
  const PreparedMatrix prep = prepare_real(rot);
  const WeightVector w = make_weights(2, WeightScheme::kLinear, 2);
  const SvdResult r = run_svd(prep, w, 4, fast_config());
  const ComplexMatrix po = pseudoinverse_original(r);
  EXPECT_LT((po * rot.cast<cplx>() - ComplexMatrix::Identity(2, 2)).norm(), 1e-5);
}

TEST(Pseudoinverse, SkipsUnresolvedAndReportsZero) {
  SvdResult r;
  r.d = {0.0, 0.0};
  r.u_hat = RealMatrix::Identity(2, 2);
  r.v_hat = RealMatrix::Identity(2, 2);
  EXPECT_EQ(code_of([&] { pseudoinverse(r); }), Errc::kZeroMatrix);
  r.d = {0.8, 0.6};
  r.resolved = {true, false};
  const ComplexMatrix p = pseudoinverse(r);
  EXPECT_NEAR(p(0, 0).real(), 1.25, 1e-15);
  EXPECT_EQ(p(1, 1), cplx{});
  EXPECT_EQ(code_of([&] { pseudoinverse_original(r); }), Errc::kDimensionMismatch);
}

}  // namespace
}  // namespace vqsvd
