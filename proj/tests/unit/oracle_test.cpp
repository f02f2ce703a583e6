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

#include "vqsvd/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace vqsvd::oracle {
namespace {

RealMatrix random_matrix(std::mt19937_64& rng, int size) {
  std::normal_distribution<double> normal;
  RealMatrix m(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) m(i, j) = normal(rng);
  }
  return m;
}

void check_svd(const RealMatrix& a) {
  const OracleSvd s = jacobi_svd(a);
  const auto size = a.rows();
  ASSERT_EQ(static_cast<Eigen::Index>(s.sigma.size()), size);
  RealMatrix d = RealMatrix::Zero(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    d(j, j) = s.sigma[static_cast<std::size_t>(j)];
    EXPECT_GE(d(j, j), 0.0);
    if (j > 0) EXPECT_LE(d(j, j), d(j - 1, j - 1));
  }
  const RealMatrix id = RealMatrix::Identity(size, size);
  EXPECT_LT((s.u * d * s.v.transpose() - a).norm(), 1e-10 * std::max(1.0, a.norm()));
  EXPECT_LT((s.u.transpose() * s.u - id).norm(), 1e-10);
  EXPECT_LT((s.v.transpose() * s.v - id).norm(), 1e-10);
}

TEST(JacobiSvd, RandomMatrices) {
  std::mt19937_64 rng(71);
  for (int size : {1, 2, 3, 4, 8, 16}) {
    for (int rep = 0; rep < 3; ++rep) check_svd(random_matrix(rng, size));
  }
}

TEST(JacobiSvd, AgreesWithEigen) {
  std::mt19937_64 rng(73);
  const RealMatrix a = random_matrix(rng, 8);
  const OracleSvd s = jacobi_svd(a);
  const Eigen::VectorXd ref = Eigen::JacobiSVD<RealMatrix>(a).singularValues();
  for (int j = 0; j < 8; ++j) EXPECT_NEAR(s.sigma[static_cast<std::size_t>(j)], ref(j), 1e-12);
}

TEST(JacobiSvd, RankDeficientAndDegenerate) {
  std::mt19937_64 rng(79);
  const RealMatrix g = random_matrix(rng, 4).leftCols(2);
  const RealMatrix low = g * g.transpose() - g.col(0) * g.col(0).transpose();
  check_svd(low);
  const OracleSvd s = jacobi_svd(low);
  EXPECT_LT(s.sigma[1], 1e-12);
  EXPECT_LT(s.sigma[3], 1e-12);
  check_svd(RealMatrix::Zero(4, 4));
  check_svd(RealMatrix::Identity(4, 4) * 0.5);
  RealMatrix perm = RealMatrix::Zero(4, 4);
  perm(0, 3) = perm(1, 0) = perm(2, 1) = 1.0;
  check_svd(perm);
}

TEST(JacobiEigen, SymmetricMatrices) {
  std::mt19937_64 rng(83);
  for (int size : {1, 2, 4, 8}) {
    const RealMatrix g = random_matrix(rng, size);
    const RealMatrix s = g + g.transpose();
    const OracleEigen e = jacobi_eigen(s);
    RealMatrix d = RealMatrix::Zero(size, size);
    for (int j = 0; j < size; ++j) {
      d(j, j) = e.values[static_cast<std::size_t>(j)];
      if (j > 0) EXPECT_LE(d(j, j), d(j - 1, j - 1));
    }
    EXPECT_LT((e.vectors * d * e.vectors.transpose() - s).norm(), 1e-10 * s.norm());
    EXPECT_LT((e.vectors.transpose() * e.vectors - RealMatrix::Identity(size, size)).norm(),
              1e-10);
  }
}

TEST(JacobiEigen, PsdSpectrumMatchesSvd) {
  std::mt19937_64 rng(89);
  const RealMatrix g = random_matrix(rng, 4);
  const RealMatrix s = g * g.transpose();
  const OracleEigen e = jacobi_eigen(s);
  const OracleSvd v = jacobi_svd(s);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(e.values[j], v.sigma[j], 1e-10);
}

}  // namespace
}  // namespace vqsvd::oracle
