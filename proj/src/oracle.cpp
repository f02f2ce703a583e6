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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vqsvd/error.hpp"

namespace vqsvd::oracle {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOrthTol = 1e-15;

double dot(const RealMatrix& m, Eigen::Index p, Eigen::Index q) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) s += m(i, p) * m(i, q);
  return s;
}

void rotate_columns(RealMatrix& m, Eigen::Index p, Eigen::Index q, double c,
                    double s) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double x = m(i, p);
    const double y = m(i, q);
    m(i, p) = c * x - s * y;
    m(i, q) = s * x + c * y;
  }
}

std::vector<Eigen::Index> descending_order(const std::vector<double>& v) {
  std::vector<Eigen::Index> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return v[static_cast<std::size_t>(x)] > v[static_cast<std::size_t>(y)];
  });
  return order;
}

// Replaces the columns flagged in `missing` by an orthonormal completion of
// the other columns, using Gram-Schmidt on unit vectors.
void complete_basis(RealMatrix& u, std::vector<bool> missing) {
  const Eigen::Index n = u.rows();
  Eigen::Index candidate = 0;
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    if (!missing[static_cast<std::size_t>(j)]) continue;
    while (candidate < n) {
      Eigen::VectorXd e = Eigen::VectorXd::Unit(n, candidate++);
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index k = 0; k < u.cols(); ++k) {
          if (!missing[static_cast<std::size_t>(k)]) e -= u.col(k).dot(e) * u.col(k);
        }
      }
      const double norm = e.norm();
      if (norm > 1e-8) {
        u.col(j) = e / norm;
        missing[static_cast<std::size_t>(j)] = false;
        break;
      }
    }
  }
}

}  // namespace

OracleSvd jacobi_svd(const RealMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0 || a.rows() > 64) {
    throw Error(Errc::kDimensionMismatch, "oracle needs a square matrix, N <= 64");
  }
  if (!a.allFinite()) throw Error(Errc::kNonFiniteEntry, "oracle input");
  const Eigen::Index n = a.cols();
  RealMatrix w = a;
  RealMatrix v = RealMatrix::Identity(n, n);
  OracleSvd out;
  bool rotated = true;
  while (rotated) {
    if (out.sweeps == kMaxSweeps) {
      throw Error(Errc::kConvergenceFailure, "Jacobi SVD did not converge");
    }
    ++out.sweeps;
    rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = dot(w, p, p);
        const double beta = dot(w, q, q);
        const double gamma = dot(w, p, q);
        if (gamma == 0.0 || std::abs(gamma) <= kOrthTol * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        rotate_columns(w, p, q, c, s);
        rotate_columns(v, p, q, c, s);
      }
    }
  }

  std::vector<double> norms(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    norms[static_cast<std::size_t>(j)] = w.col(j).norm();
  }
  const auto order = descending_order(norms);
  const double largest = norms[static_cast<std::size_t>(order.front())];
  out.u = RealMatrix::Zero(n, n);
  out.v = RealMatrix::Zero(n, n);
  out.sigma.resize(static_cast<std::size_t>(n));
  std::vector<bool> missing(static_cast<std::size_t>(n), false);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    const double s = norms[static_cast<std::size_t>(src)];
    out.sigma[static_cast<std::size_t>(j)] = s;
    out.v.col(j) = v.col(src);
    if (s > 1e-14 * std::max(largest, 1e-300)) {
      out.u.col(j) = w.col(src) / s;
    } else {
      missing[static_cast<std::size_t>(j)] = true;
    }
  }
  complete_basis(out.u, missing);
  return out;
}

OracleEigen jacobi_eigen(const RealMatrix& s_in) {
  if (s_in.rows() != s_in.cols() || s_in.rows() == 0) {
    throw Error(Errc::kDimensionMismatch, "eigen oracle needs a square matrix");
  }
  const Eigen::Index n = s_in.rows();
  RealMatrix s = 0.5 * (s_in + s_in.transpose());
  RealMatrix v = RealMatrix::Identity(n, n);
  OracleEigen out;
  const double scale = std::max(s.norm(), 1e-300);
  while (true) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += s(p, q) * s(p, q);
    }
    if (std::sqrt(off) <= 1e-15 * scale) break;
    if (out.sweeps == kMaxSweeps) {
      throw Error(Errc::kConvergenceFailure, "Jacobi eigen did not converge");
    }
    ++out.sweeps;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (s(p, q) == 0.0) continue;
        const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        // s <- J^T s J with J the (p, q) plane rotation.
        rotate_columns(s, p, q, c, sn);
        RealMatrix st = s.transpose();
        rotate_columns(st, p, q, c, sn);
        s = st.transpose();
        s(p, q) = 0.0;
        s(q, p) = 0.0;
        rotate_columns(v, p, q, c, sn);
      }
    }
  }
  std::vector<double> diag(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) diag[static_cast<std::size_t>(j)] = s(j, j);
  const auto order = descending_order(diag);
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = RealMatrix(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    out.values[static_cast<std::size_t>(j)] = diag[static_cast<std::size_t>(src)];
    out.vectors.col(j) = v.col(src);
  }
  return out;
}

}  // namespace vqsvd::oracle
