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

#include "vqsvd/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "vqsvd/error.hpp"

namespace vqsvd {

namespace {

std::vector<int> identity_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

bool PreparedMatrix::pivoted() const {
  return row_perm != identity_perm(dim()) || col_perm != identity_perm(dim());
}

bool PreparedMatrix::is_real(double tol) const {
  return a.imag().cwiseAbs().maxCoeff() <= tol;
}

RealMatrix PreparedMatrix::real_a() const {
  if (!is_real(1e-12)) {
    throw Error(Errc::kInvalidConfig,
                "prepared matrix is complex; the Ry ansatz only handles real "
                "matrices");
  }
  return a.real();
}

ComplexMatrix PreparedMatrix::padded_original() const {
  const int size = 1 << n;
  ComplexMatrix padded = ComplexMatrix::Zero(size, size);
  padded.topLeftCorner(original.rows(), original.cols()) = original;
  return padded;
}

ComplexMatrix PreparedMatrix::reconstruct_padded() const {
  const int size = dim();
  const cplx factor = std::polar(scale, phase);
  ComplexMatrix out(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      out(row_perm[static_cast<std::size_t>(i)],
          col_perm[static_cast<std::size_t>(j)]) = factor * a(i, j);
    }
  }
  return out;
}

int qubits_for(std::size_t extent) {
  int n = 1;
  while ((std::size_t{1} << n) < extent) ++n;
  return n;
}

PreparedMatrix prepare(const ComplexMatrix& matrix,
                       const PrepareOptions& options) {
  if (matrix.rows() == 0 || matrix.cols() == 0) {
    throw Error(Errc::kDimensionMismatch, "matrix has no entries");
  }
  double max_mod = 0.0;
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      const cplx v = matrix(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(Errc::kNonFiniteEntry,
                    "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") is not finite");
      }
      max_mod = std::max(max_mod, std::abs(v));
    }
  }
  if (max_mod < std::numeric_limits<double>::epsilon()) {
    throw Error(Errc::kAllZeroMatrix, "every entry is below machine epsilon");
  }

  PreparedMatrix prep;
  prep.original = matrix;
  prep.n = qubits_for(
      static_cast<std::size_t>(std::max(matrix.rows(), matrix.cols())));
  const int size = 1 << prep.n;
  const ComplexMatrix padded = prep.padded_original();

  prep.row_perm = identity_perm(size);
  prep.col_perm = identity_perm(size);
  if (std::abs(padded(0, 0)) < options.pivot_tol * max_mod) {
    int pi = 0;
    int pj = 0;
    double best = -1.0;
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        if (options.pivot_mode == PivotMode::kSymmetric && i != j) continue;
        if (std::abs(padded(i, j)) > best) {
          best = std::abs(padded(i, j));
          pi = i;
          pj = j;
        }
      }
    }
    if (best > 0.0) {
      std::swap(prep.row_perm[0], prep.row_perm[static_cast<std::size_t>(pi)]);
      std::swap(prep.col_perm[0], prep.col_perm[static_cast<std::size_t>(pj)]);
    }
  }

  ComplexMatrix permuted(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      permuted(i, j) = padded(prep.row_perm[static_cast<std::size_t>(i)],
                              prep.col_perm[static_cast<std::size_t>(j)]);
    }
  }
  prep.scale = permuted.norm();
  prep.phase = std::abs(permuted(0, 0)) > 0.0 ? std::arg(permuted(0, 0)) : 0.0;
  prep.a = permuted * (std::polar(1.0, -prep.phase) / prep.scale);
  // Rounding can leave a residual imaginary part on the pivot.
  prep.a(0, 0) = cplx(std::abs(prep.a(0, 0)), 0.0);
  return prep;
}

WeightVector make_weights(int n_dim, WeightScheme scheme, int t) {
  if (n_dim < 1) {
    throw Error(Errc::kInvalidRank, "weight dimension must be positive");
  }
  if (t < 1 || t > n_dim) {
    throw Error(Errc::kInvalidRank, "rank " + std::to_string(t) +
                                        " outside [1, " +
                                        std::to_string(n_dim) + "]");
  }
  WeightVector w;
  w.t = t;
  w.q.assign(static_cast<std::size_t>(n_dim), 0.0);
  for (int j = 0; j < t; ++j) {
    w.q[static_cast<std::size_t>(j)] = scheme == WeightScheme::kLinear
                                           ? static_cast<double>(t - j)
                                           : std::ldexp(1.0, -j);
  }
  double norm = 0.0;
  for (double v : w.q) norm += v * v;
  norm = std::sqrt(norm);
  for (double& v : w.q) v /= norm;
  return w;
}

SvdResult restore_factors(SvdResult result, const PreparedMatrix& prep) {
  const int size = prep.dim();
  if (static_cast<int>(result.d.size()) != size || result.u_hat.rows() != size ||
      result.u_hat.cols() != size || result.v_hat.rows() != size ||
      result.v_hat.cols() != size) {
    throw Error(Errc::kDimensionMismatch,
                "factorization does not match the prepared matrix size");
  }
  const cplx phase = std::polar(1.0, prep.phase);
  result.singular_values_original.resize(result.d.size());
  for (std::size_t j = 0; j < result.d.size(); ++j) {
    result.singular_values_original[j] = prep.scale * result.d[j];
  }
  result.u_original = ComplexMatrix::Zero(size, size);
  result.v_original = ComplexMatrix::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    result.u_original.row(prep.row_perm[static_cast<std::size_t>(i)]) =
        phase * result.u_hat.row(i).cast<cplx>();
    result.v_original.row(prep.col_perm[static_cast<std::size_t>(i)]) =
        result.v_hat.row(i).cast<cplx>();
  }
  Eigen::VectorXcd sigma(size);
  for (int j = 0; j < size; ++j) {
    sigma(j) = result.singular_values_original[static_cast<std::size_t>(j)];
  }
  const ComplexMatrix rebuilt = result.u_original * sigma.asDiagonal() *
                                result.v_original.adjoint();
  result.residual_original = (prep.padded_original() - rebuilt).norm();
  return result;
}

}  // namespace vqsvd
