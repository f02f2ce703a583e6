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

#include <cstddef>
#include <vector>

#include "vqsvd/svd_result.hpp"
#include "vqsvd/types.hpp"

namespace vqsvd {

/// An input matrix brought into encodable form: zero-padded to N x N with
/// N = 2^n, optionally pivoted so that a large entry sits at (0, 0), divided
/// by its Frobenius norm and rotated so that a(0, 0) is real and nonnegative.
///
///   a(i, j) = exp(-i * phase) * padded(row_perm[i], col_perm[j]) / scale
struct PreparedMatrix {
  ComplexMatrix original;
  ComplexMatrix a;
  int n = 0;
  double scale = 1.0;
  double phase = 0.0;
  std::vector<int> row_perm;
  std::vector<int> col_perm;

  int dim() const { return static_cast<int>(a.rows()); }
  bool pivoted() const;
  bool is_real(double tol = 1e-12) const;
  /// Real part of a; throws InvalidConfig if a has a nonzero imaginary part.
  RealMatrix real_a() const;
  ComplexMatrix padded_original() const;
  /// Undoes phase, scale and permutations on a.
  ComplexMatrix reconstruct_padded() const;
};

enum class PivotMode {
  /// Swap row i* and column j* where (i*, j*) is the largest-modulus entry.
  kGeneral,
  /// Swap row and column k* where k* is the largest-modulus diagonal entry;
  /// keeps symmetric inputs symmetric.
  kSymmetric,
};

struct PrepareOptions {
  /// Pivot when |m00| < pivot_tol * max|m_ij|. Zero disables pivoting.
  double pivot_tol = 1e-6;
  PivotMode pivot_mode = PivotMode::kGeneral;
};

PreparedMatrix prepare(const ComplexMatrix& matrix,
                       const PrepareOptions& options = {});

/// Smallest n >= 1 with 2^n >= extent.
int qubits_for(std::size_t extent);

enum class WeightScheme { kLinear, kGeometric };

struct WeightVector {
  std::vector<double> q;
  int t = 0;

  int dim() const { return static_cast<int>(q.size()); }
};

/// Normalized, descending weights with the suffix from index t zeroed.
WeightVector make_weights(int n_dim, WeightScheme scheme, int t);

/// Maps a factorization of prep.a back onto the padded original matrix.
SvdResult restore_factors(SvdResult result, const PreparedMatrix& prep);

}  // namespace vqsvd
