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

#include <vector>

#include "vqsvd/types.hpp"

// Classical reference decompositions. Nothing here depends on the ansatz,
// the simulator or the estimator.
namespace vqsvd::oracle {

struct OracleSvd {
  std::vector<double> sigma;  // descending
  RealMatrix u;
  RealMatrix v;
  int sweeps = 0;
};

/// One-sided (Hestenes) Jacobi SVD of a square real matrix, N <= 64.
OracleSvd jacobi_svd(const RealMatrix& a);

struct OracleEigen {
  std::vector<double> values;  // descending
  RealMatrix vectors;          // column j belongs to values[j]
  int sweeps = 0;
};

/// Cyclic two-sided Jacobi eigendecomposition of a symmetric matrix.
OracleEigen jacobi_eigen(const RealMatrix& s);

}  // namespace vqsvd::oracle
