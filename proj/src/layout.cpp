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

#include "vqsvd/layout.hpp"

#include <sstream>

#include "vqsvd/error.hpp"

namespace vqsvd {

RegisterLayout::RegisterLayout(int n) : n_(n) {
  // 5n+3 <= 63 keeps every basis index inside a uint64_t.
  if (n < 1 || 5 * n + 3 > 63) {
    throw Error(Errc::kInvalidConfig,
                "qubits per register must be in [1, 12], got " +
                    std::to_string(n));
  }
}

std::uint64_t RegisterLayout::index_of(const BasisLabel& label) const {
  const std::uint64_t reg = std::uint64_t{1} << n_;
  const std::uint64_t mask = reg - 1;
  std::uint64_t idx = label.r & mask;
  idx = idx * reg + (label.c & mask);
  idx = idx * reg + (label.chi & mask);
  idx = idx * reg + (label.psi & mask);
  idx = idx * reg + (label.q & mask);
  idx = idx * 2 + static_cast<std::uint64_t>(label.k & 1);
  idx = idx * 2 + static_cast<std::uint64_t>(label.b & 1);
  idx = idx * 2 + static_cast<std::uint64_t>(label.b_tilde & 1);
  return idx;
}

BasisLabel RegisterLayout::label_of(std::uint64_t index) const {
  const std::uint64_t mask = (std::uint64_t{1} << n_) - 1;
  BasisLabel l;
  l.b_tilde = static_cast<int>(index & 1);
  l.b = static_cast<int>((index >> 1) & 1);
  l.k = static_cast<int>((index >> 2) & 1);
  index >>= 3;
  l.q = index & mask;
  index >>= n_;
  l.psi = index & mask;
  index >>= n_;
  l.chi = index & mask;
  index >>= n_;
  l.c = index & mask;
  index >>= n_;
  l.r = index & mask;
  return l;
}

std::string RegisterLayout::format(const BasisLabel& l) const {
  std::ostringstream out;
  out << "R=" << l.r << " C=" << l.c << " chi=" << l.chi << " psi=" << l.psi
      << " q=" << l.q << " K=" << l.k << " B=" << l.b << " B~=" << l.b_tilde;
  return out.str();
}

}  // namespace vqsvd
