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

#include "vqsvd/ansatz.hpp"

#include <cmath>
#include <cstring>

#include "vqsvd/error.hpp"

namespace vqsvd {

namespace {

void check_length(std::span<const double> angles, int n) {
  if (angles.empty() || angles.size() % static_cast<std::size_t>(n) != 0) {
    throw Error(Errc::kWrongLength,
                "angle count " + std::to_string(angles.size()) +
                    " is not a positive multiple of " + std::to_string(n));
  }
}

}  // namespace

AnsatzParams::AnsatzParams(int n, int q_blocks, TieMode tie_mode,
                           std::vector<double> alpha, std::vector<double> beta)
    : n_(n),
      q_blocks_(q_blocks),
      tie_mode_(tie_mode),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
  if (n < 1 || q_blocks < 1) {
    throw Error(Errc::kInvalidConfig, "ansatz needs n >= 1 and Q >= 1");
  }
  const std::size_t want = angles_per_circuit();
  if (alpha_.size() != want) {
    throw Error(Errc::kWrongLength, "alpha has " +
                                        std::to_string(alpha_.size()) +
                                        " angles, expected " +
                                        std::to_string(want));
  }
  if (tie_mode_ == TieMode::kTied) {
    if (!beta_.empty() && beta_ != alpha_) {
      throw Error(Errc::kInvalidConfig, "tied params with a distinct beta");
    }
    beta_.clear();
  } else if (beta_.size() != want) {
    throw Error(Errc::kWrongLength, "beta has " + std::to_string(beta_.size()) +
                                        " angles, expected " +
                                        std::to_string(want));
  }
}

AnsatzParams AnsatzParams::zeros(int n, int q_blocks, TieMode tie_mode) {
  const std::size_t count =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(q_blocks);
  return AnsatzParams(
      n, q_blocks, tie_mode, std::vector<double>(count, 0.0),
      tie_mode == TieMode::kTied ? std::vector<double>{}
                                 : std::vector<double>(count, 0.0));
}

AnsatzParams AnsatzParams::from_gamma(int n, int q_blocks, TieMode tie_mode,
                                      std::span<const double> gamma) {
  const std::size_t count =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(q_blocks);
  const std::size_t want = tie_mode == TieMode::kTied ? count : 2 * count;
  if (gamma.size() != want) {
    throw Error(Errc::kWrongLength, "parameter vector has " +
                                        std::to_string(gamma.size()) +
                                        " entries, expected " +
                                        std::to_string(want));
  }
  std::vector<double> alpha(gamma.begin(), gamma.begin() + count);
  std::vector<double> beta;
  if (tie_mode == TieMode::kIndependent) beta.assign(gamma.begin() + count, gamma.end());
  return AnsatzParams(n, q_blocks, tie_mode, std::move(alpha), std::move(beta));
}

std::size_t AnsatzParams::num_parameters() const {
  return tie_mode_ == TieMode::kTied ? angles_per_circuit()
                                     : 2 * angles_per_circuit();
}

std::vector<double> AnsatzParams::gamma() const {
  std::vector<double> g(alpha_);
  g.insert(g.end(), beta_.begin(), beta_.end());
  return g;
}

AnsatzParams AnsatzParams::untied() const {
  const auto b = beta();
  return AnsatzParams(n_, q_blocks_, TieMode::kIndependent, alpha_,
                      std::vector<double>(b.begin(), b.end()));
}

std::uint64_t AnsatzParams::checksum() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : gamma()) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof(double));
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

int default_q_blocks(int n) {
  const int big_n = 1 << n;
  return (big_n * big_n + n - 1) / n;
}

AnsatzParams shift(const AnsatzParams& params, std::size_t k, double delta) {
  if (k >= params.num_parameters()) {
    throw Error(Errc::kIndexOutOfRange,
                "parameter index " + std::to_string(k) + " >= " +
                    std::to_string(params.num_parameters()));
  }
  std::vector<double> g = params.gamma();
  g[k] += delta;
  return AnsatzParams::from_gamma(params.n(), params.q_blocks(),
                                  params.tie_mode(), g);
}

void apply_ansatz(Statevector& state, const Subsystem& reg,
                  std::span<const double> angles) {
  check_length(angles, reg.size);
  const std::size_t n = static_cast<std::size_t>(reg.size);
  const std::size_t blocks = angles.size() / n;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (int j = 0; j < reg.size; ++j) {
      state.apply_ry(reg.qubit(j), angles[b * n + static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j + 1 < reg.size; ++j) {
      state.apply_mcx({{reg.qubit(j), 1}}, {reg.qubit(j + 1)});
    }
  }
}

void apply_controlled_ansatz(Statevector& state, const Subsystem& reg,
                             int control, std::span<const double> angles) {
  check_length(angles, reg.size);
  const std::size_t n = static_cast<std::size_t>(reg.size);
  const std::size_t blocks = angles.size() / n;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (int j = 0; j < reg.size; ++j) {
      const double half = angles[b * n + static_cast<std::size_t>(j)] / 2.0;
      const int target = reg.qubit(j);
      state.apply_anticontrolled_z(control, target);
      state.apply_ry(target, half);
      state.apply_anticontrolled_z(control, target);
      state.apply_ry(target, half);
    }
    for (int j = 0; j + 1 < reg.size; ++j) {
      state.apply_mcx({{control, 1}, {reg.qubit(j), 1}}, {reg.qubit(j + 1)});
    }
  }
}

RealMatrix ansatz_matrix(int n, std::span<const double> angles) {
  check_length(angles, n);
  const int size = 1 << n;
  RealMatrix u = RealMatrix::Identity(size, size);
  const std::size_t blocks = angles.size() / static_cast<std::size_t>(n);
  // Gates act on the row index; column k tracks U|k>.
  auto bit_of = [n](int j) { return 1 << (n - 1 - j); };
  for (std::size_t b = 0; b < blocks; ++b) {
    for (int j = 0; j < n; ++j) {
      const double theta = angles[b * static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(j)];
      const double c = std::cos(theta / 2.0);
      const double s = std::sin(theta / 2.0);
      const int tb = bit_of(j);
      for (int r0 = 0; r0 < size; ++r0) {
        if (r0 & tb) continue;
        const int r1 = r0 | tb;
        const Eigen::RowVectorXd top = u.row(r0);
        const Eigen::RowVectorXd bottom = u.row(r1);
        u.row(r0) = c * top - s * bottom;
        u.row(r1) = s * top + c * bottom;
      }
    }
    for (int j = 0; j + 1 < n; ++j) {
      const int cb = bit_of(j);
      const int tb = bit_of(j + 1);
      for (int r = 0; r < size; ++r) {
        if ((r & cb) && !(r & tb)) u.row(r).swap(u.row(r | tb));
      }
    }
  }
  return u;
}

}  // namespace vqsvd
