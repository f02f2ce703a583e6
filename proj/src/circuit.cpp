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

#include "vqsvd/circuit.hpp"

#include <cmath>
#include <sstream>

#include "vqsvd/error.hpp"

namespace vqsvd {

namespace {

void record(PipelineResult& out, const PipelineOptions& options,
            const char* stage) {
  if (!options.record_trace) return;
  out.trace.push_back({stage, out.state.norm_squared(), out.postselect_prob});
}

void check_inputs(const PreparedMatrix& prep, const WeightVector& weights,
                  const AnsatzParams& params) {
  const int size = 1 << prep.n;
  if (prep.dim() != size || weights.dim() != size || params.n() != prep.n) {
    throw Error(Errc::kDimensionMismatch,
                "matrix, weights and ansatz disagree on n");
  }
}

}  // namespace

PipelineResult run_pipeline(const PreparedMatrix& prep,
                            const WeightVector& weights,
                            const AnsatzParams& params,
                            const PipelineOptions& options) {
  check_inputs(prep, weights, params);
  const RegisterLayout layout(prep.n);
  const int n = layout.n();
  PipelineResult out{Statevector(layout, options.policy), 0.0, {}, {}, {}};
  Statevector& sv = out.state;

  load_product_state(sv, prep, weights);
  record(out, options, "load");

  const Subsystem chi = layout.chi();
  const Subsystem psi = layout.psi();
  const int k = layout.k();

  for (int i = 0; i < n; ++i) sv.apply_h(chi.qubit(i));
  sv.apply_h(k);
  record(out, options, "W0");

  for (int i = 0; i < n; ++i) {
    sv.apply_mcx({{k, 1}, {chi.qubit(i), 1}},
                 {psi.qubit(i), layout.weight().qubit(i)});
  }
  record(out, options, "W1");

  apply_controlled_ansatz(sv, chi, k, params.alpha());
  apply_controlled_ansatz(sv, psi, k, params.beta());
  record(out, options, "W2");

  for (int i = 0; i < n; ++i) {
    sv.apply_mcx({{k, 1}, {chi.qubit(i), 1}}, {layout.row().qubit(i)});
  }
  for (int i = 0; i < n; ++i) {
    sv.apply_mcx({{k, 1}, {psi.qubit(i), 1}}, {layout.col().qubit(i)});
  }
  record(out, options, "W3");

  for (int i = 0; i < n; ++i) sv.apply_h(chi.qubit(i));
  for (int i = 0; i < n; ++i) sv.apply_h(psi.qubit(i));
  record(out, options, "W4");

  std::vector<Control> all_zero;
  for (int q = 0; q < 5 * n; ++q) all_zero.push_back({q, 0});
  const int ancillae[2] = {layout.b(), layout.b_tilde()};
  sv.apply_mcx(all_zero, ancillae);
  record(out, options, "W5");

  const double prefactor = std::pow(2.0, (3.0 * n + 1.0) / 2.0);
  BasisLabel selected;
  selected.b = 1;
  selected.b_tilde = 1;
  out.reference_amplitude = prefactor * sv.amplitude(layout.index_of(selected));
  selected.k = 1;
  out.objective_amplitude = prefactor * sv.amplitude(layout.index_of(selected));

  out.postselect_prob = sv.probability(layout.b_tilde(), 1);
  if (out.postselect_prob < kProbabilityFloor) {
    throw Error(Errc::kPostselectionImpossible,
                "B~ = 1 branch is empty (a00 and the weighted trace both "
                "vanish)");
  }
  if (options.postselect) {
    sv.measure_postselect(layout.b_tilde(), 1);
  }
  record(out, options, "W6");

  if (options.readout) {
    sv.apply_h(layout.b());
    sv.apply_controlled_h(layout.b(), k);
    record(out, options, "readout");
  }
  return out;
}

double analytic_reference(const PreparedMatrix& prep,
                          const WeightVector& weights) {
  return std::ldexp(1.0, prep.n) * weights.q.at(0) * prep.a(0, 0).real();
}

double calibrate_reference(const PreparedMatrix& prep,
                           const WeightVector& weights) {
  const int q_blocks = 1;
  const AnsatzParams zero = AnsatzParams::zeros(prep.n, q_blocks);
  PipelineOptions options;
  options.readout = false;
  options.postselect = false;
  try {
    return run_pipeline(prep, weights, zero, options).reference_amplitude.real();
  } catch (const Error& e) {
    if (e.code() == Errc::kPostselectionImpossible) return 0.0;
    throw;
  }
}

ProbeResult probe_exact(const PreparedMatrix& prep, const WeightVector& weights,
                        const AnsatzParams& params, KernelPolicy policy) {
  PipelineOptions options;
  options.policy = policy;
  const PipelineResult run = run_pipeline(prep, weights, params, options);
  const double analytic = analytic_reference(prep, weights);
  if (std::abs(run.reference_amplitude - cplx(analytic)) > 1e-8) {
    std::ostringstream msg;
    msg << "simulated reference amplitude " << run.reference_amplitude
        << " != 2^n q0 a00 = " << analytic;
    throw Error(Errc::kCalibrationMismatch, msg.str());
  }
  const RegisterLayout& layout = *run.state.layout();
  const int kb[2] = {layout.k(), layout.b()};
  const std::vector<double> m = run.state.marginal(kb);
  ProbeResult p;
  p.p00 = m[0];
  p.p01 = m[1];
  p.p10 = m[2];
  p.p11 = m[3];
  p.a00_tilde = analytic;
  p.postselect_prob = run.postselect_prob;
  p.mode = ProbeMode::kExact;
  return p;
}

ProbeResult probe_shots(const PreparedMatrix& prep, const WeightVector& weights,
                        const AnsatzParams& params, std::uint64_t shots,
                        std::uint64_t seed, Sampling sampling,
                        KernelPolicy policy) {
  if (shots < 1) throw Error(Errc::kInvalidConfig, "shots must be >= 1");
  PipelineOptions options;
  options.policy = policy;
  options.postselect = sampling == Sampling::kPostselected;
  const PipelineResult run = run_pipeline(prep, weights, params, options);
  const RegisterLayout& layout = *run.state.layout();

  ShotCounts kb;
  kb.qubits = {layout.k(), layout.b()};
  kb.shots = shots;
  kb.seed = seed;
  if (sampling == Sampling::kPostselected) {
    kb = sample(run.state, kb.qubits, shots, seed);
  } else {
    const int qubits[3] = {layout.b_tilde(), layout.k(), layout.b()};
    const ShotCounts raw = sample(run.state, qubits, shots, seed);
    for (const auto& [pattern, count] : raw.counts) {
      if (pattern & 0b100) {
        kb.counts[pattern & 0b011] += count;
      } else {
        kb.discarded += count;
      }
    }
    if (kb.kept() == 0) {
      throw Error(Errc::kNoSurvivingShots,
                  "all " + std::to_string(shots) +
                      " shots failed post-selection");
    }
  }

  ProbeResult p;
  p.p00 = kb.frequency(0b00);
  p.p01 = kb.frequency(0b01);
  p.p10 = kb.frequency(0b10);
  p.p11 = kb.frequency(0b11);
  p.a00_tilde = analytic_reference(prep, weights);
  p.postselect_prob = run.postselect_prob;
  p.mode = ProbeMode::kShots;
  p.shots = shots;
  p.seed = seed;
  p.sampling = sampling;
  p.counts = std::move(kb);
  return p;
}

}  // namespace vqsvd
