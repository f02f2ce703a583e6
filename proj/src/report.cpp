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

#include "vqsvd/report.hpp"

#include <sstream>

#include "json.hpp"
#include "vqsvd/error.hpp"

namespace vqsvd {

using nlohmann::json;

namespace {

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& value) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    value.reset();
  } else {
    value = it->template get<T>();
  }
}

}  // namespace

MatrixRows to_rows(const RealMatrix& m) {
  MatrixRows rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rows[static_cast<std::size_t>(i)].push_back(m(i, j));
    }
  }
  return rows;
}

std::string to_json(const RunReport& r) {
  json j;
  j["input"] = r.input;
  j["config"] = r.config;
  j["results"] = {
      {"singular_values", r.singular_values},
      {"d", r.d},
      {"resolved", r.resolved},
      {"residual", r.residual},
      {"residual_original", r.residual_original},
      {"u_hat", r.u_hat},
      {"v_hat", r.v_hat},
      {"converged", r.converged},
      {"chosen_restart", r.chosen_restart},
      {"iterations", r.iterations},
      {"final_l", r.final_l},
      {"no_progress", r.no_progress},
      {"postselect_prob_initial", r.postselect_prob_initial},
      {"postselect_prob_final", r.postselect_prob_final},
  };
  put_optional(j, "verify", r.verify);
  put_optional(j["results"], "pinv_real", r.pinv_real);
  put_optional(j["results"], "pinv_imag", r.pinv_imag);
  j["trace_path"] = r.trace_path;
  put_optional(j, "wall_seconds", r.wall_seconds);
  return j.dump(2) + "\n";
}

RunReport run_report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunReport r;
    j.at("input").get_to(r.input);
    j.at("config").get_to(r.config);
    const json& res = j.at("results");
    res.at("singular_values").get_to(r.singular_values);
    res.at("d").get_to(r.d);
    res.at("resolved").get_to(r.resolved);
    res.at("residual").get_to(r.residual);
    res.at("residual_original").get_to(r.residual_original);
    res.at("u_hat").get_to(r.u_hat);
    res.at("v_hat").get_to(r.v_hat);
    res.at("converged").get_to(r.converged);
    res.at("chosen_restart").get_to(r.chosen_restart);
    res.at("iterations").get_to(r.iterations);
    res.at("final_l").get_to(r.final_l);
    res.at("no_progress").get_to(r.no_progress);
    res.at("postselect_prob_initial").get_to(r.postselect_prob_initial);
    res.at("postselect_prob_final").get_to(r.postselect_prob_final);
    get_optional(res, "pinv_real", r.pinv_real);
    get_optional(res, "pinv_imag", r.pinv_imag);
    get_optional(j, "verify", r.verify);
    j.at("trace_path").get_to(r.trace_path);
    get_optional(j, "wall_seconds", r.wall_seconds);
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::kParseError, std::string("report: ") + e.what());
  }
}

std::string trace_csv(const OptimizationTrace& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "restart,iter,L,grad_norm,params_checksum\n";
  for (std::size_t r = 0; r < trace.restarts.size(); ++r) {
    for (const IterationRecord& rec : trace.restarts[r].iterations) {
      out << r << ',' << rec.iter << ',' << rec.l_value << ',' << rec.grad_norm
          << ',' << rec.params_checksum << '\n';
    }
  }
  return out.str();
}

}  // namespace vqsvd
