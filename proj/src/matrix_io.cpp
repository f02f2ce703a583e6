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

#include "vqsvd/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "vqsvd/error.hpp"

namespace vqsvd {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& token, int line) {
  const std::string t = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw Error(Errc::kParseError, "line " + std::to_string(line) +
                                       ": cannot parse '" + t + "'");
  }
  return value;
}

ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows) {
  if (rows.empty()) throw Error(Errc::kParseError, "matrix has no rows");
  const std::size_t cols = rows.front().size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(Errc::kParseError, "row " + std::to_string(i) + " has " +
                                         std::to_string(rows[i].size()) +
                                         " entries, expected " +
                                         std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    }
  }
  return m;
}

}  // namespace

ComplexMatrix read_csv_matrix(std::istream& in) {
  std::vector<std::vector<cplx>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<cplx> row;
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      row.emplace_back(parse_double(cell, line_no), 0.0);
    }
    if (t.back() == ',') {
      throw Error(Errc::kParseError,
                  "line " + std::to_string(line_no) + ": trailing comma");
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

ComplexMatrix read_pair_matrix(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParseError, e.what());
  }
  if (!doc.is_array()) throw Error(Errc::kParseError, "expected array of rows");
  std::vector<std::vector<cplx>> rows;
  for (const auto& jrow : doc) {
    if (!jrow.is_array()) throw Error(Errc::kParseError, "row is not an array");
    std::vector<cplx> row;
    for (const auto& entry : jrow) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw Error(Errc::kParseError, "entry is not a [re, im] pair");
      }
      row.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::kParseError, "cannot open " + path.string());
  }
  char first = 0;
  while (in.get(first) && std::isspace(static_cast<unsigned char>(first))) {
  }
  if (!in) throw Error(Errc::kParseError, path.string() + " is empty");
  in.unget();
  return first == '[' ? read_pair_matrix(in) : read_csv_matrix(in);
}

std::string write_csv_matrix(const RealMatrix& m) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace vqsvd
