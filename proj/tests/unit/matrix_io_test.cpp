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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vqsvd/error.hpp"

namespace vqsvd {
namespace {

Errc parse_error_code(const std::string& text, bool pairs = false) {
  std::istringstream in(text);
  try {
    if (pairs) {
      read_pair_matrix(in);
    } else {
      read_csv_matrix(in);
    }
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return Errc::kInvalidConfig;
}

TEST(ReadCsv, ParsesRowsCommentsAndBlankLines) {
  std::istringstream in("# a comment\n1, 2.5\n\n-3e-1,4\n");
  const ComplexMatrix m = read_csv_matrix(in);
  ASSERT_EQ(m.rows(), 2);
  ASSERT_EQ(m.cols(), 2);
  EXPECT_EQ(m(0, 1), cplx(2.5));
  EXPECT_EQ(m(1, 0), cplx(-0.3));
  EXPECT_EQ(m(1, 1), cplx(4.0));
}

TEST(ReadCsv, RejectsMalformedInput) {
  EXPECT_EQ(parse_error_code(""), Errc::kParseError);
  EXPECT_EQ(parse_error_code("1,2\n3\n"), Errc::kParseError);
  EXPECT_EQ(parse_error_code("1,x\n"), Errc::kParseError);
  EXPECT_EQ(parse_error_code("1,2,\n"), Errc::kParseError);
}

TEST(ReadPairs, ParsesComplexEntries) {
  std::istringstream in("[[[1, 0], [0, -2]], [[0.5, 0.5], [3, 0]]]");
  const ComplexMatrix m = read_pair_matrix(in);
  ASSERT_EQ(m.rows(), 2);
  EXPECT_EQ(m(0, 1), cplx(0, -2));
  EXPECT_EQ(m(1, 0), cplx(0.5, 0.5));
}

TEST(ReadPairs, RejectsMalformedInput) {
  EXPECT_EQ(parse_error_code("[[1, 2]]", true), Errc::kParseError);
  EXPECT_EQ(parse_error_code("[[[1, 2]], [[1, 2], [3, 4]]]", true), Errc::kParseError);
  EXPECT_EQ(parse_error_code("{\"a\": 1}", true), Errc::kParseError);
  EXPECT_EQ(parse_error_code("[[[1, 2, 3]]]", true), Errc::kParseError);
  EXPECT_EQ(parse_error_code("[[[1, 2]", true), Errc::kParseError);
}

TEST(LoadMatrix, DetectsFormatFromContent) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = dir / "vqsvd_io_test.csv";
  const auto json = dir / "vqsvd_io_test.json";
  std::ofstream(csv) << "1,2\n3,4\n";
  std::ofstream(json) << "  [[[1,1],[2,0]],[[3,0],[4,-1]]]";
  EXPECT_EQ(load_matrix(csv)(1, 0), cplx(3.0));
  EXPECT_EQ(load_matrix(json)(1, 1), cplx(4.0, -1.0));
  std::filesystem::remove(csv);
  std::filesystem::remove(json);
  EXPECT_THROW(load_matrix(dir / "vqsvd_missing_file.csv"), Error);
}

TEST(WriteCsv, RoundTripsExactly) {
  RealMatrix m(2, 3);
  m << 0.1, -2.0 / 3.0, 1e-300, 5, 6.25, -0.0;
  std::istringstream in(write_csv_matrix(m));
  const ComplexMatrix back = read_csv_matrix(in);
  ASSERT_EQ(back.rows(), 2);
  ASSERT_EQ(back.cols(), 3);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(back(i, j).real(), m(i, j));
  }
}

}  // namespace
}  // namespace vqsvd
