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

#include <filesystem>
#include <istream>
#include <string>

#include "vqsvd/types.hpp"

namespace vqsvd {

/// CSV of real entries, one matrix row per line. Blank lines and lines
/// starting with '#' are skipped.
ComplexMatrix read_csv_matrix(std::istream& in);

/// JSON array of rows; every entry is a [re, im] pair.
ComplexMatrix read_pair_matrix(std::istream& in);

/// Picks the format from content: a leading '[' selects the pair format.
ComplexMatrix load_matrix(const std::filesystem::path& path);

std::string write_csv_matrix(const RealMatrix& m);

}  // namespace vqsvd
