// Copyright 2026 The logent Authors
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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "logent/errors.hpp"
#include "logent/linalg.hpp"
#include "logent/quantum.hpp"

namespace logent::cli {

// Malformed input: unreadable file, invalid JSON, wrong field types, ragged
// or non-square arrays.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error(message) {}
};

enum class MatrixKind { kDensity, kUnitary, kProjector, kVector };

std::string_view kind_name(MatrixKind kind);

// On-disk matrix document:
//
//   {"kind": "density", "dims": [2, 2], "matrix": [[[re, im], ...], ...]}
//
// "vector" files hold a flat list of [re, im] pairs under "vector".
// "projector" files hold either one projector under "matrix" (read as the
// two-outcome PVM {P, I - P}) or a complete list under "blocks".
// "unitary" files may add "groups", block sizes that coarse-grain the columns
// when the file is used as a PVM.
struct MatrixFile {
  MatrixKind kind = MatrixKind::kDensity;
  std::vector<std::size_t> dims;
  std::vector<Matrix> matrices;
  Vector vector;
  std::vector<std::size_t> groups;

  std::size_t dim() const;
};

MatrixFile parse_matrix_file(const nlohmann::json& doc);
MatrixFile parse_matrix_text(std::string_view text);

/// Reads and parses `path`; the raw bytes are stored in `*raw` when given.
MatrixFile read_matrix_file(const std::string& path, std::string* raw = nullptr);

nlohmann::json complex_json(Complex z);
nlohmann::json matrix_json(const Matrix& m);
nlohmann::json matrix_file_json(const MatrixFile& file);

/// A density file or a normalized state vector, with any recorded dims.
DensityMatrix state_from_file(const MatrixFile& file);
/// A "vector" file.
Vector vector_from_file(const MatrixFile& file);
/// A "projector" or "unitary" file.
Pvm pvm_from_file(const MatrixFile& file);

}  // namespace logent::cli
