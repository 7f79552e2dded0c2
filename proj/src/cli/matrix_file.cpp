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

#include "logent/cli/matrix_file.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace logent::cli {

namespace {

Complex parse_entry(const nlohmann::json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw ParseError("matrix entries must be [re, im] pairs of numbers");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

Vector parse_vector(const nlohmann::json& v) {
  if (!v.is_array() || v.empty()) throw ParseError("\"vector\" must be a non-empty array");
  Vector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(parse_entry(e));
  return out;
}

Matrix parse_square(const nlohmann::json& rows, std::string_view field) {
  if (!rows.is_array() || rows.empty()) {
    throw ParseError("\"" + std::string(field) + "\" must be a non-empty array of rows");
  }
  const std::size_t n = rows.size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array()) throw ParseError("matrix row " + std::to_string(i) + " is not an array");
    if (rows[i].size() != n) {
      throw ParseError("matrix is not square: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_entry(rows[i][j]);
  }
  return m;
}

std::vector<std::size_t> parse_sizes(const nlohmann::json& v, std::string_view field) {
  if (!v.is_array()) throw ParseError("\"" + std::string(field) + "\" must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : v) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() == 0) {
      throw ParseError("\"" + std::string(field) + "\" entries must be positive integers");
    }
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

MatrixKind parse_kind(const nlohmann::json& doc) {
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("missing string field \"kind\"");
  }
  const auto name = doc["kind"].get<std::string>();
  for (auto k : {MatrixKind::kDensity, MatrixKind::kUnitary, MatrixKind::kProjector,
                 MatrixKind::kVector}) {
    if (kind_name(k) == name) return k;
  }
  throw ParseError("unknown kind \"" + name + "\"");
}

}  // namespace

std::string_view kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::kDensity: return "density";
    case MatrixKind::kUnitary: return "unitary";
    case MatrixKind::kProjector: return "projector";
    case MatrixKind::kVector: return "vector";
  }
  return "?";
}

std::size_t MatrixFile::dim() const {
  return kind == MatrixKind::kVector ? vector.size() : matrices.front().dim();
}

MatrixFile parse_matrix_file(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");
  MatrixFile file;
  file.kind = parse_kind(doc);

  if (file.kind == MatrixKind::kVector) {
    if (!doc.contains("vector")) throw ParseError("vector file needs a \"vector\" field");
    file.vector = parse_vector(doc["vector"]);
  } else if (file.kind == MatrixKind::kProjector && doc.contains("blocks")) {
    const auto& blocks = doc["blocks"];
    if (!blocks.is_array() || blocks.empty()) throw ParseError("\"blocks\" must be a non-empty array");
    for (const auto& b : blocks) file.matrices.push_back(parse_square(b, "blocks"));
    for (const auto& m : file.matrices) {
      if (m.dim() != file.matrices.front().dim()) {
        throw DimensionMismatch("projector blocks have different sizes");
      }
    }
  } else {
    if (!doc.contains("matrix")) throw ParseError("missing field \"matrix\"");
    file.matrices.push_back(parse_square(doc["matrix"], "matrix"));
  }

  if (doc.contains("groups")) {
    if (file.kind != MatrixKind::kUnitary) throw ParseError("\"groups\" is only valid for unitary files");
    file.groups = parse_sizes(doc["groups"], "groups");
  }
  if (doc.contains("dims")) {
    file.dims = parse_sizes(doc["dims"], "dims");
    const std::size_t product =
        std::accumulate(file.dims.begin(), file.dims.end(), std::size_t{1}, std::multiplies<>());
    if (product != file.dim()) {
      throw DimensionMismatch("dims multiply to " + std::to_string(product) + " but the data has size " +
                              std::to_string(file.dim()));
    }
  }
  return file;
}

MatrixFile parse_matrix_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_matrix_file(doc);
}

MatrixFile read_matrix_file(const std::string& path, std::string* raw) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  MatrixFile file;
  try {
    file = parse_matrix_text(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (raw) *raw = std::move(text);
  return file;
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json matrix_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json matrix_file_json(const MatrixFile& file) {
  nlohmann::json doc;
  doc["kind"] = kind_name(file.kind);
  if (!file.dims.empty()) doc["dims"] = file.dims;
  if (!file.groups.empty()) doc["groups"] = file.groups;
  if (file.kind == MatrixKind::kVector) {
    auto v = nlohmann::json::array();
    for (const auto& z : file.vector) v.push_back(complex_json(z));
    doc["vector"] = std::move(v);
  } else if (file.matrices.size() > 1) {
    auto blocks = nlohmann::json::array();
    for (const auto& m : file.matrices) blocks.push_back(matrix_json(m));
    doc["blocks"] = std::move(blocks);
  } else {
    doc["matrix"] = matrix_json(file.matrices.front());
  }
  return doc;
}

DensityMatrix state_from_file(const MatrixFile& file) {
  switch (file.kind) {
    case MatrixKind::kDensity:
      return DensityMatrix::from_matrix(file.matrices.front(), file.dims);
    case MatrixKind::kVector:
      return DensityMatrix::pure(file.vector, file.dims);
    default:
      throw ValidationError("expected a density or vector file, got " +
                            std::string(kind_name(file.kind)));
  }
}

Vector vector_from_file(const MatrixFile& file) {
  if (file.kind != MatrixKind::kVector) {
    throw ValidationError("expected a vector file, got " + std::string(kind_name(file.kind)));
  }
  return file.vector;
}

Pvm pvm_from_file(const MatrixFile& file) {
  switch (file.kind) {
    case MatrixKind::kUnitary:
      return Pvm::from_basis(file.matrices.front(), file.groups);
    case MatrixKind::kProjector: {
      if (file.matrices.size() > 1) return Pvm::from_blocks(file.matrices);
      const Matrix& p = file.matrices.front();
      const Matrix rest = Matrix::identity(p.dim()) - p;
      if (rest.max_abs() <= tol::kEquality) return Pvm::from_blocks({p});
      return Pvm::from_blocks({p, rest});
    }
    default:
      throw ValidationError("expected a projector or unitary file, got " +
                            std::string(kind_name(file.kind)));
  }
}

}  // namespace logent::cli
