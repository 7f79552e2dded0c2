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

// Dense complex linear algebra for small square matrices (d <= 64).
//
// Everything here works on value types: a Matrix owns its entries and
// every operation returns a fresh result.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace logent {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

namespace tol {
inline constexpr double kHermiticity = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kReconstruction = 1e-9;
inline constexpr double kEquality = 1e-9;
// Slack on majorization prefix sums.
inline constexpr double kMajorization = 1e-12;
}  // namespace tol

/// Square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> diag);
  /// |ket><bra|
  static Matrix outer(std::span<const Complex> ket, std::span<const Complex> bra);
  static Matrix projector(std::span<const Complex> ket) { return outer(ket, ket); }

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  Vector column(std::size_t j) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scale);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

Vector operator*(const Matrix& m, std::span<const Complex> v);

double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_hermitian(const Matrix& m, double tolerance = tol::kHermiticity);
/// (m + m^dagger) / 2
Matrix hermitian_part(const Matrix& m);
/// Largest entry of |U^dagger U - I|.
double unitarity_defect(const Matrix& u);

/// tr(a b) without forming the product.
Complex trace_of_product(const Matrix& a, const Matrix& b);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

// Kronecker product; row index of the result is i1 * b.dim() + i2.
Matrix tensor_product(const Matrix& a, const Matrix& b);
Vector tensor_product(std::span<const Complex> a, std::span<const Complex> b);

struct BipartiteDims {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;

  std::size_t total() const { return dim_a * dim_b; }
};

enum class Subsystem { A, B };

Matrix partial_trace(const Matrix& m, BipartiteDims dims, Subsystem keep);

/// General partial trace over a multi-factor tensor product. `keep` lists the
/// factor indices retained, in increasing order.
Matrix partial_trace(const Matrix& m, std::span<const std::size_t> factors,
                     std::span<const std::size_t> keep);

struct HermitianEigenSystem {
  std::vector<double> eigenvalues;  // non-increasing
  Matrix eigenvectors;              // column k pairs with eigenvalues[k]
};

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// The output is a pure function of the input: sweeps run in a fixed (p, q)
/// order, eigenpairs are stably sorted by non-increasing eigenvalue, and each
/// eigenvector is rotated so that its largest-magnitude component (first one
/// on ties) is real and positive.
///
/// Throws ValidationError if `m` is not Hermitian within tol::kHermiticity.
HermitianEigenSystem hermitian_eig(const Matrix& m);

/// Eigenvalues only, non-increasing.
std::vector<double> eigenvalues(const Matrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-tol::kPsd, 0) are clamped to zero; anything more negative throws.
Matrix psd_sqrt(const Matrix& m);

/// True iff y majorizes x (x is majorized by y). Both vectors are sorted
/// non-increasing internally.
///
/// Throws DimensionMismatch on unequal lengths and ValidationError if the
/// totals differ by more than tol::kEquality.
bool majorizes(std::span<const double> y, std::span<const double> x);

}  // namespace logent
