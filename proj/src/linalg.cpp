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

#include "logent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "logent/errors.hpp"

namespace logent {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), data_() {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatch("Matrix: rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != bra.size()) throw DimensionMismatch("outer: ket and bra sizes differ");
  Matrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

Vector Matrix::column(std::size_t j) const {
  Vector v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(*this, other, "Matrix +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(*this, other, "Matrix -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "Matrix *");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& m, std::span<const Complex> v) {
  if (m.dim() != v.size()) throw DimensionMismatch("Matrix * vector: size mismatch");
  Vector out(v.size());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

bool is_hermitian(const Matrix& m, double tolerance) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tolerance) return false;
  return true;
}

Matrix hermitian_part(const Matrix& m) {
  Matrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = z;
      out(j, i) = std::conj(z);
    }
  }
  return out;
}

double unitarity_defect(const Matrix& u) {
  return max_abs_diff(u.adjoint() * u, Matrix::identity(u.dim()));
}

Complex trace_of_product(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "trace_of_product");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
  return t;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionMismatch("inner: size mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  Matrix out(na * nb);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < na; ++j1) {
      const Complex aij = a(i1, j1);
      if (aij == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < nb; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          out(i1 * nb + i2, j1 * nb + j2) = aij * b(i2, j2);
    }
  return out;
}

Vector tensor_product(std::span<const Complex> a, std::span<const Complex> b) {
  Vector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

Matrix partial_trace(const Matrix& m, BipartiteDims dims, Subsystem keep) {
  if (dims.dim_a == 0 || dims.dim_b == 0 || m.dim() != dims.total()) {
    throw DimensionMismatch("partial_trace: matrix dim " + std::to_string(m.dim()) +
                            " does not equal " + std::to_string(dims.dim_a) + "x" +
                            std::to_string(dims.dim_b));
  }
  const std::size_t da = dims.dim_a;
  const std::size_t db = dims.dim_b;
  if (keep == Subsystem::A) {
    Matrix out(da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
        out(i, j) = s;
      }
    return out;
  }
  Matrix out(db);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < da; ++k) s += m(k * db + i, k * db + j);
      out(i, j) = s;
    }
  return out;
}

Matrix partial_trace(const Matrix& m, std::span<const std::size_t> factors,
                     std::span<const std::size_t> keep) {
  const std::size_t total =
      std::accumulate(factors.begin(), factors.end(), std::size_t{1}, std::multiplies<>());
  if (factors.empty() || total != m.dim()) {
    throw DimensionMismatch("partial_trace: factor dims do not multiply to matrix dim");
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= factors.size() || (k > 0 && keep[k] <= keep[k - 1])) {
      throw DimensionMismatch("partial_trace: keep indices must be increasing and in range");
    }
  }
  std::vector<bool> kept(factors.size(), false);
  for (auto k : keep) kept[k] = true;

  std::size_t dim_keep = 1;
  for (auto k : keep) dim_keep *= factors[k];

  // Strides of each factor in the full index.
  std::vector<std::size_t> stride(factors.size());
  std::size_t s = 1;
  for (std::size_t f = factors.size(); f-- > 0;) {
    stride[f] = s;
    s *= factors[f];
  }

  // For every full index, its kept-part index and traced-part index.
  std::vector<std::size_t> kept_index(total), traced_index(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t ki = 0, ti = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const std::size_t digit = (idx / stride[f]) % factors[f];
      if (kept[f]) {
        ki = ki * factors[f] + digit;
      } else {
        ti = ti * factors[f] + digit;
      }
    }
    kept_index[idx] = ki;
    traced_index[idx] = ti;
  }

  Matrix out(dim_keep);
  for (std::size_t r = 0; r < total; ++r)
    for (std::size_t c = 0; c < total; ++c)
      if (traced_index[r] == traced_index[c]) out(kept_index[r], kept_index[c]) += m(r, c);
  return out;
}

HermitianEigenSystem hermitian_eig(const Matrix& m) {
  if (!is_hermitian(m, tol::kHermiticity)) {
    throw ValidationError("hermitian_eig: input is not Hermitian within tolerance");
  }
  const std::size_t n = m.dim();
  Matrix a = hermitian_part(m);
  Matrix v = Matrix::identity(n);

  const double scale = a.frobenius_norm();
  const double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps && scale > 0.0; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= eps * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex z = a(p, q);
        const double az = std::abs(z);
        if (az <= eps * eps * scale) continue;

        // Phase-rotate the pair to a real symmetric 2x2 block, then apply
        // the standard real Jacobi rotation.
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * az);
        double t = 1.0 / (std::abs(theta) + std::hypot(theta, 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const Complex phase_conj = std::conj(z / az);

        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * phase_conj;
        const Complex jqq = c * phase_conj;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  HermitianEigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src).real();

    std::size_t pivot = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = std::abs(v(i, src));
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    const Complex fix = best > 0.0 ? std::conj(v(pivot, src)) / best : Complex{1.0};
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, src) * fix;
    out.eigenvectors(pivot, k) = best;
  }
  return out;
}

std::vector<double> eigenvalues(const Matrix& m) { return hermitian_eig(m).eigenvalues; }

Matrix psd_sqrt(const Matrix& m) {
  const auto eig = hermitian_eig(m);
  const std::size_t n = m.dim();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -tol::kPsd) {
      throw ValidationError("psd_sqrt: eigenvalue " + std::to_string(lambda) +
                            " is below -PSD tolerance");
    }
    roots[k] = std::sqrt(std::max(lambda, 0.0));
  }
  Matrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (roots[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.eigenvectors(i, k) * roots[k];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
    }
  }
  return hermitian_part(out);
}

bool majorizes(std::span<const double> y, std::span<const double> x) {
  if (x.size() != y.size()) throw DimensionMismatch("majorizes: vectors differ in length");
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  const double sx = std::accumulate(xs.begin(), xs.end(), 0.0);
  const double sy = std::accumulate(ys.begin(), ys.end(), 0.0);
  if (std::abs(sx - sy) > tol::kEquality) {
    throw ValidationError("majorizes: vectors have different totals");
  }
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  double px = 0.0, py = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py + tol::kMajorization) return false;
  }
  return true;
}

}  // namespace logent
