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

#include "logent/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "logent/errors.hpp"

namespace logent {

namespace {

constexpr double kDensityTol = 1e-9;
constexpr double kDropProbability = 1e-12;

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Matrix& m, std::vector<std::size_t> factors) {
  if (m.empty()) throw ValidationError("DensityMatrix: empty matrix");
  if (!factors.empty() && product(factors) != m.dim()) {
    throw DimensionMismatch("DensityMatrix: factor dims multiply to " +
                            std::to_string(product(factors)) + ", matrix dim is " +
                            std::to_string(m.dim()));
  }
  if (!is_hermitian(m, kDensityTol)) {
    throw ValidationError("DensityMatrix: matrix is not Hermitian within 1e-9");
  }
  Matrix h = hermitian_part(m);
  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > kDensityTol) {
    throw ValidationError("DensityMatrix: trace " + std::to_string(trace) + " is not 1");
  }
  h *= 1.0 / trace;

  auto eig = hermitian_eig(h);
  const double smallest = eig.eigenvalues.back();
  if (smallest < -kDensityTol) {
    throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(smallest));
  }
  if (smallest < 0.0) {
    const std::size_t n = h.dim();
    Matrix repaired(n);
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double lambda = std::max(eig.eigenvalues[k], 0.0);
      total += lambda;
      if (lambda == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const Complex vik = eig.eigenvectors(i, k) * lambda;
        for (std::size_t j = 0; j < n; ++j)
          repaired(i, j) += vik * std::conj(eig.eigenvectors(j, k));
      }
    }
    repaired *= 1.0 / total;
    h = hermitian_part(repaired);
  }
  return DensityMatrix(std::move(h), std::move(factors));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi, std::vector<std::size_t> factors) {
  const double n = norm(psi);
  if (std::abs(n - 1.0) > kDensityTol) {
    throw ValidationError("DensityMatrix::pure: state vector norm is " + std::to_string(n));
  }
  return from_matrix(Matrix::projector(psi), std::move(factors));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim, std::vector<std::size_t> factors) {
  return from_matrix(Matrix::identity(dim) * (1.0 / static_cast<double>(dim)), std::move(factors));
}

BipartiteDims DensityMatrix::bipartite(std::size_t split) const {
  if (factors_.size() < 2) throw ValidationError("state carries no bipartite factor dims");
  if (split == 0 || split >= factors_.size()) {
    throw DimensionMismatch("bipartite split index out of range");
  }
  BipartiteDims d{1, 1};
  for (std::size_t k = 0; k < factors_.size(); ++k) (k < split ? d.dim_a : d.dim_b) *= factors_[k];
  return d;
}

DensityMatrix DensityMatrix::with_factors(std::vector<std::size_t> factors) const {
  if (!factors.empty() && product(factors) != dim()) {
    throw DimensionMismatch("with_factors: factor dims do not match matrix dim");
  }
  return DensityMatrix(mat_, std::move(factors));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  auto fa = a.factors().empty() ? std::vector<std::size_t>{a.dim()} : a.factors();
  const auto fb = b.factors().empty() ? std::vector<std::size_t>{b.dim()} : b.factors();
  fa.insert(fa.end(), fb.begin(), fb.end());
  return DensityMatrix::from_matrix(tensor_product(a.matrix(), b.matrix()), std::move(fa));
}

DensityMatrix reduced_state(const DensityMatrix& rho, std::vector<std::size_t> keep) {
  if (!rho.has_factors()) throw ValidationError("reduced_state: state carries no factor dims");
  std::vector<std::size_t> kept_dims;
  for (auto k : keep) {
    if (k >= rho.factors().size()) throw DimensionMismatch("reduced_state: factor out of range");
    kept_dims.push_back(rho.factors()[k]);
  }
  Matrix reduced = partial_trace(rho.matrix(), rho.factors(), keep);
  if (kept_dims.size() < 2) kept_dims.clear();
  return DensityMatrix::from_matrix(reduced, std::move(kept_dims));
}

DensityMatrix reduced_state(const DensityMatrix& rho, Subsystem keep) {
  return DensityMatrix::from_matrix(partial_trace(rho.matrix(), rho.bipartite(), keep));
}

DensityMatrix conjugate(const DensityMatrix& rho, const Matrix& u) {
  require_same_dim(rho.dim(), u.dim(), "conjugate");
  return DensityMatrix::from_matrix(hermitian_part(u * rho.matrix() * u.adjoint()), rho.factors());
}

Pvm Pvm::from_blocks(std::vector<Matrix> blocks) {
  if (blocks.empty()) throw ValidationError("Pvm: no blocks");
  const std::size_t n = blocks.front().dim();
  if (n == 0) throw ValidationError("Pvm: empty block");
  Matrix total(n);
  bool nd = true;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Matrix& b = blocks[i];
    require_same_dim(b.dim(), n, "Pvm block");
    if (!is_hermitian(b, kDensityTol)) throw ValidationError("Pvm: block is not Hermitian");
    if (max_abs_diff(b * b, b) > kDensityTol) throw ValidationError("Pvm: block is not idempotent");
    const double rank = b.trace().real();
    if (rank < 0.5) throw ValidationError("Pvm: zero block");
    if (std::abs(rank - 1.0) > kDensityTol) nd = false;
    for (std::size_t j = 0; j < i; ++j) {
      if ((b * blocks[j]).max_abs() > kDensityTol) {
        throw ValidationError("Pvm: blocks " + std::to_string(j) + " and " + std::to_string(i) +
                              " are not orthogonal");
      }
    }
    total += b;
  }
  if (max_abs_diff(total, Matrix::identity(n)) > kDensityTol) {
    throw ValidationError("Pvm: blocks do not sum to the identity");
  }
  for (auto& b : blocks) b = hermitian_part(b);
  return Pvm(std::move(blocks), nd);
}

Pvm Pvm::from_basis(const Matrix& basis, std::vector<std::size_t> group_sizes) {
  const std::size_t n = basis.dim();
  if (n == 0) throw ValidationError("Pvm::from_basis: empty basis");
  if (unitarity_defect(basis) > kDensityTol) {
    throw ValidationError("Pvm::from_basis: basis columns are not orthonormal");
  }
  if (group_sizes.empty()) group_sizes.assign(n, 1);
  if (std::accumulate(group_sizes.begin(), group_sizes.end(), std::size_t{0}) != n ||
      std::find(group_sizes.begin(), group_sizes.end(), std::size_t{0}) != group_sizes.end()) {
    throw ValidationError("Pvm::from_basis: group sizes must be positive and sum to dim");
  }
  std::vector<Matrix> blocks;
  std::size_t col = 0;
  for (auto g : group_sizes) {
    Matrix b(n);
    for (std::size_t k = 0; k < g; ++k, ++col) b += Matrix::projector(basis.column(col));
    blocks.push_back(std::move(b));
  }
  return from_blocks(std::move(blocks));
}

Pvm Pvm::computational(std::size_t dim) { return from_basis(Matrix::identity(dim)); }

Pvm Pvm::trivial(std::size_t dim) { return from_blocks({Matrix::identity(dim)}); }

std::vector<Vector> Pvm::basis_vectors() const {
  if (!non_degenerate_) throw ValidationError("Pvm::basis_vectors: PVM has coarse blocks");
  std::vector<Vector> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    // B = |b><b|, so any non-zero column is a multiple of |b>.
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const double nj = norm(b.column(j));
      if (nj > best_norm) {
        best_norm = nj;
        best = j;
      }
    }
    Vector v = b.column(best);
    for (auto& z : v) z /= best_norm;
    out.push_back(std::move(v));
  }
  return out;
}

double purity(const DensityMatrix& rho) {
  return trace_of_product(rho.matrix(), rho.matrix()).real();
}

double logical_entropy(const DensityMatrix& rho) { return std::max(0.0, 1.0 - purity(rho)); }

DensityMatrix measured_state(const DensityMatrix& rho, const Pvm& pvm) {
  require_same_dim(rho.dim(), pvm.dim(), "measured_state");
  Matrix out(rho.dim());
  for (const auto& b : pvm.blocks()) out += b * rho.matrix() * b;
  return DensityMatrix::from_matrix(hermitian_part(out), rho.factors());
}

std::vector<double> outcome_probabilities(const DensityMatrix& rho, const Pvm& pvm) {
  require_same_dim(rho.dim(), pvm.dim(), "outcome_probabilities");
  std::vector<double> q;
  q.reserve(pvm.size());
  for (const auto& b : pvm.blocks()) q.push_back(trace_of_product(b, rho.matrix()).real());
  return q;
}

double pvm_logical_entropy(const DensityMatrix& rho, const Pvm& pvm) {
  double collision = 0.0;
  for (double q : outcome_probabilities(rho, pvm)) collision += q * q;
  return std::max(0.0, 1.0 - collision);
}

double min_logical_entropy(const DensityMatrix& rho) {
  double collision = 0.0;
  for (double lambda : eigenvalues(rho.matrix())) collision += lambda * lambda;
  return std::max(0.0, 1.0 - collision);
}

Pvm eigenbasis_pvm(const DensityMatrix& rho) {
  return Pvm::from_basis(hermitian_eig(rho.matrix()).eigenvectors);
}

BasisDecomposition basis_decomposition_check(const DensityMatrix& rho, const Pvm& pvm) {
  require_same_dim(rho.dim(), pvm.dim(), "basis_decomposition_check");
  if (!pvm.non_degenerate()) {
    throw ValidationError("basis_decomposition_check: PVM must be non-degenerate");
  }
  const auto basis = pvm.basis_vectors();
  std::vector<Vector> rho_b;
  rho_b.reserve(basis.size());
  for (const auto& b : basis) rho_b.push_back(rho.matrix() * b);

  BasisDecomposition out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double mag2 = std::norm(inner(basis[i], rho_b[j]));
      (i == j ? out.diagonal_purity : out.off_diagonal_mass) += mag2;
    }
  }
  return out;
}

DivergenceForms divergence_forms(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "logical_divergence");
  const double overlap = trace_of_product(rho.matrix(), sigma.matrix()).real();
  const double g_rho = purity(rho);
  const double g_sigma = purity(sigma);

  DivergenceForms out;
  out.definitional =
      2.0 * (rho.matrix().trace().real() - overlap) - (1.0 - g_rho) - (1.0 - g_sigma);
  const double fro = (rho.matrix() - sigma.matrix()).frobenius_norm();
  out.hilbert_schmidt = fro * fro;
  out.purity_overlap = g_rho + g_sigma - 2.0 * overlap;
  return out;
}

double logical_divergence(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return divergence_forms(rho, sigma).hilbert_schmidt;
}

RelativeEntropyReport relative_logical_entropy(const DensityMatrix& rho_ab, double tolerance) {
  const BipartiteDims dims = rho_ab.bipartite();
  const DensityMatrix rho_b = reduced_state(rho_ab, Subsystem::B);
  const DensityMatrix reference =
      tensor_product(DensityMatrix::maximally_mixed(dims.dim_a), rho_b);

  RelativeEntropyReport out;
  out.value = logical_entropy(rho_ab) - logical_entropy(reference);
  out.divergence = logical_divergence(rho_ab, reference);
  out.negative_divergence = -out.divergence;
  out.quarter_scaled = -0.25 * out.divergence;
  out.matches_negative_divergence = std::abs(out.value - out.negative_divergence) <= tolerance;
  out.matches_quarter_scaled = std::abs(out.value - out.quarter_scaled) <= tolerance;
  return out;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "fidelity");
  const Matrix root_sigma = psd_sqrt(sigma.matrix());
  const Matrix inner_m = hermitian_part(root_sigma * rho.matrix() * root_sigma);
  const auto lambdas = eigenvalues(inner_m);
  // Round-off eigenvalues of a rank-deficient product would otherwise
  // contribute O(1e-8) through the square root.
  const double floor = 1e-14 * std::max(1.0, lambdas.front());
  double root_trace = 0.0;
  for (double lambda : lambdas)
    if (lambda > floor) root_trace += std::sqrt(lambda);
  return std::clamp(root_trace * root_trace, 0.0, 1.0);
}

std::vector<ConditionalState> conditional_states(const DensityMatrix& rho_ab,
                                                 const Pvm& pvm_on_a) {
  const BipartiteDims dims = rho_ab.bipartite();
  require_same_dim(pvm_on_a.dim(), dims.dim_a, "conditional_states");
  const Matrix id_b = Matrix::identity(dims.dim_b);

  std::vector<ConditionalState> out;
  for (std::size_t k = 0; k < pvm_on_a.size(); ++k) {
    const Matrix lift = tensor_product(pvm_on_a.blocks()[k], id_b);
    const Matrix branch = hermitian_part(lift * rho_ab.matrix() * lift);
    const double p = branch.trace().real();
    if (p <= kDropProbability) continue;
    Matrix rho_b = hermitian_part(partial_trace(branch, dims, Subsystem::B));
    rho_b *= 1.0 / p;
    out.push_back({k, p, DensityMatrix::from_matrix(rho_b)});
  }
  return out;
}

}  // namespace logent
