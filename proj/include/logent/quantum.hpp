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

// Quantum logical entropy and related quantities on validated density
// matrices and projection-valued measures.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "logent/linalg.hpp"
#include "logent/partitions.hpp"

namespace logent {

/// Hermitian, positive semidefinite, unit-trace matrix, optionally tagged with
/// the dimensions of its tensor factors (A, B[, C, ...]).
class DensityMatrix {
 public:
  /// Validates and normalises `m`.
  ///
  /// Rejects (ValidationError): non-Hermitian beyond 1e-9, trace off 1 by more
  /// than 1e-9, any eigenvalue below -1e-9. Repairs: Hermitian part taken,
  /// trace renormalised, eigenvalues in [-1e-9, 0) clamped to 0.
  /// Throws DimensionMismatch if `factors` do not multiply to m.dim().
  static DensityMatrix from_matrix(const Matrix& m, std::vector<std::size_t> factors = {});
  /// |psi><psi| for a unit vector.
  static DensityMatrix pure(std::span<const Complex> psi, std::vector<std::size_t> factors = {});
  static DensityMatrix maximally_mixed(std::size_t dim, std::vector<std::size_t> factors = {});

  const Matrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.dim(); }
  const std::vector<std::size_t>& factors() const { return factors_; }
  bool has_factors() const { return factors_.size() >= 2; }

  /// (product of the first `split` factors, product of the rest). Throws
  /// ValidationError when fewer than two factors are recorded.
  BipartiteDims bipartite(std::size_t split = 1) const;

  DensityMatrix with_factors(std::vector<std::size_t> factors) const;

 private:
  DensityMatrix(Matrix m, std::vector<std::size_t> factors)
      : mat_(std::move(m)), factors_(std::move(factors)) {}

  Matrix mat_;
  std::vector<std::size_t> factors_;
};

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the listed factors (increasing indices).
DensityMatrix reduced_state(const DensityMatrix& rho, std::vector<std::size_t> keep);
/// Bipartite shorthand using rho.bipartite().
DensityMatrix reduced_state(const DensityMatrix& rho, Subsystem keep);

/// U rho U^dagger.
DensityMatrix conjugate(const DensityMatrix& rho, const Matrix& u);

/// Ordered family of orthogonal projectors summing to the identity. Blocks of
/// rank > 1 (coarse measurements) are allowed.
class Pvm {
 public:
  /// Each block Hermitian and idempotent, pairwise orthogonal, summing to I,
  /// all within 1e-9. Throws ValidationError otherwise.
  static Pvm from_blocks(std::vector<Matrix> blocks);
  /// Projectors onto the columns of a unitary; `group_sizes` (summing to
  /// dim) merges consecutive columns into coarse blocks.
  static Pvm from_basis(const Matrix& basis, std::vector<std::size_t> group_sizes = {});
  static Pvm computational(std::size_t dim);
  static Pvm trivial(std::size_t dim);

  const std::vector<Matrix>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::size_t dim() const { return blocks_.front().dim(); }
  /// True iff every block has rank 1.
  bool non_degenerate() const { return non_degenerate_; }

  /// Unit vectors spanning each rank-1 block. ValidationError if coarse.
  std::vector<Vector> basis_vectors() const;

 private:
  Pvm(std::vector<Matrix> blocks, bool nd) : blocks_(std::move(blocks)), non_degenerate_(nd) {}

  std::vector<Matrix> blocks_;
  bool non_degenerate_ = false;
};

/// tr rho^2
double purity(const DensityMatrix& rho);

/// tr[rho (I - rho)] = 1 - tr rho^2.
double logical_entropy(const DensityMatrix& rho);

/// sum_i B_i rho B_i
DensityMatrix measured_state(const DensityMatrix& rho, const Pvm& pvm);

/// q_i = tr(B_i rho)
std::vector<double> outcome_probabilities(const DensityMatrix& rho, const Pvm& pvm);

/// Probability that two independent measurements of copies of rho land in
/// different blocks: sum_i q_i (1 - q_i). For coarse PVMs this differs from
/// logical_entropy(measured_state(rho, pvm)), which keeps intra-block
/// coherences.
double pvm_logical_entropy(const DensityMatrix& rho, const Pvm& pvm);

/// Minimum of pvm_logical_entropy over non-degenerate PVMs, attained in the
/// eigenbasis of rho; equals logical_entropy(rho).
double min_logical_entropy(const DensityMatrix& rho);

/// Non-degenerate PVM built from the eigenvectors of rho.
Pvm eigenbasis_pvm(const DensityMatrix& rho);

struct BasisDecomposition {
  double diagonal_purity = 0.0;   // tr rho'^2 = sum_i |rho_ii|^2
  double off_diagonal_mass = 0.0; // sum_{i != j} |rho_ij|^2
};

/// Splits tr rho^2 in the basis of a non-degenerate PVM. Throws
/// ValidationError for coarse PVMs.
BasisDecomposition basis_decomposition_check(const DensityMatrix& rho, const Pvm& pvm);

struct DivergenceForms {
  double definitional = 0.0;     // 2 tr rho(I - sigma) - L(rho) - L(sigma)
  double hilbert_schmidt = 0.0;  // tr (rho - sigma)^2
  double purity_overlap = 0.0;   // gamma(rho) + gamma(sigma) - 2 tr(rho sigma)
};

DivergenceForms divergence_forms(const DensityMatrix& rho, const DensityMatrix& sigma);

/// tr(rho - sigma)^2; non-negative by construction.
double logical_divergence(const DensityMatrix& rho, const DensityMatrix& sigma);

struct RelativeEntropyReport {
  double value = 0.0;                // L(rho_AB) - L(I/d_A (x) rho_B)
  double divergence = 0.0;           // d(rho_AB || I/d_A (x) rho_B)
  double negative_divergence = 0.0;  // -divergence
  double quarter_scaled = 0.0;       // -divergence / 4
  bool matches_negative_divergence = false;
  bool matches_quarter_scaled = false;
};

/// Relative logical entropy L(A/B) for a state with bipartite factors,
/// alongside the two candidate divergence expressions.
RelativeEntropyReport relative_logical_entropy(const DensityMatrix& rho_ab,
                                               double tolerance = tol::kEquality);

/// (tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

struct ConditionalState {
  std::size_t outcome = 0;
  double probability = 0.0;
  DensityMatrix state;
};

/// Outcomes of a PVM on factor A and the conditional states of B:
/// p_k = tr(A_k rho_A), p_k rho_B^(k) = tr_A(A_k rho_AB). Outcomes with
/// p_k <= 1e-12 are dropped.
std::vector<ConditionalState> conditional_states(const DensityMatrix& rho_ab,
                                                 const Pvm& pvm_on_a);

/// A named scalar result with the context needed to reproduce it.
struct EntropyReport {
  std::string quantity;
  std::variant<double, Complex> value;
  std::string inputs_digest;
  double tolerance = tol::kEquality;
};

}  // namespace logent
