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

// Unital channels, POVM implementations, purification, Schmidt
// decomposition, system-environment interaction blocks and the Weyl twirl.

#include <optional>
#include <vector>

#include "logent/linalg.hpp"
#include "logent/quantum.hpp"

namespace logent {

/// Kraus representation of a trace-preserving unital map.
class UnitalChannel {
 public:
  /// Requires sum M^dagger M = I and sum M M^dagger = I within 1e-9.
  static UnitalChannel from_kraus(std::vector<Matrix> kraus);
  /// Non-selective measurement: Kraus operators are the PVM blocks.
  static UnitalChannel dephasing(const Pvm& pvm);
  /// rho -> sum_k w_k U_k rho U_k^dagger
  static UnitalChannel unitary_mixture(const std::vector<double>& weights,
                                       const std::vector<Matrix>& unitaries);

  const std::vector<Matrix>& kraus() const { return kraus_; }
  std::size_t dim() const { return kraus_.front().dim(); }

 private:
  explicit UnitalChannel(std::vector<Matrix> k) : kraus_(std::move(k)) {}
  std::vector<Matrix> kraus_;
};

DensityMatrix apply_channel(const UnitalChannel& channel, const DensityMatrix& rho);

class Povm {
 public:
  /// Each effect Hermitian PSD (eigenvalues >= -1e-9), summing to I.
  static Povm from_effects(std::vector<Matrix> effects);

  const std::vector<Matrix>& effects() const { return effects_; }
  std::size_t dim() const { return effects_.front().dim(); }

 private:
  explicit Povm(std::vector<Matrix> e) : effects_(std::move(e)) {}
  std::vector<Matrix> effects_;
};

/// Kraus operators sqrt(E_i). Throws ValidationError if the resulting set is
/// not unital within 1e-9, which for a valid Povm means numerical corruption.
UnitalChannel povm_unital_implementation(const Povm& povm);

/// sum_i sqrt(lambda_i) |lambda_i>|i> on C^d (x) C^d, eigenpairs in
/// non-increasing order, ancilla in the computational basis.
Vector purify(const DensityMatrix& rho);

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // positive, non-increasing
  std::vector<Vector> basis_a;
  std::vector<Vector> basis_b;
};

/// psi = sum_k s_k |a_k>|b_k>. Terms with s_k^2 <= 1e-13 are treated as
/// round-off and omitted. Throws ValidationError for non-unit input.
SchmidtDecomposition schmidt_decompose(std::span<const Complex> psi, BipartiteDims dims);

/// B_ij = <i|_R U rho_SR U^dagger |j>_R as S-dimensional matrices.
class InteractionBlocks {
 public:
  std::size_t dim_s() const { return dim_s_; }
  std::size_t dim_r() const { return dim_r_; }
  const Matrix& block(std::size_t i, std::size_t j) const { return blocks_[i * dim_r_ + j]; }
  /// sum_i B_ii
  Matrix reduced_system() const;

 private:
  friend InteractionBlocks interaction_blocks(const DensityMatrix&, const Matrix&);
  InteractionBlocks(std::size_t s, std::size_t r, std::vector<Matrix> b)
      : dim_s_(s), dim_r_(r), blocks_(std::move(b)) {}

  std::size_t dim_s_;
  std::size_t dim_r_;
  std::vector<Matrix> blocks_;
};

/// rho_sr must carry (S, R) factor dims; U must be unitary within 1e-9 on the
/// joint space.
InteractionBlocks interaction_blocks(const DensityMatrix& rho_sr, const Matrix& u);

struct InteractionBounds {
  double lower = 0.0;
  std::optional<double> upper;  // only for pure joint states
};

/// lower = 2 sum_{j<i} [tr(B_ij B_ij^dagger) - Re tr(B_ii B_jj)]
/// upper = 2 sum_{j<i} tr(B_ij B_ij^dagger), reported when joint_pure.
InteractionBounds prop6_bounds(const InteractionBlocks& blocks, bool joint_pure);

/// X^a Z^c on C^d with X|j> = |j+1 mod d>, Z|j> = w^j |j>, w = exp(2 pi i/d).
Matrix weyl_operator(std::size_t dim, std::size_t shift, std::size_t clock);

/// Uniform mixture of (I (x) W) rho (I (x) W)^dagger over all d_B^2 Weyl
/// operators W on B; equals rho_A (x) I/d_B.
DensityMatrix twirl_subsystem(const DensityMatrix& rho_ab);

}  // namespace logent
