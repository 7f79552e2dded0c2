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

#include "logent/channels.hpp"

#include <cmath>
#include <numbers>

#include "logent/errors.hpp"

namespace logent {

namespace {

constexpr double kChannelTol = 1e-9;
constexpr double kSchmidtCutoff = 1e-13;

}  // namespace

UnitalChannel UnitalChannel::from_kraus(std::vector<Matrix> kraus) {
  if (kraus.empty()) throw ValidationError("UnitalChannel: no Kraus operators");
  const std::size_t n = kraus.front().dim();
  Matrix tp(n), unital(n);
  for (const auto& k : kraus) {
    if (k.dim() != n) throw DimensionMismatch("UnitalChannel: Kraus operators differ in size");
    const Matrix kd = k.adjoint();
    tp += kd * k;
    unital += k * kd;
  }
  const Matrix id = Matrix::identity(n);
  if (max_abs_diff(tp, id) > kChannelTol) {
    throw ValidationError("UnitalChannel: Kraus operators are not trace preserving");
  }
  if (max_abs_diff(unital, id) > kChannelTol) {
    throw ValidationError("UnitalChannel: Kraus operators are not unital");
  }
  return UnitalChannel(std::move(kraus));
}

UnitalChannel UnitalChannel::dephasing(const Pvm& pvm) { return from_kraus(pvm.blocks()); }

UnitalChannel UnitalChannel::unitary_mixture(const std::vector<double>& weights,
                                             const std::vector<Matrix>& unitaries) {
  if (weights.size() != unitaries.size()) {
    throw DimensionMismatch("unitary_mixture: one weight per unitary required");
  }
  std::vector<Matrix> kraus;
  kraus.reserve(unitaries.size());
  for (std::size_t k = 0; k < unitaries.size(); ++k) {
    if (weights[k] < 0.0) throw ValidationError("unitary_mixture: negative weight");
    kraus.push_back(unitaries[k] * std::sqrt(weights[k]));
  }
  return from_kraus(std::move(kraus));
}

DensityMatrix apply_channel(const UnitalChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) throw DimensionMismatch("apply_channel: dimension mismatch");
  Matrix out(rho.dim());
  for (const auto& k : channel.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix::from_matrix(hermitian_part(out), rho.factors());
}

Povm Povm::from_effects(std::vector<Matrix> effects) {
  if (effects.empty()) throw ValidationError("Povm: no effects");
  const std::size_t n = effects.front().dim();
  Matrix total(n);
  for (const auto& e : effects) {
    if (e.dim() != n) throw DimensionMismatch("Povm: effects differ in size");
    if (eigenvalues(e).back() < -kChannelTol) throw ValidationError("Povm: effect is not PSD");
    total += e;
  }
  if (max_abs_diff(total, Matrix::identity(n)) > kChannelTol) {
    throw ValidationError("Povm: effects do not sum to the identity");
  }
  for (auto& e : effects) e = hermitian_part(e);
  return Povm(std::move(effects));
}

UnitalChannel povm_unital_implementation(const Povm& povm) {
  std::vector<Matrix> kraus;
  kraus.reserve(povm.effects().size());
  for (const auto& e : povm.effects()) kraus.push_back(psd_sqrt(e));
  return UnitalChannel::from_kraus(std::move(kraus));
}

Vector purify(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  const std::size_t d = rho.dim();
  Vector psi(d * d);
  for (std::size_t k = 0; k < d; ++k) {
    const double weight = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
    if (weight == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) psi[i * d + k] = weight * eig.eigenvectors(i, k);
  }
  return psi;
}

SchmidtDecomposition schmidt_decompose(std::span<const Complex> psi, BipartiteDims dims) {
  if (psi.size() != dims.total()) {
    throw DimensionMismatch("schmidt_decompose: vector length does not match dims");
  }
  if (std::abs(norm(psi) - 1.0) > kChannelTol) {
    throw ValidationError("schmidt_decompose: state is not normalised");
  }
  const std::size_t da = dims.dim_a;
  const std::size_t db = dims.dim_b;
  // rho_A = Psi Psi^dagger with Psi[i][j] = psi[i * db + j].
  Matrix rho_a(da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < db; ++j) s += psi[i * db + j] * std::conj(psi[k * db + j]);
      rho_a(i, k) = s;
    }
  const auto eig = hermitian_eig(rho_a);

  SchmidtDecomposition out;
  for (std::size_t k = 0; k < da; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda <= kSchmidtCutoff) break;
    const double s = std::sqrt(lambda);
    Vector a = eig.eigenvectors.column(k);
    // b_k = Psi^T conj(a_k) / s_k
    Vector b(db);
    for (std::size_t j = 0; j < db; ++j) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < da; ++i) acc += psi[i * db + j] * std::conj(a[i]);
      b[j] = acc / s;
    }
    out.coefficients.push_back(s);
    out.basis_a.push_back(std::move(a));
    out.basis_b.push_back(std::move(b));
  }
  return out;
}

Matrix InteractionBlocks::reduced_system() const {
  Matrix out(dim_s_);
  for (std::size_t i = 0; i < dim_r_; ++i) out += block(i, i);
  return out;
}

InteractionBlocks interaction_blocks(const DensityMatrix& rho_sr, const Matrix& u) {
  const BipartiteDims dims = rho_sr.bipartite();
  if (u.dim() != rho_sr.dim()) throw DimensionMismatch("interaction_blocks: U has wrong size");
  if (unitarity_defect(u) > kChannelTol) {
    throw ValidationError("interaction_blocks: U is not unitary within 1e-9");
  }
  const Matrix evolved = hermitian_part(u * rho_sr.matrix() * u.adjoint());
  const std::size_t ds = dims.dim_a;
  const std::size_t dr = dims.dim_b;
  std::vector<Matrix> blocks(dr * dr, Matrix(ds));
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < dr; ++j) {
      Matrix& b = blocks[i * dr + j];
      for (std::size_t s = 0; s < ds; ++s)
        for (std::size_t t = 0; t < ds; ++t) b(s, t) = evolved(s * dr + i, t * dr + j);
    }
  return InteractionBlocks(ds, dr, std::move(blocks));
}

InteractionBounds prop6_bounds(const InteractionBlocks& blocks, bool joint_pure) {
  double cross = 0.0;
  double diag_overlap = 0.0;
  for (std::size_t i = 0; i < blocks.dim_r(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Matrix& bij = blocks.block(i, j);
      cross += trace_of_product(bij, bij.adjoint()).real();
      diag_overlap += trace_of_product(blocks.block(i, i), blocks.block(j, j)).real();
    }
  }
  InteractionBounds out;
  out.lower = 2.0 * (cross - diag_overlap);
  if (joint_pure) out.upper = 2.0 * cross;
  return out;
}

Matrix weyl_operator(std::size_t dim, std::size_t shift, std::size_t clock) {
  Matrix w(dim);
  const double base = 2.0 * std::numbers::pi / static_cast<double>(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    // X^a Z^c |j> = w^{c j} |j + a>
    const double angle = base * static_cast<double>((clock * j) % dim);
    w((j + shift) % dim, j) = std::polar(1.0, angle);
  }
  return w;
}

DensityMatrix twirl_subsystem(const DensityMatrix& rho_ab) {
  const BipartiteDims dims = rho_ab.bipartite();
  const std::size_t db = dims.dim_b;
  const Matrix id_a = Matrix::identity(dims.dim_a);
  Matrix out(rho_ab.dim());
  for (std::size_t a = 0; a < db; ++a)
    for (std::size_t c = 0; c < db; ++c) {
      const Matrix w = tensor_product(id_a, weyl_operator(db, a, c));
      out += w * rho_ab.matrix() * w.adjoint();
    }
  out *= 1.0 / static_cast<double>(db * db);
  return DensityMatrix::from_matrix(hermitian_part(out), rho_ab.factors());
}

}  // namespace logent
