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

#include "logent/sampling.hpp"

#include <cmath>

#include "logent/errors.hpp"

namespace logent {

namespace {

// Inverse square root of a positive definite matrix.
Matrix inverse_sqrt(const Matrix& m) {
  const auto eig = hermitian_eig(m);
  const std::size_t n = m.dim();
  Matrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double scale = 1.0 / std::sqrt(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.eigenvectors(i, k) * scale;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
    }
  }
  return hermitian_part(out);
}

Matrix random_psd(CounterRng& rng, std::size_t dim) {
  Matrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return hermitian_part(g * g.adjoint());
}

}  // namespace

DensityMatrix sample_density(CounterRng& rng, std::size_t dim, std::optional<std::size_t> rank,
                             std::vector<std::size_t> factors) {
  const std::size_t r = rank.value_or(dim);
  if (dim == 0 || r == 0 || r > dim) throw ValidationError("sample_density: need 1 <= rank <= dim");
  Matrix m(dim);
  std::vector<Vector> cols(r, Vector(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < r; ++k) cols[k][i] = rng.complex_normal();
  for (const auto& c : cols) m += Matrix::projector(c);
  m *= 1.0 / m.trace().real();
  return DensityMatrix::from_matrix(hermitian_part(m), std::move(factors));
}

DensityMatrix sample_density(std::uint64_t seed, std::size_t dim, std::optional<std::size_t> rank) {
  CounterRng rng(seed);
  return sample_density(rng, dim, rank);
}

Matrix sample_unitary(CounterRng& rng, std::size_t dim) {
  if (dim == 0) throw ValidationError("sample_unitary: dim must be >= 1");
  std::vector<Vector> cols(dim, Vector(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) cols[k][i] = rng.complex_normal();

  // Modified Gram-Schmidt, two passes for orthogonality at working precision.
  for (std::size_t k = 0; k < dim; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        const Complex proj = inner(cols[j], cols[k]);
        for (std::size_t i = 0; i < dim; ++i) cols[k][i] -= proj * cols[j][i];
      }
    }
    const double n = norm(cols[k]);
    for (auto& z : cols[k]) z /= n;
  }
  Matrix u(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) u(i, k) = cols[k][i];
  return u;
}

Matrix sample_unitary(std::uint64_t seed, std::size_t dim) {
  CounterRng rng(seed);
  return sample_unitary(rng, dim);
}

Vector sample_state_vector(CounterRng& rng, std::size_t dim) {
  Vector v(dim);
  for (auto& z : v) z = rng.complex_normal();
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

std::vector<std::size_t> sample_grouping(CounterRng& rng, std::size_t dim) {
  // Cut between consecutive positions independently with probability 1/2.
  std::vector<std::size_t> groups{1};
  for (std::size_t i = 1; i < dim; ++i) {
    if (rng.below(2) == 0) {
      groups.push_back(1);
    } else {
      ++groups.back();
    }
  }
  return groups;
}

Pvm sample_pvm(CounterRng& rng, std::size_t dim, std::vector<std::size_t> groups) {
  return Pvm::from_basis(sample_unitary(rng, dim), std::move(groups));
}

Pvm sample_pvm(std::uint64_t seed, std::size_t dim, std::vector<std::size_t> groups) {
  CounterRng rng(seed);
  return sample_pvm(rng, dim, std::move(groups));
}

UnitalChannel sample_unitary_mixture_channel(CounterRng& rng, std::size_t dim) {
  const std::size_t count = 2 + rng.below(3);
  std::vector<Matrix> unitaries;
  for (std::size_t k = 0; k < count; ++k) unitaries.push_back(sample_unitary(rng, dim));
  return UnitalChannel::unitary_mixture(rng.dirichlet(count), unitaries);
}

UnitalChannel sample_dephasing_channel(CounterRng& rng, std::size_t dim) {
  std::vector<std::size_t> groups;
  if (rng.below(2) == 1) groups = sample_grouping(rng, dim);
  return UnitalChannel::dephasing(sample_pvm(rng, dim, std::move(groups)));
}

Povm sample_povm(CounterRng& rng, std::size_t dim, std::size_t outcomes) {
  if (outcomes == 0) throw ValidationError("sample_povm: need at least one outcome");
  std::vector<Matrix> g;
  Matrix total(dim);
  for (std::size_t k = 0; k < outcomes; ++k) {
    g.push_back(random_psd(rng, dim));
    total += g.back();
  }
  const Matrix s = inverse_sqrt(total);
  std::vector<Matrix> effects;
  for (const auto& gk : g) effects.push_back(hermitian_part(s * gk * s));
  return Povm::from_effects(std::move(effects));
}

}  // namespace logent
