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

#include <gtest/gtest.h>

#include "logent/channels.hpp"
#include "logent/errors.hpp"
#include "test_util.hpp"

namespace logent {
namespace {

const double kR = 1.0 / std::sqrt(2.0);
const Vector kZero{1.0, 0.0};
const Vector kPlus{kR, kR};
const Vector kBell{kR, 0.0, 0.0, kR};

const Matrix kCnot{{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
const Matrix kSwap{{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}};

Matrix random_unitary(std::mt19937_64& gen, std::size_t dim) {
  return hermitian_eig(testing::random_hermitian(gen, dim)).eigenvectors;
}

DensityMatrix random_state(std::mt19937_64& gen, std::size_t dim, std::vector<std::size_t> factors = {}) {
  return DensityMatrix::from_matrix(testing::random_density(gen, dim), std::move(factors));
}

TEST(UnitalChannel, Validation) {
  EXPECT_THROW(UnitalChannel::from_kraus({Matrix::identity(2) * 0.5}), ValidationError);
  // Amplitude damping is trace preserving but not unital.
  const double g = 0.3;
  EXPECT_THROW(UnitalChannel::from_kraus({Matrix{{1.0, 0.0}, {0.0, std::sqrt(1 - g)}},
                                          Matrix{{0.0, std::sqrt(g)}, {0.0, 0.0}}}),
               ValidationError);
  EXPECT_THROW(UnitalChannel::unitary_mixture({0.5, 0.6}, {Matrix::identity(2), testing::kPauliX}),
               ValidationError);
}

TEST(ApplyChannel, Examples) {
  std::mt19937_64 gen(1);
  const auto rho = random_state(gen, 3);
  const auto identity = UnitalChannel::from_kraus({Matrix::identity(3)});
  EXPECT_LE(max_abs_diff(apply_channel(identity, rho).matrix(), rho.matrix()), 1e-15);

  const auto dephase = UnitalChannel::dephasing(Pvm::computational(2));
  EXPECT_LE(max_abs_diff(apply_channel(dephase, DensityMatrix::pure(kPlus)).matrix(),
                         Matrix::identity(2) * 0.5),
            1e-15);

  const auto mixture =
      UnitalChannel::unitary_mixture({0.3, 0.7}, {random_unitary(gen, 3), random_unitary(gen, 3)});
  EXPECT_LE(max_abs_diff(apply_channel(mixture, DensityMatrix::maximally_mixed(3)).matrix(),
                         Matrix::identity(3) * (1.0 / 3.0)),
            1e-12);
  EXPECT_THROW(apply_channel(mixture, DensityMatrix::maximally_mixed(2)), DimensionMismatch);
}

TEST(ApplyChannel, UnitalChannelsDoNotDecreaseEntropy) {
  std::mt19937_64 gen(2);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const auto rho = random_state(gen, d);
    const auto ch = rep % 2 ? UnitalChannel::dephasing(Pvm::from_basis(random_unitary(gen, d)))
                            : UnitalChannel::unitary_mixture({0.2, 0.3, 0.5}, {random_unitary(gen, d),
                                                                               random_unitary(gen, d),
                                                                               random_unitary(gen, d)});
    const auto out = apply_channel(ch, rho);
    EXPECT_LE(logical_entropy(rho), logical_entropy(out) + 1e-9);
    EXPECT_TRUE(majorizes(eigenvalues(rho.matrix()), eigenvalues(out.matrix())));
  }
}

TEST(Povm, Validation) {
  EXPECT_THROW(Povm::from_effects({Matrix::identity(2) * 0.5, Matrix::identity(2) * 0.4}), ValidationError);
  EXPECT_THROW(Povm::from_effects({Matrix{{1.5, 0.0}, {0.0, 0.5}}, Matrix{{-0.5, 0.0}, {0.0, 0.5}}}),
               ValidationError);
}

TEST(PovmImplementation, Examples) {
  const Pvm pvm = Pvm::computational(2);
  const auto from_pvm = povm_unital_implementation(Povm::from_effects(pvm.blocks()));
  for (std::size_t k = 0; k < 2; ++k)
    EXPECT_LE(max_abs_diff(from_pvm.kraus()[k], pvm.blocks()[k]), 1e-12);

  const auto halves = povm_unital_implementation(
      Povm::from_effects({Matrix::identity(2) * 0.5, Matrix::identity(2) * 0.5}));
  for (const auto& k : halves.kraus()) EXPECT_LE(max_abs_diff(k, Matrix::identity(2) * kR), 1e-12);
  std::mt19937_64 gen(3);
  const auto rho = random_state(gen, 2);
  EXPECT_LE(max_abs_diff(apply_channel(halves, rho).matrix(), rho.matrix()), 1e-12);
}

TEST(PovmImplementation, RandomQubitPovmsAreUnital) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    // E = V diag(a, b) V^dagger with 0 <= a, b <= 1, and I - E.
    const Matrix v = random_unitary(gen, 2);
    const std::vector<double> d{u(gen), u(gen)};
    const Matrix e = hermitian_part(v * Matrix::diagonal(d) * v.adjoint());
    const auto ch = povm_unital_implementation(Povm::from_effects({e, Matrix::identity(2) - e}));
    Matrix tp(2), un(2);
    for (const auto& k : ch.kraus()) {
      tp += k.adjoint() * k;
      un += k * k.adjoint();
    }
    EXPECT_LE(max_abs_diff(tp, Matrix::identity(2)), 1e-9);
    EXPECT_LE(max_abs_diff(un, Matrix::identity(2)), 1e-9);
  }
}

TEST(Purify, Examples) {
  const auto pure = purify(DensityMatrix::pure(kPlus));
  const Vector expected = tensor_product(kPlus, kZero);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(std::abs(pure[i] - expected[i]), 1e-12);

  for (const auto& rho : {DensityMatrix::maximally_mixed(2),
                          DensityMatrix::from_matrix(Matrix::diagonal(std::vector<double>{0.75, 0.25}))}) {
    const Vector psi = purify(rho);
    EXPECT_NEAR(norm(psi), 1.0, 1e-12);
    EXPECT_LE(max_abs_diff(partial_trace(Matrix::projector(psi), {2, 2}, Subsystem::A), rho.matrix()),
              1e-9);
  }
}

TEST(Purify, RoundTripAndEqualMarginalEntropies) {
  std::mt19937_64 gen(5);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t d = 2 + rep % 4;
    const auto rho = random_state(gen, d);
    const auto joint = DensityMatrix::pure(purify(rho), {d, d});
    EXPECT_LE(max_abs_diff(reduced_state(joint, Subsystem::A).matrix(), rho.matrix()), 1e-9);
    EXPECT_NEAR(logical_entropy(reduced_state(joint, Subsystem::B)), logical_entropy(rho), 1e-9);

    const std::size_t db = 2 + rep % 3;
    const auto random_pure = DensityMatrix::pure(testing::random_unit_vector(gen, d * db), {d, db});
    EXPECT_NEAR(logical_entropy(reduced_state(random_pure, Subsystem::A)),
                logical_entropy(reduced_state(random_pure, Subsystem::B)), 1e-9);
  }
}

TEST(Schmidt, Examples) {
  const auto product = schmidt_decompose(tensor_product(kZero, Vector{0.0, 1.0}), {2, 2});
  ASSERT_EQ(product.coefficients.size(), 1u);
  EXPECT_NEAR(product.coefficients[0], 1.0, 1e-12);

  const auto bell = schmidt_decompose(kBell, {2, 2});
  ASSERT_EQ(bell.coefficients.size(), 2u);
  EXPECT_NEAR(bell.coefficients[0], kR, 1e-12);
  EXPECT_NEAR(bell.coefficients[1], kR, 1e-12);

  const Vector skew{std::sqrt(0.75), 0.0, 0.0, 0.5};
  const auto s = schmidt_decompose(skew, {2, 2});
  EXPECT_NEAR(s.coefficients[0], std::sqrt(0.75), 1e-12);
  EXPECT_NEAR(s.coefficients[1], 0.5, 1e-12);

  EXPECT_THROW(schmidt_decompose(Vector{1.0, 1.0, 0.0, 0.0}, {2, 2}), ValidationError);
}

TEST(Schmidt, ReconstructsAndMatchesMarginalSpectra) {
  std::mt19937_64 gen(6);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t da = 2 + rep % 3, db = 2 + (rep / 3) % 3;
    const Vector psi = testing::random_unit_vector(gen, da * db);
    const auto s = schmidt_decompose(psi, {da, db});
    Vector rebuilt(da * db);
    double total = 0.0;
    for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
      const Vector term = tensor_product(s.basis_a[k], s.basis_b[k]);
      for (std::size_t i = 0; i < rebuilt.size(); ++i) rebuilt[i] += s.coefficients[k] * term[i];
      total += s.coefficients[k] * s.coefficients[k];
      if (k) EXPECT_LE(s.coefficients[k], s.coefficients[k - 1]);
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
    for (std::size_t i = 0; i < psi.size(); ++i) EXPECT_LE(std::abs(rebuilt[i] - psi[i]), 1e-9);
    const auto joint = Matrix::projector(psi);
    for (auto keep : {Subsystem::A, Subsystem::B}) {
      const auto spectrum = eigenvalues(partial_trace(joint, {da, db}, keep));
      for (std::size_t k = 0; k < spectrum.size(); ++k) {
        const double expected = k < s.coefficients.size() ? s.coefficients[k] * s.coefficients[k] : 0.0;
        EXPECT_NEAR(spectrum[k], expected, 1e-9);
      }
    }
  }
}

TEST(InteractionBlocks, ProductWithBasisState) {
  std::mt19937_64 gen(7);
  const auto rho_s = random_state(gen, 2);
  const auto joint = tensor_product(rho_s, DensityMatrix::pure(kZero));
  const auto blocks = interaction_blocks(joint, Matrix::identity(4));
  EXPECT_LE(max_abs_diff(blocks.block(0, 0), rho_s.matrix()), 1e-15);
  EXPECT_EQ(blocks.block(0, 1).max_abs(), 0.0);
  EXPECT_EQ(blocks.block(1, 1).max_abs(), 0.0);
  EXPECT_NEAR(prop6_bounds(blocks, false).lower, 0.0, 1e-15);
}

TEST(InteractionBlocks, SwapAndCnot) {
  const auto joint = DensityMatrix::pure(tensor_product(kPlus, kZero), {2, 2});
  const auto swapped = interaction_blocks(joint, kSwap);
  EXPECT_LE(max_abs_diff(swapped.reduced_system(), Matrix::projector(kZero)), 1e-15);

  const auto cnot = interaction_blocks(joint, kCnot);
  EXPECT_LE(max_abs_diff(cnot.reduced_system(), Matrix::identity(2) * 0.5), 1e-15);
  const Matrix bell = Matrix::projector(kBell);
  EXPECT_NEAR(cnot.block(0, 0)(0, 0).real(), bell(0, 0).real(), 1e-15);
  EXPECT_NEAR(cnot.block(1, 1)(1, 1).real(), bell(3, 3).real(), 1e-15);
  EXPECT_NEAR(cnot.block(0, 1)(0, 1).real(), bell(0, 3).real(), 1e-15);

  const auto bounds = prop6_bounds(cnot, true);
  EXPECT_LE(bounds.lower, 0.5 + 1e-12);
  ASSERT_TRUE(bounds.upper.has_value());
  EXPECT_GE(*bounds.upper, 0.5 - 1e-12);
  EXPECT_FALSE(prop6_bounds(cnot, false).upper.has_value());

  EXPECT_THROW(interaction_blocks(joint, Matrix{{1.0, 1.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0},
                                                {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 1.0}}),
               ValidationError);
}

TEST(InteractionBlocks, BoundsBracketOnRandomPureStates) {
  std::mt19937_64 gen(8);
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t ds = 2, dr = 2 + rep % 2;
    const auto joint = DensityMatrix::pure(testing::random_unit_vector(gen, ds * dr), {ds, dr});
    const Matrix u = random_unitary(gen, ds * dr);
    const auto blocks = interaction_blocks(joint, u);
    double trace = 0.0;
    double diag_purity = 0.0;
    for (std::size_t i = 0; i < dr; ++i) {
      trace += blocks.block(i, i).trace().real();
      diag_purity += trace_of_product(blocks.block(i, i), blocks.block(i, i)).real();
      for (std::size_t j = 0; j < dr; ++j)
        EXPECT_LE(max_abs_diff(blocks.block(j, i), blocks.block(i, j).adjoint()), 1e-9);
    }
    EXPECT_NEAR(trace, 1.0, 1e-9);
    const Matrix evolved = u * joint.matrix() * u.adjoint();
    EXPECT_LE(max_abs_diff(blocks.reduced_system(), partial_trace(evolved, {ds, dr}, Subsystem::A)), 1e-9);
    const double l = 1.0 - trace_of_product(blocks.reduced_system(), blocks.reduced_system()).real();
    const auto bounds = prop6_bounds(blocks, true);
    EXPECT_LE(bounds.lower, l + 1e-9);
    EXPECT_LE(l, *bounds.upper + 1e-9);
    EXPECT_NEAR(*bounds.upper, 1.0 - diag_purity, 1e-9);
  }
}

TEST(Weyl, OperatorsAreUnitaryAndDistinct) {
  for (std::size_t d : {2, 3, 4}) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = 0; c < d; ++c) EXPECT_LE(unitarity_defect(weyl_operator(d, a, c)), 1e-12);
    // Hilbert-Schmidt orthogonality: tr(W_k^dagger W_l) = d delta_kl.
    EXPECT_NEAR(std::abs(trace_of_product(weyl_operator(d, 1, 0).adjoint(), weyl_operator(d, 0, 1))), 0.0,
                1e-12);
  }
  EXPECT_LE(max_abs_diff(weyl_operator(2, 1, 0), testing::kPauliX), 1e-15);
  EXPECT_LE(max_abs_diff(weyl_operator(2, 0, 1), testing::kPauliZ), 1e-15);
}

TEST(Twirl, Examples) {
  std::mt19937_64 gen(9);
  const auto a = random_state(gen, 2);
  const auto b = random_state(gen, 3);
  const auto twirled = twirl_subsystem(tensor_product(a, b));
  EXPECT_LE(max_abs_diff(twirled.matrix(), tensor_product(a.matrix(), Matrix::identity(3) * (1.0 / 3.0))),
            1e-12);
  EXPECT_LE(max_abs_diff(twirl_subsystem(DensityMatrix::pure(kBell, {2, 2})).matrix(),
                         Matrix::identity(4) * 0.25),
            1e-12);
  EXPECT_THROW(twirl_subsystem(DensityMatrix::maximally_mixed(4)), ValidationError);
}

TEST(Twirl, KeepsMarginalAndCommutesWithLocalOperators) {
  std::mt19937_64 gen(10);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t da = 2 + rep % 2, db = 2 + rep % 3;
    const auto rho = random_state(gen, da * db, {da, db});
    const auto out = twirl_subsystem(rho);
    EXPECT_LE(max_abs_diff(reduced_state(out, Subsystem::A).matrix(),
                           reduced_state(rho, Subsystem::A).matrix()),
              1e-9);
    const Matrix local = tensor_product(Matrix::identity(da), testing::random_matrix(gen, db));
    EXPECT_LE(max_abs_diff(out.matrix() * local, local * out.matrix()), 1e-9);
  }
}

}  // namespace
}  // namespace logent
