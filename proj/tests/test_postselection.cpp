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

#include "logent/errors.hpp"
#include "logent/postselection.hpp"
#include "test_util.hpp"

namespace logent {
namespace {

const double kR = 1.0 / std::sqrt(2.0);
const Vector kZero{1.0, 0.0};
const Vector kOne{0.0, 1.0};
const Vector kPlus{kR, kR};
const Vector kPlusI{kR, Complex(0.0, kR)};

GeneralizedDensity state(const Vector& pre, const Vector& post) {
  return pre_post_state(PrePostPair::make(pre, post));
}

// <phi|B|psi> / <phi|psi>, computed entrywise.
Complex weak_value_oracle(const Vector& psi, const Vector& phi, const Matrix& b) {
  return inner(phi, b * psi) / inner(phi, psi);
}

void expect_complex_near(Complex a, Complex b, double tol) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(a.imag(), b.imag(), tol);
}

TEST(PrePostPair, Validation) {
  EXPECT_THROW(PrePostPair::make(kZero, kOne), OrthogonalSelection);
  EXPECT_THROW(PrePostPair::make(Vector{1.0, 1.0}, kZero), ValidationError);
  EXPECT_THROW(PrePostPair::make(kZero, Vector{1.0, 0.0, 0.0}), DimensionMismatch);
  const auto pair = PrePostPair::make(kPlus, kZero);
  expect_complex_near(pair.overlap(), kR, 1e-15);
}

TEST(PrePostState, Examples) {
  EXPECT_LE(max_abs_diff(state(kZero, kZero).matrix(), Matrix::projector(kZero)), 1e-15);
  const Matrix expected = Matrix::outer(kPlus, kZero) * std::sqrt(2.0);
  EXPECT_LE(max_abs_diff(state(kPlus, kZero).matrix(), expected), 1e-15);
  expect_complex_near(state(kPlus, kPlusI).matrix().trace(), 1.0, 1e-15);
}

TEST(WeakValues, Examples) {
  const Pvm comp = Pvm::computational(2);
  auto w = weak_values(state(kPlus, kZero), comp);
  expect_complex_near(w[0], 1.0, 1e-15);
  expect_complex_near(w[1], 0.0, 1e-15);

  w = weak_values(state(kPlus, kPlusI), comp);
  expect_complex_near(w[0], Complex(0.5, 0.5), 1e-12);
  expect_complex_near(w[1], Complex(0.5, -0.5), 1e-12);

  std::mt19937_64 gen(1);
  const Vector psi = testing::random_unit_vector(gen, 3);
  w = weak_values(state(psi, psi), Pvm::computational(3));
  for (std::size_t i = 0; i < 3; ++i) expect_complex_near(w[i], std::norm(psi[i]), 1e-12);

  EXPECT_THROW(weak_values(state(kPlus, kZero), Pvm::computational(3)), DimensionMismatch);
}

TEST(WeakValues, MatchOracleAndSumToOne) {
  std::mt19937_64 gen(2);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t d = 2 + rep % 4;
    const Vector psi = testing::random_unit_vector(gen, d);
    const Vector phi = testing::random_unit_vector(gen, d);
    const Matrix basis = hermitian_eig(testing::random_hermitian(gen, d)).eigenvectors;
    const Pvm pvm = Pvm::from_basis(basis, rep % 2 ? std::vector<std::size_t>{1, d - 1}
                                                   : std::vector<std::size_t>{});
    const auto rho = state(psi, phi);
    const auto w = weak_values(rho, pvm);
    Complex sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      expect_complex_near(w[i], weak_value_oracle(psi, phi, pvm.blocks()[i]), 1e-9);
      sum += w[i];
    }
    expect_complex_near(sum, 1.0, 1e-9);
    EXPECT_GE(postselected_logical_entropy(rho, pvm), -1e-12);
    EXPECT_NEAR(postselected_logical_entropy(rho, pvm), postselected_logical_entropy_product_form(rho, pvm),
                1e-9);
    if (pvm.non_degenerate()) {
      expect_complex_near(weak_logical_entropy(rho, pvm), weak_logical_entropy_trace_form(rho, pvm), 1e-9);
    }
  }
}

TEST(Abl, Examples) {
  const Pvm comp = Pvm::computational(2);
  auto abl = abl_probabilities(state(kZero, kZero), comp);
  EXPECT_NEAR(abl.raw[0], 1.0, 1e-15);
  EXPECT_NEAR(abl.raw[1], 0.0, 1e-15);
  abl = abl_probabilities(state(kPlus, kZero), comp);
  EXPECT_NEAR(abl.raw[0], 1.0, 1e-15);
  EXPECT_NEAR(abl.raw[1], 0.0, 1e-15);
  abl = abl_probabilities(state(kPlus, kPlusI), comp);
  EXPECT_NEAR(abl.raw[0], 0.5, 1e-12);
  EXPECT_NEAR(abl.raw[1], 0.5, 1e-12);
  EXPECT_NEAR(abl.normalized[0], 0.5, 1e-12);
}

TEST(Abl, RawNeedNotSumToOne) {
  // psi = |+>, phi close to |->: weak values blow up, raw ABL sum exceeds 1.
  const double t = 0.1;
  const Vector phi{std::cos(M_PI / 4 + t) , -std::sin(M_PI / 4 + t)};
  const auto abl = abl_probabilities(state(kPlus, phi), Pvm::computational(2));
  EXPECT_GT(abl.raw[0] + abl.raw[1], 1.0);
  EXPECT_NEAR(abl.normalized[0] + abl.normalized[1], 1.0, 1e-12);
}

TEST(PostselectedEntropy, Examples) {
  const Pvm comp = Pvm::computational(2);
  EXPECT_NEAR(postselected_logical_entropy(state(kZero, kZero), comp), 0.0, 1e-12);
  EXPECT_NEAR(postselected_logical_entropy(state(kPlus, kZero), comp), 0.0, 1e-12);
  EXPECT_NEAR(postselected_logical_entropy(state(kPlus, kPlusI), comp), 0.5, 1e-12);
}

TEST(PostselectedEntropy, ZeroWhenBasisContainsEitherVector) {
  std::mt19937_64 gen(3);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const Vector psi = testing::random_unit_vector(gen, d);
    const Vector phi = testing::random_unit_vector(gen, d);
    const Vector& member = rep % 2 ? psi : phi;
    // Gram-Schmidt starting from |member>, then random vectors.
    Matrix basis(d);
    for (std::size_t j = 0; j < d; ++j) {
      Vector c = j == 0 ? member : testing::random_unit_vector(gen, d);
      for (std::size_t k = 0; k < j; ++k) {
        const Vector prev = basis.column(k);
        const Complex ov = inner(prev, c);
        for (std::size_t i = 0; i < d; ++i) c[i] -= ov * prev[i];
      }
      const double n = norm(c);
      for (std::size_t i = 0; i < d; ++i) basis(i, j) = c[i] / n;
    }
    const Pvm pvm = Pvm::from_basis(basis);
    EXPECT_NEAR(postselected_logical_entropy(state(psi, phi), pvm), 0.0, 1e-12);
  }
}

TEST(WeakEntropy, Examples) {
  const Pvm comp = Pvm::computational(2);
  expect_complex_near(weak_logical_entropy(state(kPlus, kZero), comp), 0.0, 1e-12);
  expect_complex_near(weak_logical_entropy(state(kPlus, kPlusI), comp), 1.0, 1e-12);
}

TEST(WeakEntropy, EqualSelectionsGiveOrdinaryEntropy) {
  std::mt19937_64 gen(4);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t d = 2 + rep % 4;
    const Vector psi = testing::random_unit_vector(gen, d);
    const Pvm pvm = Pvm::from_basis(hermitian_eig(testing::random_hermitian(gen, d)).eigenvectors);
    const Complex lw = weak_logical_entropy(state(psi, psi), pvm);
    EXPECT_NEAR(lw.imag(), 0.0, 1e-9);
    EXPECT_NEAR(lw.real(), pvm_logical_entropy(DensityMatrix::pure(psi), pvm), 1e-9);
  }
}

TEST(RelationDiagnostic, Examples) {
  const Pvm comp = Pvm::computational(2);
  auto r = relation_diagnostic(state(kZero, kZero), comp);
  EXPECT_TRUE(r.agree);
  EXPECT_NEAR(r.postselected, 0.0, 1e-12);
  r = relation_diagnostic(state(kPlus, kZero), comp);
  EXPECT_TRUE(r.agree);
  r = relation_diagnostic(state(kPlus, kPlusI), comp);
  EXPECT_FALSE(r.agree);
  EXPECT_NEAR(r.postselected, 0.5, 1e-12);
  EXPECT_NEAR(r.weak_modulus_squared, 1.0, 1e-12);
  EXPECT_NEAR(r.abs_difference, 0.5, 1e-12);
}

TEST(RelationDiagnostic, EqualSelectionsInGenericBasisDisagree) {
  // psi = phi = |+> measured in the computational basis: w = (1/2, 1/2), so
  // L_pi = 1/8 while |L_pi^w|^2 = 1/4.
  const auto r = relation_diagnostic(state(kPlus, kPlus), Pvm::computational(2));
  EXPECT_NEAR(r.postselected, 0.125, 1e-12);
  EXPECT_NEAR(r.weak_modulus_squared, 0.25, 1e-12);
  EXPECT_FALSE(r.agree);
}

}  // namespace
}  // namespace logent
