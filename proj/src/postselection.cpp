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

#include "logent/postselection.hpp"

#include <cmath>
#include <string>

#include "logent/errors.hpp"

namespace logent {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kAblFloor = 1e-15;

void require_dim(const GeneralizedDensity& rho, const Pvm& pvm) {
  if (rho.dim() != pvm.dim()) {
    throw DimensionMismatch("post-selection: state dim " + std::to_string(rho.dim()) +
                            " vs PVM dim " + std::to_string(pvm.dim()));
  }
}

}  // namespace

PrePostPair PrePostPair::make(Vector pre, Vector post) {
  if (pre.empty() || pre.size() != post.size()) {
    throw DimensionMismatch("PrePostPair: pre and post vectors differ in size");
  }
  if (std::abs(norm(pre) - 1.0) > kNormTol) throw ValidationError("PrePostPair: |psi| != 1");
  if (std::abs(norm(post) - 1.0) > kNormTol) throw ValidationError("PrePostPair: |phi| != 1");
  const Complex overlap = inner(post, pre);
  if (std::abs(overlap) <= kMinSelectionOverlap) {
    throw OrthogonalSelection("pre- and post-selected states are orthogonal (|<phi|psi>| = " +
                              std::to_string(std::abs(overlap)) + ")");
  }
  return PrePostPair(std::move(pre), std::move(post), overlap);
}

GeneralizedDensity pre_post_state(const PrePostPair& pair) {
  Matrix m = Matrix::outer(pair.pre(), pair.post());
  m *= 1.0 / pair.overlap();
  return GeneralizedDensity(std::move(m));
}

std::vector<Complex> weak_values(const GeneralizedDensity& rho, const Pvm& pvm) {
  require_dim(rho, pvm);
  std::vector<Complex> w;
  w.reserve(pvm.size());
  for (const auto& b : pvm.blocks()) w.push_back(trace_of_product(b, rho.matrix()));
  return w;
}

AblProbabilities abl_probabilities(const GeneralizedDensity& rho, const Pvm& pvm) {
  AblProbabilities out;
  double total = 0.0;
  for (const auto& w : weak_values(rho, pvm)) {
    out.raw.push_back(std::norm(w));
    total += out.raw.back();
  }
  if (total < kAblFloor) {
    throw ValidationError("abl_probabilities: all weak values vanish (corrupted input)");
  }
  for (double r : out.raw) out.normalized.push_back(r / total);
  return out;
}

double postselected_logical_entropy(const GeneralizedDensity& rho, const Pvm& pvm) {
  double sum = 0.0;
  for (const auto& w : weak_values(rho, pvm)) sum += std::norm(w) * std::norm(1.0 - w);
  return sum;
}

double postselected_logical_entropy_product_form(const GeneralizedDensity& rho, const Pvm& pvm) {
  double sum = 0.0;
  for (const auto& w : weak_values(rho, pvm)) sum += std::norm(w * (1.0 - w));
  return sum;
}

Complex weak_logical_entropy(const GeneralizedDensity& rho, const Pvm& pvm) {
  Complex sum = 0.0;
  for (const auto& w : weak_values(rho, pvm)) sum += w * (1.0 - w);
  return sum;
}

Complex weak_logical_entropy_trace_form(const GeneralizedDensity& rho, const Pvm& pvm) {
  require_dim(rho, pvm);
  Matrix measured(rho.dim());
  for (const auto& b : pvm.blocks()) measured += b * rho.matrix() * b;
  return measured.trace() - trace_of_product(measured, measured);
}

RelationDiagnostic relation_diagnostic(const GeneralizedDensity& rho, const Pvm& pvm,
                                       double tolerance) {
  RelationDiagnostic out;
  out.postselected = postselected_logical_entropy(rho, pvm);
  out.weak_modulus_squared = std::norm(weak_logical_entropy(rho, pvm));
  out.abs_difference = std::abs(out.postselected - out.weak_modulus_squared);
  out.agree = out.abs_difference <= tolerance;
  return out;
}

}  // namespace logent
