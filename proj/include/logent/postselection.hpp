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

// Pre- and post-selected systems: the generalised density matrix
// |psi><phi| / <phi|psi>, weak values of PVM blocks, and the two logical
// entropies built from them.

#include <vector>

#include "logent/linalg.hpp"
#include "logent/quantum.hpp"

namespace logent {

inline constexpr double kMinSelectionOverlap = 1e-12;

class PrePostPair {
 public:
  /// Both vectors unit-norm within 1e-9 and |<phi|psi>| > 1e-12; the latter
  /// throws OrthogonalSelection.
  static PrePostPair make(Vector pre, Vector post);

  const Vector& pre() const { return pre_; }
  const Vector& post() const { return post_; }
  /// <phi|psi>
  Complex overlap() const { return overlap_; }
  std::size_t dim() const { return pre_.size(); }

 private:
  PrePostPair(Vector pre, Vector post, Complex overlap)
      : pre_(std::move(pre)), post_(std::move(post)), overlap_(overlap) {}

  Vector pre_;
  Vector post_;
  Complex overlap_;
};

/// Rank-one, unit-trace, generally non-Hermitian.
class GeneralizedDensity {
 public:
  const Matrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.dim(); }

 private:
  friend GeneralizedDensity pre_post_state(const PrePostPair&);
  explicit GeneralizedDensity(Matrix m) : mat_(std::move(m)) {}
  Matrix mat_;
};

GeneralizedDensity pre_post_state(const PrePostPair& pair);

/// w_i = tr(B_i rho); they sum to 1.
std::vector<Complex> weak_values(const GeneralizedDensity& rho, const Pvm& pvm);

struct AblProbabilities {
  std::vector<double> raw;         // |w_i|^2 as written, need not sum to 1
  std::vector<double> normalized;  // raw / sum(raw)
};

AblProbabilities abl_probabilities(const GeneralizedDensity& rho, const Pvm& pvm);

/// sum_i |w_i|^2 |1 - w_i|^2; non-negative.
double postselected_logical_entropy(const GeneralizedDensity& rho, const Pvm& pvm);
/// The same sum written as sum_i |w_i (1 - w_i)|^2.
double postselected_logical_entropy_product_form(const GeneralizedDensity& rho, const Pvm& pvm);

/// sum_i w_i (1 - w_i); complex in general.
Complex weak_logical_entropy(const GeneralizedDensity& rho, const Pvm& pvm);
/// tr[rho' (I - rho')] with rho' = sum_i B_i rho B_i.
Complex weak_logical_entropy_trace_form(const GeneralizedDensity& rho, const Pvm& pvm);

struct RelationDiagnostic {
  double postselected = 0.0;         // L_pi
  double weak_modulus_squared = 0.0; // |L_pi^w|^2
  double abs_difference = 0.0;
  bool agree = false;
};

/// Compares L_pi against |L_pi^w|^2 at `tolerance`. Reports; never throws on
/// disagreement.
RelationDiagnostic relation_diagnostic(const GeneralizedDensity& rho, const Pvm& pvm,
                                       double tolerance = tol::kEquality);

}  // namespace logent
