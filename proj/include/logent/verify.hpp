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

// Randomised verification of the logical-entropy propositions.
//
// Every trial draws from its own counter-based stream keyed by
// (seed, proposition, dim, trial), so results are independent of thread count
// and any single trial can be replayed from those four numbers.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logent/linalg.hpp"
#include "logent/quantum.hpp"

namespace logent {

enum class Proposition {
  kNonNegative,          // 1a
  kMaximum,              // 1b
  kPureMarginals,        // 1c
  kProductIdentity,      // 1d
  kSubadditivity,        // 2
  kFirmSubadditivity,    // 3
  kTriangle,             // 4
  kUnitalMonotone,       // 5
  kInteractionBounds,    // 6
  kClassicalMixture,     // 7
  kDivergenceNonNeg,     // 8
  kConcavity,            // 9
  kJointConvexity,       // 10
  kRelativeConcavity,    // 11
  kDivergenceMonotone,   // 12
  kStrongSubadditivity,  // "ssa": expected to fail
};

std::string_view proposition_id(Proposition p);
std::optional<Proposition> parse_proposition(std::string_view id);
/// 1a through 12, in order. Strong subadditivity is requested separately.
std::vector<Proposition> all_propositions();

struct SamplerConfig {
  std::uint64_t seed = 42;
  std::uint64_t trials = 1000;
  std::vector<std::size_t> dims{2, 3, 4};
  double tolerance = 1e-9;
  unsigned threads = 1;

  /// Throws ValidationError unless trials >= 1, dims non-empty, every dim >= 2
  /// and tolerance >= 0.
  void validate() const;
};

enum class Status { kVerified, kViolated, kCounterexampleFound, kNoCounterexample };

std::string_view status_name(Status s);

struct TrialFailure {
  std::size_t dim = 0;
  std::uint64_t trial = 0;
  double excess = 0.0;
  std::string error;  // set when the trial threw instead of violating
};

struct SsaWitness {
  Matrix state;  // 2x2x2 density matrix
  std::uint64_t trial = 0;
  double gap = 0.0;             // L(ABC) + L(B) - L(AB) - L(BC)
  double recomputed_gap = 0.0;  // independent recomputation
};

struct PropositionResult {
  Proposition id = Proposition::kNonNegative;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims;
  std::uint64_t trials_run = 0;
  std::uint64_t checks = 0;
  std::uint64_t failure_count = 0;
  // Largest (lhs - rhs) over every inequality check, |lhs - rhs| for
  // equalities. Logged even when within tolerance.
  double max_excess = 0.0;
  double tolerance = 0.0;
  std::vector<TrialFailure> failures;  // first kMaxReportedFailures by (dim, trial)
  std::vector<std::pair<std::string, std::uint64_t>> counters;
  Status status = Status::kVerified;
  std::string note;
  std::optional<SsaWitness> witness;

  bool expected() const {
    return status == Status::kVerified || status == Status::kCounterexampleFound;
  }
};

inline constexpr std::size_t kMaxReportedFailures = 16;

struct TrialOutcome {
  double excess = -1e300;
  bool failed = false;
  std::uint64_t checks = 0;
  std::vector<std::pair<std::string, std::uint64_t>> counters;
  std::string error;
};

PropositionResult verify_proposition(Proposition id, const SamplerConfig& cfg);

/// Re-run a single trial of verify_proposition.
TrialOutcome replay_trial(Proposition id, std::uint64_t seed, std::size_t dim,
                          std::uint64_t trial, double tolerance);

/// L(ABC) + L(B) - L(AB) - L(BC) for a state with three factors.
double strong_subadditivity_gap(const DensityMatrix& rho_abc);

/// Same quantity from raw entries of a 2x2x2 matrix by explicit index sums,
/// sharing no code with the partial-trace path.
double strong_subadditivity_gap_direct(const Matrix& rho_abc);

inline constexpr double kSsaMinViolation = 1e-6;

/// Searches 2x2x2 states (structured GHZ/W families plus cfg.trials random
/// low-rank draws) for a strong-subadditivity violation above 1e-6.
PropositionResult strong_subadditivity_search(const SamplerConfig& cfg);

/// Distinct-outcome fraction over `trials` pairs of independent PVM
/// measurements on copies of rho.
double two_draw_quantum_mc(const DensityMatrix& rho, const Pvm& pvm, std::uint64_t trials,
                           std::uint64_t seed);

}  // namespace logent
