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

// Logical entropy of classical set partitions and finite distributions.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace logent {

/// Partition of {0, ..., n-1}, stored as an element -> block map with block
/// labels normalised by first occurrence (element 0 is always in block 0).
class SetPartition {
 public:
  /// Any labelling works; labels are renumbered by first occurrence.
  static SetPartition from_labels(std::span<const std::size_t> labels);
  /// Blocks must be non-empty, disjoint, and cover 0..n-1.
  static SetPartition from_blocks(std::size_t n,
                                  const std::vector<std::vector<std::size_t>>& blocks);
  static SetPartition discrete(std::size_t n);
  static SetPartition indiscrete(std::size_t n);

  std::size_t universe_size() const { return block_of_.size(); }
  std::size_t block_count() const { return block_count_; }
  std::size_t block_of(std::size_t element) const { return block_of_.at(element); }
  std::span<const std::size_t> labels() const { return block_of_; }
  std::vector<std::size_t> block_sizes() const;
  std::vector<std::vector<std::size_t>> blocks() const;

  /// True iff every block of *this lies inside a block of `coarser`.
  bool refines(const SetPartition& coarser) const;

  bool operator==(const SetPartition&) const = default;

 private:
  explicit SetPartition(std::vector<std::size_t> normalised, std::size_t blocks)
      : block_of_(std::move(normalised)), block_count_(blocks) {}

  std::vector<std::size_t> block_of_;
  std::size_t block_count_ = 0;
};

class ProbabilityVector {
 public:
  /// Entries must lie in [0, 1] and sum to 1 within 1e-9.
  static ProbabilityVector from(std::vector<double> probs);
  /// For computed outcome statistics: entries in [-1e-9, 0) are clamped to 0
  /// and the vector is renormalised; the remaining checks are as in from().
  static ProbabilityVector from_outcomes(std::vector<double> probs);
  static ProbabilityVector uniform(std::size_t n);

  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  explicit ProbabilityVector(std::vector<double> p) : probs_(std::move(p)) {}
  std::vector<double> probs_;
};

/// |{(u, u') : u and u' in different blocks}| = n^2 - sum |B|^2.
std::uint64_t dit_count(const SetPartition& p);

/// dit_count / n^2.
double partition_logical_entropy(const SetPartition& p);

/// Logical entropy of the block masses when element k carries probability
/// element_probs[k]. With uniform weights this is the unweighted entropy.
double partition_logical_entropy(const SetPartition& p, const ProbabilityVector& element_probs);

/// 1 - sum p_i^2.
double distribution_logical_entropy(const ProbabilityVector& p);

/// Smallest index i with u < cdf[i]; the last index if rounding leaves u
/// above the final cumulative value.
std::size_t sample_categorical(std::span<const double> cdf, double u);

/// Fraction of `trials` independent draw pairs from p that land on different
/// outcomes. Draw pair t uses counter positions 2t and 2t+1 of the stream
/// keyed by `seed`, so the estimate does not depend on batching.
double two_draw_distinction_mc(const ProbabilityVector& p, std::uint64_t trials,
                               std::uint64_t seed);

}  // namespace logent
