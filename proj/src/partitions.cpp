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

#include "logent/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logent/errors.hpp"
#include "logent/rng.hpp"

namespace logent {

namespace {

constexpr std::uint64_t kTwoDrawStream = 0x7D15;
constexpr double kProbTol = 1e-9;

double uniform_at(const CounterRng& rng, std::uint64_t index) {
  return static_cast<double>(rng.at(index) >> 11) * 0x1.0p-53;
}

}  // namespace

SetPartition SetPartition::from_labels(std::span<const std::size_t> labels) {
  if (labels.empty()) throw ValidationError("SetPartition: universe must be non-empty");
  std::vector<std::size_t> out(labels.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // raw label -> block
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& kv) { return kv.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], seen.size());
      out[i] = seen.size() - 1;
    } else {
      out[i] = it->second;
    }
  }
  return SetPartition(std::move(out), seen.size());
}

SetPartition SetPartition::from_blocks(std::size_t n,
                                       const std::vector<std::vector<std::size_t>>& blocks) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(n, kUnassigned);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ValidationError("SetPartition: empty block");
    for (auto e : blocks[b]) {
      if (e >= n) throw ValidationError("SetPartition: element " + std::to_string(e) + " >= n");
      if (labels[e] != kUnassigned) {
        throw ValidationError("SetPartition: element " + std::to_string(e) + " in two blocks");
      }
      labels[e] = b;
    }
  }
  if (std::find(labels.begin(), labels.end(), kUnassigned) != labels.end()) {
    throw ValidationError("SetPartition: blocks do not cover the universe");
  }
  return from_labels(labels);
}

SetPartition SetPartition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return from_labels(labels);
}

SetPartition SetPartition::indiscrete(std::size_t n) {
  std::vector<std::size_t> labels(n, 0);
  return from_labels(labels);
}

std::vector<std::size_t> SetPartition::block_sizes() const {
  std::vector<std::size_t> sizes(block_count_, 0);
  for (auto b : block_of_) ++sizes[b];
  return sizes;
}

std::vector<std::vector<std::size_t>> SetPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < block_of_.size(); ++i) out[block_of_[i]].push_back(i);
  return out;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.universe_size() != universe_size()) return false;
  // Same block here must imply same block there.
  const std::size_t n = universe_size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (block_of_[u] == block_of_[v] && coarser.block_of_[u] != coarser.block_of_[v])
        return false;
  return true;
}

ProbabilityVector ProbabilityVector::from(std::vector<double> probs) {
  if (probs.empty()) throw ValidationError("ProbabilityVector: empty");
  double total = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0 + kProbTol) {
      throw ValidationError("ProbabilityVector: entry " + std::to_string(p) +
                            " outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kProbTol) {
    throw ValidationError("ProbabilityVector: entries sum to " + std::to_string(total));
  }
  return ProbabilityVector(std::move(probs));
}

ProbabilityVector ProbabilityVector::from_outcomes(std::vector<double> probs) {
  double total = 0.0;
  for (double& p : probs) {
    if (p < 0.0 && p >= -kProbTol) p = 0.0;
    total += p;
  }
  if (total > 0.0 && std::abs(total - 1.0) <= kProbTol) {
    for (double& p : probs) p /= total;
  }
  return from(std::move(probs));
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  if (n == 0) throw ValidationError("ProbabilityVector: empty");
  return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::uint64_t dit_count(const SetPartition& p) {
  const std::uint64_t n = p.universe_size();
  std::uint64_t same = 0;
  for (auto s : p.block_sizes()) same += static_cast<std::uint64_t>(s) * s;
  return n * n - same;
}

double partition_logical_entropy(const SetPartition& p) {
  const double n = static_cast<double>(p.universe_size());
  return static_cast<double>(dit_count(p)) / (n * n);
}

double partition_logical_entropy(const SetPartition& p, const ProbabilityVector& element_probs) {
  if (element_probs.size() != p.universe_size()) {
    throw DimensionMismatch("partition_logical_entropy: one probability per element required");
  }
  std::vector<double> mass(p.block_count(), 0.0);
  for (std::size_t i = 0; i < p.universe_size(); ++i) mass[p.block_of(i)] += element_probs[i];
  return distribution_logical_entropy(ProbabilityVector::from_outcomes(std::move(mass)));
}

double distribution_logical_entropy(const ProbabilityVector& p) {
  double collision = 0.0;
  for (double x : p.probs()) collision += x * x;
  // Rounding can push the collision mass a hair above 1.
  return std::max(0.0, 1.0 - collision);
}

std::size_t sample_categorical(std::span<const double> cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) return cdf.size() - 1;
  return static_cast<std::size_t>(it - cdf.begin());
}

double two_draw_distinction_mc(const ProbabilityVector& p, std::uint64_t trials,
                               std::uint64_t seed) {
  if (trials == 0) throw ValidationError("two_draw_distinction_mc: trials must be >= 1");
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  // Zero-probability tail outcomes must never be drawn.
  std::size_t last = p.size();
  while (last > 1 && p[last - 1] == 0.0) --last;
  for (std::size_t i = last - 1; i < p.size(); ++i) cdf[i] = 2.0;

  const CounterRng rng(seed, {kTwoDrawStream});
  std::uint64_t distinct = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto a = sample_categorical(cdf, uniform_at(rng, 2 * t));
    const auto b = sample_categorical(cdf, uniform_at(rng, 2 * t + 1));
    if (a != b) ++distinct;
  }
  return static_cast<double>(distinct) / static_cast<double>(trials);
}

}  // namespace logent
