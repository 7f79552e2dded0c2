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

// Seeded random states, unitaries, measurements and channels.

#include <cstdint>
#include <optional>
#include <vector>

#include "logent/channels.hpp"
#include "logent/linalg.hpp"
#include "logent/quantum.hpp"
#include "logent/rng.hpp"

namespace logent {

/// G G^dagger / tr(G G^dagger) for a dim x rank complex Gaussian G
/// (Hilbert-Schmidt measure when rank == dim).
DensityMatrix sample_density(CounterRng& rng, std::size_t dim,
                             std::optional<std::size_t> rank = std::nullopt,
                             std::vector<std::size_t> factors = {});
DensityMatrix sample_density(std::uint64_t seed, std::size_t dim,
                             std::optional<std::size_t> rank = std::nullopt);

/// Haar-random unitary: Gram-Schmidt on a complex Gaussian matrix, which
/// leaves the implied R factor with a positive real diagonal.
Matrix sample_unitary(CounterRng& rng, std::size_t dim);
Matrix sample_unitary(std::uint64_t seed, std::size_t dim);

/// Haar-random unit vector.
Vector sample_state_vector(CounterRng& rng, std::size_t dim);

/// Random composition of dim into positive parts.
std::vector<std::size_t> sample_grouping(CounterRng& rng, std::size_t dim);

/// PVM in a Haar-random basis; `groups` (summing to dim) coarsens it.
Pvm sample_pvm(CounterRng& rng, std::size_t dim, std::vector<std::size_t> groups = {});
Pvm sample_pvm(std::uint64_t seed, std::size_t dim, std::vector<std::size_t> groups = {});

/// Dirichlet-weighted mixture of 2-4 Haar unitaries.
UnitalChannel sample_unitary_mixture_channel(CounterRng& rng, std::size_t dim);
/// Dephasing in a random (possibly coarse) PVM.
UnitalChannel sample_dephasing_channel(CounterRng& rng, std::size_t dim);
/// E_i = S^{-1/2} G_i S^{-1/2} with G_i random PSD and S = sum G_i.
Povm sample_povm(CounterRng& rng, std::size_t dim, std::size_t outcomes);

}  // namespace logent
