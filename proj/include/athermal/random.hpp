// Copyright 2026 The athermal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <random>

#include "athermal/coherence.hpp"
#include "athermal/core.hpp"

namespace athermal {

using Rng = std::mt19937_64;

/// Flat Dirichlet sample; `zeros` entries (chosen at random) are set to 0.
ProbVec random_prob_vec(std::size_t n, Rng& rng, std::size_t zeros = 0);

/// Sorted energies uniform in [lo, hi].
EnergySpectrum random_spectrum(std::size_t n, Rng& rng, double lo = 0.0, double hi = 3.0);

/// Normalized Wishart state of the given rank (0 means full rank).
DensityMatrix random_density_matrix(std::size_t n, Rng& rng, std::size_t rank = 0);

/// Sinkhorn-balanced coupling with marginals (g, g), divided by g column-wise.
StochasticMatrix random_gibbs_stochastic(const ProbVec& g, Rng& rng);

/// Single-mode Kraus operators normalized to trace preservation.
QuantumChannel random_covariant_channel(const EnergySpectrum& spectrum, Rng& rng,
                                        std::size_t n_kraus = 4);

}  // namespace athermal
