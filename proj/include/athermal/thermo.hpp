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
#include <cstdint>
#include <vector>

#include "athermal/core.hpp"

namespace athermal {

inline constexpr std::int64_t kDefaultDenominatorCap = 10000;

struct BetaOrder {
  std::vector<std::size_t> perm;  // zero-based
};

struct EmbeddingSpec {
  std::vector<std::int64_t> d;
  std::int64_t D = 0;
  double approx_error = 0.0;

  ProbVec rational_gibbs() const;
};

/// Stable sort of x_i / g_i, non-increasing.
BetaOrder beta_order(const ProbVec& x, const GibbsContext& ctx);

PLCurve thermo_curve(const ProbVec& x, const GibbsContext& ctx);

bool thermo_majorizes(const ProbVec& x, const ProbVec& y, const GibbsContext& ctx,
                      double eps = tol::kOrder);

EmbeddingSpec rationalize(const ProbVec& g, std::int64_t d_max);
EmbeddingSpec rationalize(const GibbsContext& ctx, std::int64_t d_max);

ProbVec embed(const ProbVec& x, const EmbeddingSpec& spec);
ProbVec unembed(const ProbVec& p, const EmbeddingSpec& spec);

StochasticMatrix construct_gibbs_stochastic(const ProbVec& x, const ProbVec& y,
                                            const GibbsContext& ctx,
                                            std::int64_t d_max = kDefaultDenominatorCap,
                                            double eps = tol::kOrder);

/// Phase-1 simplex on G >= 0 with column sums 1, Gx = y, Gg = g.
bool feasibility_lp_oracle(const ProbVec& x, const ProbVec& y, const ProbVec& g);

struct BathSimulation {
  StochasticMatrix induced;
  std::vector<std::int64_t> degeneracies;
  std::vector<std::vector<std::int64_t>> counts;  // counts[i][j] = n_{i|j}
  double residual;
};

BathSimulation bath_model_simulate(const StochasticMatrix& target, const GibbsContext& ctx,
                                   std::int64_t gE);

}  // namespace athermal
