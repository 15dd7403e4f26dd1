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
#include <optional>
#include <vector>

#include "athermal/core.hpp"

namespace athermal {

// Extended-real orders: pass +/-kUnbounded for alpha = +/-infinity.
// Unbounded results are returned as +/-kUnbounded.

/// log n - S_alpha(x || uniform).
double renyi_entropy(const ProbVec& x, double alpha);

/// y must be strictly positive.
double renyi_divergence(const ProbVec& x, const ProbVec& y, double alpha);

/// -kT log Z + kT S_alpha(x || g). Rejects beta = 0.
double free_energy_alpha(const ProbVec& x, const GibbsContext& ctx, double alpha);

/// kT S_1(g || x) - kT log Z.
double burg_free_energy(const ProbVec& x, const GibbsContext& ctx);

std::vector<double> default_alpha_grid();

struct LawViolation {
  std::optional<double> alpha;  // empty for the Burg entry
  double delta;                 // F(x) - F(y)
};

struct SecondLawsVerdict {
  bool passed = true;
  std::vector<LawViolation> violations;
  std::vector<double> alpha_grid;
  bool burg_included = false;
  std::size_t strict_count = 0;  // F(x) > F(y) + eps
  std::size_t tie_count = 0;     // |F(x) - F(y)| <= eps
};

SecondLawsVerdict second_laws_check(const ProbVec& x, const ProbVec& y, const GibbsContext& ctx,
                                    const std::vector<double>& alpha_grid = default_alpha_grid(),
                                    bool include_burg = true, double eps = tol::kOrder);

}  // namespace athermal
