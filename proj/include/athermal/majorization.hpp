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
#include <vector>

#include "athermal/core.hpp"

namespace athermal {

/// Mixes coordinates i and j: (w_i, w_j) -> (t w_i + (1-t) w_j, (1-t) w_i + t w_j).
struct TTransform {
  std::size_t i;
  std::size_t j;
  double t;

  void apply(std::vector<double>& w) const;
};

/// Composed map B = Pi * T_k ... T_1.
/// placement[a] is the output coordinate receiving coordinate a after the chain.
struct HlpPlan {
  std::vector<TTransform> transforms;
  std::vector<std::size_t> placement;

  std::vector<double> apply(std::vector<double> w) const;
  RealMatrix matrix() const;
};

PLCurve lorenz_curve(const ProbVec& x);

bool majorizes(const ProbVec& x, const ProbVec& y, double eps = tol::kOrder);

/// Throws OrderingError unless majorizes(x, y, eps).
HlpPlan hlp_construct(const ProbVec& x, const ProbVec& y, double eps = tol::kOrder);

/// (log n - H(x)) / (log n - H(y)); throws UnreachableError when y is uniform.
double asymptotic_rate(const ProbVec& x, const ProbVec& y);

double shannon_entropy(const ProbVec& x);

}  // namespace athermal
