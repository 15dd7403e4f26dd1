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

#include "athermal/core.hpp"

namespace athermal {

inline constexpr double kSupportThreshold = 1e-12;

/// -kT log of the Gibbs weight on the support of x.
double w_det(const ProbVec& x, const GibbsContext& ctx, double tau = kSupportThreshold);

/// kT log max_i x_i / g_i.
double w_for(const ProbVec& x, const GibbsContext& ctx);

/// kT S_1(x || g), reported only as a reference number.
double average_work_reference(const ProbVec& x, const GibbsContext& ctx);

/// System joined with a two-level battery of gap W, sorted jointly.
struct BatteryJoint {
  GibbsContext ctx;
  ProbVec state;
};

/// y (x) |0> when excited is false, y (x) |1> otherwise.
BatteryJoint battery_joint(const ProbVec& y, const GibbsContext& ctx, double W, bool excited);

/// Throws std::logic_error if the excited curve is not the compressed ground curve.
PLCurve battery_rescaled_curve(const ProbVec& y, const GibbsContext& ctx, double W, bool excited);

/// Largest W with x (x) |0> thermo-majorizing g (x) |1>, by bisection.
double w_det_geometric_oracle(const ProbVec& x, const GibbsContext& ctx);

/// Smallest W with g (x) |1> thermo-majorizing x (x) |0>, by bisection.
double w_for_geometric_oracle(const ProbVec& x, const GibbsContext& ctx);

}  // namespace athermal
