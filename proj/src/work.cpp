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

#include "athermal/work.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "athermal/divergences.hpp"
#include "athermal/thermo.hpp"

namespace athermal {

namespace {

constexpr double kOracleEps = 1e-14;
constexpr double kOracleWidth = 1e-12;

void require_positive_beta(const GibbsContext& ctx) {
  if (!(ctx.beta() > 0.0)) throw InvalidInput("work quantities need beta > 0");
}

// Joint (system, battery) ordering by energy, stable in (i, b).
struct JointLayout {
  std::vector<double> energies;
  std::vector<std::size_t> sys;
  std::vector<int> level;
};

JointLayout joint_layout(const GibbsContext& ctx, double W) {
  if (!std::isfinite(W) || W < 0.0) throw InvalidInput("battery gap must be finite and >= 0");
  const std::size_t n = ctx.size();
  std::vector<std::size_t> idx(2 * n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto energy = [&](std::size_t k) { return ctx.spectrum()[k / 2] + (k % 2 == 1 ? W : 0.0); };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return energy(a) < energy(b); });
  JointLayout out;
  for (std::size_t k : idx) {
    out.energies.push_back(energy(k));
    out.sys.push_back(k / 2);
    out.level.push_back(static_cast<int>(k % 2));
  }
  return out;
}

ProbVec joint_state(const JointLayout& lay, const ProbVec& y, bool excited) {
  std::vector<double> v(lay.sys.size(), 0.0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (lay.level[k] == (excited ? 1 : 0)) v[k] = y[lay.sys[k]];
  }
  return ProbVec(std::move(v));
}

}  // namespace

double w_det(const ProbVec& x, const GibbsContext& ctx, double tau) {
  require_same_size(x.size(), ctx.size(), "state and context");
  require_positive_beta(ctx);
  double s = 0.0;
  bool full = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > tau) s += ctx.gibbs()[i];
    else full = false;
  }
  if (full) return 0.0;
  return -ctx.kT() * std::log(s);
}

double w_for(const ProbVec& x, const GibbsContext& ctx) {
  require_same_size(x.size(), ctx.size(), "state and context");
  require_positive_beta(ctx);
  return ctx.kT() * renyi_divergence(x, ctx.gibbs(), kUnbounded);
}

double average_work_reference(const ProbVec& x, const GibbsContext& ctx) {
  require_same_size(x.size(), ctx.size(), "state and context");
  require_positive_beta(ctx);
  return ctx.kT() * renyi_divergence(x, ctx.gibbs(), 1.0);
}

BatteryJoint battery_joint(const ProbVec& y, const GibbsContext& ctx, double W, bool excited) {
  require_same_size(y.size(), ctx.size(), "state and context");
  const JointLayout lay = joint_layout(ctx, W);
  return BatteryJoint{GibbsContext(EnergySpectrum(lay.energies), ctx.beta()), joint_state(lay, y, excited)};
}

PLCurve battery_rescaled_curve(const ProbVec& y, const GibbsContext& ctx, double W, bool excited) {
  require_same_size(y.size(), ctx.size(), "state and context");
  const JointLayout lay = joint_layout(ctx, W);
  const GibbsContext joint(EnergySpectrum(lay.energies), ctx.beta());
  const PLCurve ground = thermo_curve(joint_state(lay, y, false), joint);
  const PLCurve raised = thermo_curve(joint_state(lay, y, true), joint);
  const PLCurve compressed = ground.scaled_x(std::exp(-ctx.beta() * W));
  if (!curve_dominates(raised, compressed, tol::kIdentity) ||
      !curve_dominates(compressed, raised, tol::kIdentity)) {
    throw std::logic_error("battery rescaling identity violated");
  }
  return excited ? raised : ground;
}

double w_det_geometric_oracle(const ProbVec& x, const GibbsContext& ctx) {
  require_same_size(x.size(), ctx.size(), "state and context");
  require_positive_beta(ctx);
  auto holds = [&](double W) {
    const JointLayout lay = joint_layout(ctx, W);
    const GibbsContext joint(EnergySpectrum(lay.energies), ctx.beta());
    return thermo_majorizes(joint_state(lay, x, false), joint_state(lay, ctx.gibbs(), true), joint,
                            kOracleEps);
  };
  double lo = 0.0;
  double hi = ctx.kT();
  while (holds(hi)) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > kOracleWidth * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? lo : hi) = mid;
  }
  return lo;
}

double w_for_geometric_oracle(const ProbVec& x, const GibbsContext& ctx) {
  require_same_size(x.size(), ctx.size(), "state and context");
  require_positive_beta(ctx);
  auto holds = [&](double W) {
    const JointLayout lay = joint_layout(ctx, W);
    const GibbsContext joint(EnergySpectrum(lay.energies), ctx.beta());
    return thermo_majorizes(joint_state(lay, ctx.gibbs(), true), joint_state(lay, x, false), joint,
                            kOracleEps);
  };
  if (holds(0.0)) return 0.0;
  double lo = 0.0;
  double hi = ctx.kT();
  while (!holds(hi)) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > kOracleWidth * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace athermal
