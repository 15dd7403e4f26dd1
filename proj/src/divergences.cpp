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

#include "athermal/divergences.hpp"

#include <algorithm>
#include <cmath>

namespace athermal {

namespace {

void require_positive(const ProbVec& y) {
  for (double v : y) {
    if (!(v > 0.0)) throw InvalidInput("reference distribution must be strictly positive");
  }
}

double kl(const ProbVec& x, const ProbVec& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) s += x[i] * (std::log(x[i]) - std::log(y[i]));
  }
  return s;
}

double max_log_ratio(const ProbVec& x, const ProbVec& y) {
  double m = -kUnbounded;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) m = std::max(m, std::log(x[i]) - std::log(y[i]));
  }
  return m;
}

// Outcome of comparing F(x) against F(y); +inf against +inf counts as a tie.
enum class Cmp { kViolation, kStrict, kTie };

Cmp compare(double fx, double fy, double eps) {
  if (fx == fy) return Cmp::kTie;
  if (fx < fy - eps) return Cmp::kViolation;
  if (fx > fy + eps) return Cmp::kStrict;
  return Cmp::kTie;
}

}  // namespace

double renyi_divergence(const ProbVec& x, const ProbVec& y, double alpha) {
  require_same_size(x.size(), y.size(), "divergence operands");
  require_positive(y);
  if (std::isnan(alpha)) throw InvalidInput("alpha is NaN");
  if (alpha == 1.0) return kl(x, y);
  if (alpha == 0.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > 0.0) s += y[i];
    }
    return -std::log(s);
  }
  if (alpha == kUnbounded) return max_log_ratio(x, y);
  if (alpha == -kUnbounded) {
    double m = -kUnbounded;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(x[i] > 0.0)) return kUnbounded;
      m = std::max(m, std::log(y[i]) - std::log(x[i]));
    }
    return m;
  }
  std::vector<double> terms;
  terms.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) {
      if (alpha < 0.0) return kUnbounded;
      continue;
    }
    terms.push_back(alpha * std::log(x[i]) + (1.0 - alpha) * std::log(y[i]));
  }
  const double top = *std::max_element(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += std::exp(t - top);
  const double lse = top + std::log(s);
  const double sgn = alpha > 0.0 ? 1.0 : -1.0;
  return sgn / (alpha - 1.0) * lse;
}

double renyi_entropy(const ProbVec& x, double alpha) {
  const std::size_t n = x.size();
  return std::log(static_cast<double>(n)) - renyi_divergence(x, ProbVec::uniform(n), alpha);
}

double free_energy_alpha(const ProbVec& x, const GibbsContext& ctx, double alpha) {
  require_same_size(x.size(), ctx.size(), "state and context");
  if (!(ctx.beta() > 0.0)) throw InvalidInput("free energies need beta > 0");
  const double kT = ctx.kT();
  return kT * (renyi_divergence(x, ctx.gibbs(), alpha) - ctx.log_partition());
}

double burg_free_energy(const ProbVec& x, const GibbsContext& ctx) {
  require_same_size(x.size(), ctx.size(), "state and context");
  if (!(ctx.beta() > 0.0)) throw InvalidInput("free energies need beta > 0");
  for (double v : x) {
    if (!(v > 0.0)) return kUnbounded;
  }
  return ctx.kT() * (kl(ctx.gibbs(), x) - ctx.log_partition());
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid{-kUnbounded, 1.0, kUnbounded};
  for (int k = 0; k < 10; ++k) {
    const double a = 0.1 * std::pow(50.0, static_cast<double>(k) / 9.0);
    grid.push_back(a);
    grid.push_back(-a);
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

SecondLawsVerdict second_laws_check(const ProbVec& x, const ProbVec& y, const GibbsContext& ctx,
                                    const std::vector<double>& alpha_grid, bool include_burg,
                                    double eps) {
  if (alpha_grid.empty() && !include_burg) throw InvalidInput("alpha grid is empty");
  SecondLawsVerdict v;
  v.alpha_grid = alpha_grid;
  v.burg_included = include_burg;
  auto record = [&](std::optional<double> alpha, double fx, double fy) {
    switch (compare(fx, fy, eps)) {
      case Cmp::kViolation:
        v.violations.push_back({alpha, fx - fy});
        break;
      case Cmp::kStrict:
        ++v.strict_count;
        break;
      case Cmp::kTie:
        ++v.tie_count;
        break;
    }
  };
  for (double a : alpha_grid) record(a, free_energy_alpha(x, ctx, a), free_energy_alpha(y, ctx, a));
  if (include_burg) record(std::nullopt, burg_free_energy(x, ctx), burg_free_energy(y, ctx));
  v.passed = v.violations.empty();
  return v;
}

}  // namespace athermal
