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

#include <algorithm>
#include <cmath>
#include <vector>

#include "athermal/core.hpp"
#include "athermal/majorization.hpp"

namespace athermal::testing {

inline double positive_part_sum(const ProbVec& x, const std::vector<double>& w, double t) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::max(0.0, x[i] - t * w[i]);
  return s;
}

/// Sort-free ordering test: sum_i (x_i - t w_i)_+ dominates on every breakpoint t.
inline bool hinge_dominates(const ProbVec& x, const ProbVec& y, const std::vector<double>& w,
                            double eps) {
  std::vector<double> ts{0.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    ts.push_back(x[i] / w[i]);
    ts.push_back(y[i] / w[i]);
  }
  for (double t : ts) {
    if (positive_part_sum(x, w, t) < positive_part_sum(y, w, t) - eps) return false;
  }
  return true;
}

inline bool hinge_majorizes(const ProbVec& x, const ProbVec& y, double eps) {
  return hinge_dominates(x, y, std::vector<double>(x.size(), 1.0), eps);
}

/// Dense product Pi * T_k ... T_1 built from explicit matrices.
inline RealMatrix compose_dense(const HlpPlan& plan) {
  const auto n = static_cast<Eigen::Index>(plan.placement.size());
  RealMatrix b = RealMatrix::Identity(n, n);
  for (const TTransform& t : plan.transforms) {
    RealMatrix m = RealMatrix::Identity(n, n);
    const auto i = static_cast<Eigen::Index>(t.i);
    const auto j = static_cast<Eigen::Index>(t.j);
    m(i, i) = t.t;
    m(j, j) = t.t;
    m(i, j) = 1.0 - t.t;
    m(j, i) = 1.0 - t.t;
    b = m * b;
  }
  RealMatrix pi = RealMatrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) pi(static_cast<Eigen::Index>(plan.placement[a]), a) = 1.0;
  return pi * b;
}

/// Plain sum formula, alpha > 0 and alpha != 1.
inline double naive_renyi_entropy(const ProbVec& x, double alpha) {
  double s = 0.0;
  for (double v : x) {
    if (v > 0.0) s += std::pow(v, alpha);
  }
  return std::log(s) / (1.0 - alpha);
}

inline double naive_divergence(const ProbVec& x, const ProbVec& y, double alpha) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) s += std::pow(x[i], alpha) * std::pow(y[i], 1.0 - alpha);
  }
  return (alpha > 0.0 ? 1.0 : -1.0) / (alpha - 1.0) * std::log(s);
}

inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

/// Entropy of a 2x2 state from its Bloch radius.
inline double qubit_entropy(const ComplexMatrix& rho) {
  const double z = (rho(0, 0) - rho(1, 1)).real();
  const double r = std::sqrt(z * z + 4.0 * std::norm(rho(0, 1)));
  return binary_entropy(0.5 * (1.0 + r));
}

}  // namespace athermal::testing
