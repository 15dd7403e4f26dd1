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

#include "athermal/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

namespace athermal {

namespace {

std::vector<std::size_t> descending_order(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return idx;
}

// Ordered by value descending, then position ascending.
struct ByValueDesc {
  bool operator()(const std::pair<double, std::size_t>& a,
                  const std::pair<double, std::size_t>& b) const {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  }
};

}  // namespace

void TTransform::apply(std::vector<double>& w) const {
  const double wi = w[i];
  const double wj = w[j];
  w[i] = t * wi + (1.0 - t) * wj;
  w[j] = (1.0 - t) * wi + t * wj;
}

std::vector<double> HlpPlan::apply(std::vector<double> w) const {
  require_same_size(w.size(), placement.size(), "plan and vector");
  for (const TTransform& tt : transforms) tt.apply(w);
  std::vector<double> out(w.size());
  for (std::size_t a = 0; a < w.size(); ++a) out[placement[a]] = w[a];
  return out;
}

RealMatrix HlpPlan::matrix() const {
  const auto n = static_cast<Eigen::Index>(placement.size());
  RealMatrix b = RealMatrix::Identity(n, n);
  for (const TTransform& tt : transforms) {
    const auto i = static_cast<Eigen::Index>(tt.i);
    const auto j = static_cast<Eigen::Index>(tt.j);
    const Eigen::RowVectorXd ri = b.row(i);
    const Eigen::RowVectorXd rj = b.row(j);
    b.row(i) = tt.t * ri + (1.0 - tt.t) * rj;
    b.row(j) = (1.0 - tt.t) * ri + tt.t * rj;
  }
  RealMatrix out(n, n);
  for (Eigen::Index a = 0; a < n; ++a) out.row(static_cast<Eigen::Index>(placement[a])) = b.row(a);
  return out;
}

PLCurve lorenz_curve(const ProbVec& x) {
  std::vector<double> v = x.values();
  std::sort(v.begin(), v.end(), std::greater<>());
  std::vector<Point> pts;
  pts.reserve(v.size() + 1);
  pts.push_back({0.0, 0.0});
  double s = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    s += v[k];
    pts.push_back({static_cast<double>(k + 1), s});
  }
  return PLCurve(std::move(pts));
}

bool majorizes(const ProbVec& x, const ProbVec& y, double eps) {
  require_same_size(x.size(), y.size(), "majorization operands");
  std::vector<double> a = x.values();
  std::vector<double> b = y.values();
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa += a[k];
    sb += b[k];
    if (sa < sb - eps) return false;
  }
  return std::abs(sa - sb) <= eps;
}

HlpPlan hlp_construct(const ProbVec& x, const ProbVec& y, double eps) {
  require_same_size(x.size(), y.size(), "majorization operands");
  if (!majorizes(x, y, eps)) throw OrderingError("x does not majorize y");
  const std::size_t n = x.size();
  const std::vector<std::size_t> ys = descending_order(y.values());

  HlpPlan plan;
  plan.placement.assign(n, 0);
  std::vector<double> z = x.values();
  std::set<std::pair<double, std::size_t>, ByValueDesc> active;
  for (std::size_t a = 0; a < n; ++a) active.insert({z[a], a});

  for (std::size_t s = 0; s + 1 < n; ++s) {
    const auto top = active.begin();
    const std::size_t a = top->second;
    active.erase(top);
    const double target = y[ys[s]];
    plan.placement[a] = ys[s];
    if (z[a] == target) continue;

    auto it = active.lower_bound({target, 0});
    if (it == active.end()) it = std::prev(active.end());
    const std::size_t b = it->second;
    const double zb = z[b];
    double t = 1.0;
    if (z[a] != zb) t = std::clamp((target - zb) / (z[a] - zb), 0.0, 1.0);
    active.erase(it);

    TTransform tt{a, b, t};
    tt.apply(z);
    z[a] = target;
    plan.transforms.push_back(tt);
    active.insert({z[b], b});
  }
  plan.placement[active.begin()->second] = ys[n - 1];
  return plan;
}

double shannon_entropy(const ProbVec& x) {
  double h = 0.0;
  for (double v : x) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double asymptotic_rate(const ProbVec& x, const ProbVec& y) {
  require_same_size(x.size(), y.size(), "rate operands");
  const double logn = std::log(static_cast<double>(x.size()));
  const double den = logn - shannon_entropy(y);
  if (std::abs(den) <= tol::kIdentity) throw UnreachableError("unbounded rate: target is uniform");
  return (logn - shannon_entropy(x)) / den;
}

}  // namespace athermal
