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

#include "athermal/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "athermal/majorization.hpp"

namespace athermal {

namespace {

// Integer parts summing to total, assigned by largest remainder.
std::vector<std::int64_t> largest_remainder(const std::vector<double>& target, std::int64_t total) {
  const std::size_t n = target.size();
  std::vector<std::int64_t> out(n);
  std::vector<double> rem(n);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = std::floor(target[i]);
    out[i] = static_cast<std::int64_t>(f);
    rem[i] = target[i] - f;
    sum += out[i];
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
  std::int64_t left = total - sum;
  for (std::size_t k = 0; left > 0; k = (k + 1) % n, --left) ++out[idx[k]];
  for (std::size_t k = n; left < 0; ++left) {
    // Only reachable through floating error; take from the smallest remainders.
    k = (k == 0 ? n : k) - 1;
    if (out[idx[k]] > 0) --out[idx[k]];
    else ++left;
  }
  return out;
}

}  // namespace

BetaOrder beta_order(const ProbVec& x, const GibbsContext& ctx) {
  require_same_size(x.size(), ctx.size(), "state and context");
  const ProbVec& g = ctx.gibbs();
  std::vector<double> ratio(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) ratio[i] = x[i] / g[i];
  BetaOrder order;
  order.perm.resize(x.size());
  std::iota(order.perm.begin(), order.perm.end(), std::size_t{0});
  std::stable_sort(order.perm.begin(), order.perm.end(),
                   [&](std::size_t a, std::size_t b) { return ratio[a] > ratio[b]; });
  return order;
}

PLCurve thermo_curve(const ProbVec& x, const GibbsContext& ctx) {
  const BetaOrder order = beta_order(x, ctx);
  const std::vector<double>& w = ctx.weights();
  std::vector<Point> pts;
  pts.reserve(x.size() + 1);
  pts.push_back({0.0, 0.0});
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k : order.perm) {
    sx += w[k];
    sy += x[k];
    pts.push_back({sx, sy});
  }
  return PLCurve(std::move(pts));
}

bool thermo_majorizes(const ProbVec& x, const ProbVec& y, const GibbsContext& ctx, double eps) {
  require_same_size(x.size(), y.size(), "thermo-majorization operands");
  return curve_dominates(thermo_curve(x, ctx), thermo_curve(y, ctx), eps);
}

ProbVec EmbeddingSpec::rational_gibbs() const {
  std::vector<double> g(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) g[i] = static_cast<double>(d[i]) / static_cast<double>(D);
  return ProbVec(std::move(g));
}

EmbeddingSpec rationalize(const ProbVec& g, std::int64_t d_max) {
  const auto n = static_cast<std::int64_t>(g.size());
  if (d_max < n) throw InvalidInput("denominator cap must be at least the dimension");
  EmbeddingSpec best;
  best.approx_error = kUnbounded;
  std::vector<double> target(g.size());
  for (std::int64_t D = n; D <= d_max; ++D) {
    for (std::size_t i = 0; i < g.size(); ++i) target[i] = g[i] * static_cast<double>(D);
    std::vector<std::int64_t> d = largest_remainder(target, D);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] >= 1) continue;
      auto donor = std::max_element(d.begin(), d.end());
      --*donor;
      d[i] = 1;
    }
    double err = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      err = std::max(err, std::abs(g[i] - static_cast<double>(d[i]) / static_cast<double>(D)));
    }
    if (err < best.approx_error) {
      best.d = std::move(d);
      best.D = D;
      best.approx_error = err;
      if (err == 0.0) break;
    }
  }
  return best;
}

EmbeddingSpec rationalize(const GibbsContext& ctx, std::int64_t d_max) {
  return rationalize(ctx.gibbs(), d_max);
}

ProbVec embed(const ProbVec& x, const EmbeddingSpec& spec) {
  require_same_size(x.size(), spec.d.size(), "state and embedding");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(spec.D));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = x[i] / static_cast<double>(spec.d[i]);
    out.insert(out.end(), static_cast<std::size_t>(spec.d[i]), v);
  }
  return ProbVec(std::move(out));
}

ProbVec unembed(const ProbVec& p, const EmbeddingSpec& spec) {
  require_same_size(p.size(), static_cast<std::size_t>(spec.D), "embedded state and embedding");
  std::vector<double> out(spec.d.size(), 0.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < spec.d.size(); ++i) {
    for (std::int64_t r = 0; r < spec.d[i]; ++r) out[i] += p[k++];
  }
  return ProbVec(std::move(out));
}

StochasticMatrix construct_gibbs_stochastic(const ProbVec& x, const ProbVec& y,
                                            const GibbsContext& ctx, std::int64_t d_max,
                                            double eps) {
  require_same_size(x.size(), y.size(), "construction operands");
  require_same_size(x.size(), ctx.size(), "state and context");
  if (!thermo_majorizes(x, y, ctx, eps)) throw OrderingError("x does not thermo-majorize y");
  const EmbeddingSpec spec = rationalize(ctx, d_max);
  const std::size_t n = x.size();
  const double budget = std::max(eps, static_cast<double>(n) * spec.approx_error);
  const ProbVec ex = embed(x, spec);
  const ProbVec ey = embed(y, spec);
  if (!majorizes(ex, ey, budget)) {
    throw ApproximationError("embedded majorization fails under the rational Gibbs approximation",
                             spec.approx_error);
  }
  const HlpPlan plan = hlp_construct(ex, ey, budget);

  const auto m = static_cast<Eigen::Index>(n);
  RealMatrix g(m, m);
  const auto D = static_cast<std::size_t>(spec.D);
  std::size_t offset = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> col(D, 0.0);
    const auto dj = static_cast<std::size_t>(spec.d[j]);
    std::fill(col.begin() + static_cast<std::ptrdiff_t>(offset),
              col.begin() + static_cast<std::ptrdiff_t>(offset + dj), 1.0 / static_cast<double>(dj));
    offset += dj;
    const std::vector<double> out = plan.apply(std::move(col));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::int64_t r = 0; r < spec.d[i]; ++r) s += out[k++];
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s;
    }
  }
  return StochasticMatrix(std::move(g));
}

bool feasibility_lp_oracle(const ProbVec& x, const ProbVec& y, const ProbVec& g) {
  require_same_size(x.size(), y.size(), "oracle operands");
  require_same_size(x.size(), g.size(), "oracle operands");
  for (double v : g) {
    if (!(v > 0.0)) throw InvalidInput("oracle needs a strictly positive fixed point");
  }
  const std::size_t n = x.size();
  const std::size_t m = 3 * n;
  const std::size_t nv = n * n;
  const std::size_t cols = nv + m;
  constexpr double kPivot = 1e-12;

  // Tableau rows 0..m-1 are constraints, row m is the phase-1 cost; last column is the rhs.
  RealMatrix t = RealMatrix::Zero(static_cast<Eigen::Index>(m + 1), static_cast<Eigen::Index>(cols + 1));
  auto var = [n](std::size_t i, std::size_t j) { return static_cast<Eigen::Index>(j * n + i); };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      t(static_cast<Eigen::Index>(j), var(i, j)) = 1.0;
      t(static_cast<Eigen::Index>(n + i), var(i, j)) = x[j];
      t(static_cast<Eigen::Index>(2 * n + i), var(i, j)) = g[j];
    }
    t(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(cols)) = 1.0;
    t(static_cast<Eigen::Index>(n + j), static_cast<Eigen::Index>(cols)) = y[j];
    t(static_cast<Eigen::Index>(2 * n + j), static_cast<Eigen::Index>(cols)) = g[j];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    t(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(nv + r)) = 1.0;
    basis[r] = nv + r;
  }
  const auto cost = static_cast<Eigen::Index>(m);
  for (std::size_t r = 0; r < m; ++r) t.row(cost) -= t.row(static_cast<Eigen::Index>(r));
  for (std::size_t r = 0; r < m; ++r) t(cost, static_cast<Eigen::Index>(nv + r)) = 0.0;

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (t(cost, static_cast<Eigen::Index>(c)) < -kPivot) {
        enter = c;
        break;
      }
    }
    if (enter == cols) break;
    const auto ec = static_cast<Eigen::Index>(enter);
    double best = kUnbounded;
    for (std::size_t r = 0; r < m; ++r) {
      const double a = t(static_cast<Eigen::Index>(r), ec);
      if (a > kPivot) best = std::min(best, t(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cols)) / a);
    }
    std::size_t leave = m;
    for (std::size_t r = 0; r < m; ++r) {
      const double a = t(static_cast<Eigen::Index>(r), ec);
      if (a <= kPivot) continue;
      const double ratio = t(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cols)) / a;
      if (ratio <= best + kPivot && (leave == m || basis[r] < basis[leave])) leave = r;
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase 1
    const auto lr = static_cast<Eigen::Index>(leave);
    t.row(lr) /= t(lr, ec);
    for (Eigen::Index r = 0; r <= cost; ++r) {
      if (r == lr) continue;
      const double f = t(r, ec);
      if (f != 0.0) t.row(r) -= f * t.row(lr);
    }
    basis[leave] = enter;
  }
  return -t(cost, static_cast<Eigen::Index>(cols)) <= 1e-9;
}

BathSimulation bath_model_simulate(const StochasticMatrix& target, const GibbsContext& ctx,
                                   std::int64_t gE) {
  require_same_size(target.size(), ctx.size(), "target and context");
  if (gE < 1) throw ResolutionError("bath scale gE must be at least 1");
  if (!target.fixes(ctx.gibbs(), tol::kValidation)) {
    throw InvalidInput("target matrix is not Gibbs-stochastic");
  }
  const std::size_t n = ctx.size();
  const double emax = ctx.spectrum().max();
  constexpr double kExactIntegers = 9007199254740992.0;  // 2^53

  std::vector<std::int64_t> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v =
        std::round(static_cast<double>(gE) * std::exp(-ctx.beta() * (ctx.spectrum()[i] - emax)));
    if (!(v <= kExactIntegers)) throw ResolutionError("bath degeneracy overflows; lower gE or beta");
    if (v < 1.0) throw ResolutionError("bath degeneracy rounds to zero; increase gE");
    d[i] = static_cast<std::int64_t>(v);
  }

  // Column-wise rounding of M_ij = G_ij d_j.
  std::vector<std::vector<std::int64_t>> cnt(n, std::vector<std::int64_t>(n));
  std::vector<std::vector<double>> want(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) {
      want[i][j] = target(i, j) * static_cast<double>(d[j]);
      col[i] = want[i][j];
    }
    const std::vector<std::int64_t> r = largest_remainder(col, d[j]);
    for (std::size_t i = 0; i < n; ++i) cnt[i][j] = r[i];
  }

  // Row repair: move single units from surplus rows to deficit rows within a column.
  auto excess = [&](std::size_t i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += cnt[i][j];
    return s - d[i];
  };
  for (;;) {
    std::size_t hi = 0;
    std::size_t lo = 0;
    std::int64_t ehi = 0;
    std::int64_t elo = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t e = excess(i);
      if (e > ehi) { ehi = e; hi = i; }
      if (e < elo) { elo = e; lo = i; }
    }
    if (ehi == 0 && elo == 0) break;
    if (ehi == 0 || elo == 0) throw ResolutionError("integer transport repair is infeasible");
    std::size_t pick = n;
    double gain = -kUnbounded;
    for (std::size_t j = 0; j < n; ++j) {
      if (cnt[hi][j] < 1) continue;
      const double gj = (static_cast<double>(cnt[hi][j]) - want[hi][j]) +
                        (want[lo][j] - static_cast<double>(cnt[lo][j]));
      if (gj > gain) { gain = gj; pick = j; }
    }
    if (pick == n) throw ResolutionError("integer transport repair is infeasible");
    --cnt[hi][pick];
    ++cnt[lo][pick];
  }

  const auto m = static_cast<Eigen::Index>(n);
  RealMatrix induced(m, m);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = static_cast<double>(cnt[i][j]) / static_cast<double>(d[j]);
      induced(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      residual = std::max(residual, std::abs(v - target(i, j)));
    }
  }
  return BathSimulation{StochasticMatrix(std::move(induced)), std::move(d), std::move(cnt), residual};
}

}  // namespace athermal
