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

#include "athermal/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace athermal {

ProbVec random_prob_vec(std::size_t n, Rng& rng, std::size_t zeros) {
  if (n == 0 || zeros >= n) throw InvalidInput("need at least one non-zero entry");
  std::exponential_distribution<double> ex(1.0);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<double> v(n, 0.0);
  double s = 0.0;
  for (std::size_t k = zeros; k < n; ++k) {
    v[idx[k]] = ex(rng) + 1e-3;
    s += v[idx[k]];
  }
  for (double& x : v) x /= s;
  return ProbVec(std::move(v));
}

EnergySpectrum random_spectrum(std::size_t n, Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> e(n);
  for (double& x : e) x = u(rng);
  std::sort(e.begin(), e.end());
  return EnergySpectrum(std::move(e));
}

DensityMatrix random_density_matrix(std::size_t n, Rng& rng, std::size_t rank) {
  if (rank == 0 || rank > n) rank = n;
  std::normal_distribution<double> nd;
  ComplexMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(rank));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Complex(nd(rng), nd(rng));
  }
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

StochasticMatrix random_gibbs_stochastic(const ProbVec& g, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(g.size());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RealMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = std::pow(u(rng), 3.0) + 1e-6;
  }
  const Eigen::VectorXd gv = g.vector();
  for (int it = 0; it < 100000; ++it) {
    const Eigen::VectorXd rows = m.rowwise().sum();
    m = (gv.cwiseQuotient(rows)).asDiagonal() * m;
    const Eigen::RowVectorXd cols = m.colwise().sum();
    m = m * (gv.transpose().cwiseQuotient(cols)).asDiagonal();
    if ((m.rowwise().sum() - gv).cwiseAbs().maxCoeff() < 1e-15) break;
  }
  RealMatrix G = m * gv.cwiseInverse().asDiagonal();
  for (Eigen::Index j = 0; j < n; ++j) G.col(j) /= G.col(j).sum();
  return StochasticMatrix(std::move(G));
}

QuantumChannel random_covariant_channel(const EnergySpectrum& spectrum, Rng& rng, std::size_t n_kraus) {
  const std::size_t n = spectrum.size();
  const auto table = mode_table(spectrum);
  const std::size_t modes = bohr_spectrum(spectrum).frequencies.size();
  const std::size_t zero = table[0][0];
  std::normal_distribution<double> nd;
  std::uniform_int_distribution<std::size_t> pick(0, modes - 1);
  const auto m = static_cast<Eigen::Index>(n);
  std::vector<ComplexMatrix> ks;
  for (std::size_t k = 0; k < std::max<std::size_t>(n_kraus, 1); ++k) {
    const std::size_t mode = k == 0 ? zero : pick(rng);
    ComplexMatrix K = ComplexMatrix::Zero(m, m);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] == mode) {
          K(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = Complex(nd(rng), nd(rng));
        }
      }
    }
    ks.push_back(std::move(K));
  }
  ComplexMatrix s = ComplexMatrix::Zero(m, m);
  for (const ComplexMatrix& K : ks) s += K.adjoint() * K;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
  const Eigen::VectorXd inv = es.eigenvalues().cwiseSqrt().cwiseInverse();
  const ComplexMatrix root = es.eigenvectors() * inv.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  for (ComplexMatrix& K : ks) K = (K * root).eval();
  return QuantumChannel(std::move(ks));
}

}  // namespace athermal
