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

#include "athermal/core.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace athermal {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InvalidInput(std::string("dimension mismatch: ") + what + " (" +
                       std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

EnergySpectrum::EnergySpectrum(std::vector<double> energies) : energies_(std::move(energies)) {
  if (energies_.empty()) throw InvalidInput("energy spectrum is empty");
  for (std::size_t i = 0; i < energies_.size(); ++i) {
    if (!std::isfinite(energies_[i])) throw InvalidInput("energy spectrum has a non-finite entry");
    if (i > 0 && energies_[i] < energies_[i - 1]) {
      throw InvalidInput("energy spectrum must be sorted non-decreasing");
    }
  }
}

ProbVec::ProbVec(std::vector<double> entries) : p_(std::move(entries)) {
  if (p_.empty()) throw InvalidInput("probability vector is empty");
  double total = 0.0;
  for (double& v : p_) {
    if (!std::isfinite(v)) throw InvalidInput("probability vector has a non-finite entry");
    if (v < 0.0) {
      if (v < -tol::kClamp) throw InvalidInput("probability vector has a negative entry");
      v = 0.0;
    }
    total += v;
  }
  if (std::abs(total - 1.0) > tol::kValidation) {
    throw InvalidInput("probability vector does not sum to 1");
  }
}

ProbVec::ProbVec(std::initializer_list<double> entries)
    : ProbVec(std::vector<double>(entries)) {}

ProbVec ProbVec::uniform(std::size_t n) {
  if (n == 0) throw InvalidInput("uniform distribution needs n >= 1");
  return ProbVec(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbVec ProbVec::basis(std::size_t n, std::size_t k) {
  if (k >= n) throw InvalidInput("basis index out of range");
  std::vector<double> v(n, 0.0);
  v[k] = 1.0;
  return ProbVec(std::move(v));
}

Eigen::VectorXd ProbVec::vector() const {
  return Eigen::Map<const Eigen::VectorXd>(p_.data(), static_cast<Eigen::Index>(p_.size()));
}

StochasticMatrix::StochasticMatrix(RealMatrix g) : g_(std::move(g)) {
  if (g_.rows() == 0 || g_.rows() != g_.cols()) {
    throw InvalidInput("stochastic matrix must be square and non-empty");
  }
  for (Eigen::Index j = 0; j < g_.cols(); ++j) {
    double col = 0.0;
    for (Eigen::Index i = 0; i < g_.rows(); ++i) {
      double& v = g_(i, j);
      if (!std::isfinite(v)) throw InvalidInput("stochastic matrix has a non-finite entry");
      if (v < 0.0) {
        if (v < -tol::kClamp) throw InvalidInput("stochastic matrix has a negative entry");
        v = 0.0;
      }
      if (v > 1.0 + tol::kClamp) throw InvalidInput("stochastic matrix entry exceeds 1");
      col += v;
    }
    if (std::abs(col - 1.0) > tol::kValidation) {
      throw InvalidInput("stochastic matrix column " + std::to_string(j) + " does not sum to 1");
    }
  }
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return StochasticMatrix(RealMatrix::Identity(m, m));
}

ProbVec StochasticMatrix::apply(const ProbVec& x) const {
  require_same_size(size(), x.size(), "matrix and vector");
  const Eigen::VectorXd y = g_ * x.vector();
  return ProbVec(std::vector<double>(y.data(), y.data() + y.size()));
}

bool StochasticMatrix::fixes(const ProbVec& g, double tol) const {
  require_same_size(size(), g.size(), "matrix and vector");
  return ((g_ * g.vector()) - g.vector()).cwiseAbs().maxCoeff() <= tol;
}

PLCurve::PLCurve(std::vector<Point> points) : pts_(std::move(points)) {
  if (pts_.empty()) throw InvalidInput("curve needs at least one point");
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    if (pts_[i].x < pts_[i - 1].x) throw InvalidInput("curve abscissas must be non-decreasing");
  }
}

double PLCurve::at(double x) const {
  if (x <= pts_.front().x) return pts_.front().y;
  if (x >= pts_.back().x) return pts_.back().y;
  auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                             [](double v, const Point& p) { return v < p.x; });
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  if (hi.x == lo.x) return hi.y;
  const double s = (x - lo.x) / (hi.x - lo.x);
  return lo.y + s * (hi.y - lo.y);
}

PLCurve PLCurve::scaled_x(double factor) const {
  std::vector<Point> out = pts_;
  for (Point& p : out) p.x *= factor;
  return PLCurve(std::move(out));
}

bool curve_dominates(const PLCurve& a, const PLCurve& b, double eps) {
  for (const PLCurve* c : {&a, &b}) {
    for (const Point& p : c->points()) {
      if (a.at(p.x) < b.at(p.x) - eps) return false;
    }
  }
  return true;
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) {
    throw InvalidInput("density matrix must be square and non-empty");
  }
  if (!rho_.allFinite()) throw InvalidInput("density matrix has a non-finite entry");
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol::kIdentity) {
    throw InvalidInput("density matrix is not Hermitian");
  }
  rho_ = 0.5 * (rho_ + rho_.adjoint()).eval();
  if (std::abs(rho_.trace().real() - 1.0) > tol::kValidation) {
    throw InvalidInput("density matrix does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::kValidation) {
    throw InvalidInput("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::diagonal(const ProbVec& p) {
  ComplexVector d(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) d(static_cast<Eigen::Index>(i)) = p[i];
  return DensityMatrix(d.asDiagonal());
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw InvalidInput("pure state vector is zero");
  const ComplexVector v = psi / norm;
  return DensityMatrix(v * v.adjoint());
}

double log_partition(const EnergySpectrum& spectrum, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) throw InvalidInput("beta must be finite and >= 0");
  const double e0 = spectrum.min();
  double s = 0.0;
  for (double e : spectrum.values()) s += std::exp(-beta * (e - e0));
  return -beta * e0 + std::log(s);
}

ProbVec gibbs_vector(const EnergySpectrum& spectrum, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) throw InvalidInput("beta must be finite and >= 0");
  const double e0 = spectrum.min();
  std::vector<double> g(spectrum.size());
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = std::exp(-beta * (spectrum[i] - e0));
    s += g[i];
  }
  for (double& v : g) v /= s;
  return ProbVec(std::move(g));
}

GibbsContext::GibbsContext(EnergySpectrum spectrum, double beta)
    : spectrum_(std::move(spectrum)),
      beta_(beta),
      gibbs_(gibbs_vector(spectrum_, beta)),
      z_(0.0),
      log_z_(athermal::log_partition(spectrum_, beta)) {
  for (double v : gibbs_.values()) {
    if (!(v > 0.0)) throw InvalidInput("beta too large: Gibbs vector has a vanishing entry");
  }
  z_ = std::exp(log_z_);
  if (!std::isfinite(z_) || !(z_ > 0.0)) {
    throw InvalidInput("partition function is not representable");
  }
  weights_.resize(spectrum_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) weights_[i] = std::exp(-beta_ * spectrum_[i]);
}

double GibbsContext::kT() const noexcept {
  return beta_ > 0.0 ? 1.0 / beta_ : kUnbounded;
}

ProbVec population_of(const DensityMatrix& rho) {
  std::vector<double> p(rho.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = rho(i, i).real();
  return ProbVec(std::move(p));
}

DensityMatrix thermal_state(const GibbsContext& ctx) {
  return DensityMatrix::diagonal(ctx.gibbs());
}

}  // namespace athermal
