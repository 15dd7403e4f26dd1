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

#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace athermal {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

namespace tol {
inline constexpr double kValidation = 1e-9;
inline constexpr double kIdentity = 1e-10;
inline constexpr double kClamp = 1e-12;
inline constexpr double kOrder = 1e-9;
}  // namespace tol

// Error hierarchy. name() is the tag surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "error"; }
};

class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "invalid_input"; }
};

class OrderingError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "ordering_error"; }
};

class ApproximationError : public Error {
 public:
  ApproximationError(const std::string& what, double approx_error)
      : Error(what), approx_error_(approx_error) {}
  const char* name() const noexcept override { return "approximation_error"; }
  double approx_error() const noexcept { return approx_error_; }

 private:
  double approx_error_;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "resolution_error"; }
};

class UnreachableError : public Error {
 public:
  using Error::Error;
  const char* name() const noexcept override { return "unreachable_error"; }
};

/// Energies sorted non-decreasing; degeneracies allowed.
class EnergySpectrum {
 public:
  explicit EnergySpectrum(std::vector<double> energies);

  std::size_t size() const noexcept { return energies_.size(); }
  double operator[](std::size_t i) const { return energies_[i]; }
  const std::vector<double>& values() const noexcept { return energies_; }
  double min() const { return energies_.front(); }
  double max() const { return energies_.back(); }

 private:
  std::vector<double> energies_;
};

/// Probability vector. Entries in [-1e-12, 0) are clamped to zero.
class ProbVec {
 public:
  explicit ProbVec(std::vector<double> entries);
  ProbVec(std::initializer_list<double> entries);

  static ProbVec uniform(std::size_t n);
  static ProbVec basis(std::size_t n, std::size_t k);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& values() const noexcept { return p_; }
  Eigen::VectorXd vector() const;

  auto begin() const noexcept { return p_.begin(); }
  auto end() const noexcept { return p_.end(); }

 private:
  std::vector<double> p_;
};

/// Column-stochastic matrix, G(i, j) = probability of j -> i.
class StochasticMatrix {
 public:
  explicit StochasticMatrix(RealMatrix g);

  static StochasticMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return static_cast<std::size_t>(g_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return g_(i, j); }
  const RealMatrix& matrix() const noexcept { return g_; }

  ProbVec apply(const ProbVec& x) const;
  bool fixes(const ProbVec& g, double tol = tol::kIdentity) const;

 private:
  RealMatrix g_;
};

struct Point {
  double x;
  double y;
};

/// Piecewise-linear curve through its breakpoints.
class PLCurve {
 public:
  PLCurve() = default;
  explicit PLCurve(std::vector<Point> points);

  const std::vector<Point>& points() const noexcept { return pts_; }
  std::size_t size() const noexcept { return pts_.size(); }

  /// Linear interpolation; constant beyond the last breakpoint.
  double at(double x) const;

  PLCurve scaled_x(double factor) const;

 private:
  std::vector<Point> pts_;
};

/// true iff a(x) >= b(x) - eps at every breakpoint abscissa of either curve.
bool curve_dominates(const PLCurve& a, const PLCurve& b, double eps = tol::kOrder);

/// Hermitian, unit trace, positive semidefinite within tolerance.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho);

  static DensityMatrix diagonal(const ProbVec& p);
  static DensityMatrix pure(const ComplexVector& psi);

  std::size_t size() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
  Complex operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }
  const ComplexMatrix& matrix() const noexcept { return rho_; }

 private:
  ComplexMatrix rho_;
};

class GibbsContext {
 public:
  GibbsContext(EnergySpectrum spectrum, double beta);

  const EnergySpectrum& spectrum() const noexcept { return spectrum_; }
  std::size_t size() const noexcept { return spectrum_.size(); }
  double beta() const noexcept { return beta_; }
  /// kT = 1/beta; infinite at beta = 0.
  double kT() const noexcept;
  const ProbVec& gibbs() const noexcept { return gibbs_; }
  double partition() const noexcept { return z_; }
  double log_partition() const noexcept { return log_z_; }
  /// Boltzmann weights e^{-beta E_i} = Z g_i.
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  EnergySpectrum spectrum_;
  double beta_;
  ProbVec gibbs_;
  double z_;
  double log_z_;
  std::vector<double> weights_;
};

ProbVec gibbs_vector(const EnergySpectrum& spectrum, double beta);

/// log Z computed with the minimum energy factored out.
double log_partition(const EnergySpectrum& spectrum, double beta);

ProbVec population_of(const DensityMatrix& rho);

DensityMatrix thermal_state(const GibbsContext& ctx);

void require_same_size(std::size_t a, std::size_t b, const char* what);

}  // namespace athermal
