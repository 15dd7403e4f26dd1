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

#include "athermal/coherence.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace athermal {

namespace {

constexpr double kSupport = 1e-12;

using Eigensolver = Eigen::SelfAdjointEigenSolver<ComplexMatrix>;

double resolve_delta(const EnergySpectrum& spectrum, double delta) {
  return delta < 0.0 ? default_bohr_tolerance(spectrum) : delta;
}

struct Cluster {
  double lo;
  double hi;
  double omega;
};

std::vector<Cluster> cluster_differences(const EnergySpectrum& spectrum, double delta) {
  const std::size_t n = spectrum.size();
  std::vector<double> diffs;
  diffs.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) diffs.push_back(spectrum[a] - spectrum[b]);
  }
  std::sort(diffs.begin(), diffs.end());
  std::vector<Cluster> raw;
  std::size_t start = 0;
  double sum = diffs[0];
  for (std::size_t k = 1; k <= diffs.size(); ++k) {
    if (k == diffs.size() || diffs[k] - diffs[k - 1] > delta) {
      raw.push_back({diffs[start], diffs[k - 1], sum / static_cast<double>(k - start)});
      if (k < diffs.size()) {
        start = k;
        sum = diffs[k];
      }
    } else {
      sum += diffs[k];
    }
  }
  // The set of differences is symmetric, so clusters mirror each other.
  std::vector<Cluster> out;
  for (const Cluster& c : raw) {
    if (c.lo <= 0.0 && c.hi >= 0.0) {
      if (std::max(-c.lo, c.hi) > delta) {
        throw ResolutionError("Bohr clustering merges zero with a nonzero frequency; lower delta");
      }
      out.push_back({c.lo, c.hi, 0.0});
    } else if (c.lo > 0.0) {
      out.push_back(c);
    }
  }
  const std::size_t positive = out.size();
  for (std::size_t k = 1; k < positive; ++k) {
    out.push_back({-out[k].hi, -out[k].lo, -out[k].omega});
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) { return a.omega < b.omega; });
  return out;
}

std::size_t cluster_of(const std::vector<Cluster>& clusters, double v) {
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    if (v >= clusters[k].lo && v <= clusters[k].hi) return k;
  }
  throw std::logic_error("difference outside every Bohr cluster");
}

ComplexMatrix hermitian_function(const ComplexMatrix& h, double (*f)(double, double), double arg) {
  Eigensolver es(h);
  Eigen::VectorXd lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = f(lam(i), arg);
  return es.eigenvectors() * lam.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

// Power on the support; zero elsewhere.
double support_power(double v, double a) { return v > kSupport ? std::pow(v, a) : 0.0; }

double entropy_of_eigenvalues(const Eigen::VectorXd& lam) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) > 0.0) s -= lam(i) * std::log(lam(i));
  }
  return s;
}

double entropy(const ComplexMatrix& rho) {
  Eigensolver es(rho, Eigen::EigenvaluesOnly);
  return entropy_of_eigenvalues(es.eigenvalues());
}

void require_square(const ComplexMatrix& op, std::size_t n, const char* what) {
  if (op.rows() != op.cols()) throw InvalidInput(std::string(what) + " must be square");
  require_same_size(static_cast<std::size_t>(op.rows()), n, what);
}

}  // namespace

double default_bohr_tolerance(const EnergySpectrum& spectrum) {
  return 1e-9 * (spectrum.max() - spectrum.min());
}

BohrSpectrum bohr_spectrum(const EnergySpectrum& spectrum, double delta) {
  delta = resolve_delta(spectrum, delta);
  if (!std::isfinite(delta)) throw InvalidInput("Bohr tolerance must be finite");
  BohrSpectrum out;
  for (const Cluster& c : cluster_differences(spectrum, delta)) out.frequencies.push_back(c.omega);
  return out;
}

std::vector<std::vector<std::size_t>> mode_table(const EnergySpectrum& spectrum, double delta) {
  delta = resolve_delta(spectrum, delta);
  const std::vector<Cluster> clusters = cluster_differences(spectrum, delta);
  const std::size_t n = spectrum.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = cluster_of(clusters, spectrum[a] - spectrum[b]);
  }
  return table;
}

ComplexMatrix ModeDecomposition::sum() const {
  ComplexMatrix s = ComplexMatrix::Zero(components.front().component.rows(),
                                        components.front().component.cols());
  for (const ModeComponent& c : components) s += c.component;
  return s;
}

const ModeComponent* ModeDecomposition::find(double omega, double tol) const {
  for (const ModeComponent& c : components) {
    if (std::abs(c.omega - omega) <= tol) return &c;
  }
  return nullptr;
}

ModeDecomposition mode_decompose(const ComplexMatrix& op, const EnergySpectrum& spectrum, double delta) {
  require_square(op, spectrum.size(), "operator");
  delta = resolve_delta(spectrum, delta);
  const std::vector<Cluster> clusters = cluster_differences(spectrum, delta);
  const auto table = mode_table(spectrum, delta);
  ModeDecomposition out;
  for (const Cluster& c : clusters) {
    out.components.push_back({c.omega, ComplexMatrix::Zero(op.rows(), op.cols())});
  }
  for (std::size_t a = 0; a < spectrum.size(); ++a) {
    for (std::size_t b = 0; b < spectrum.size(); ++b) {
      const auto i = static_cast<Eigen::Index>(a);
      const auto j = static_cast<Eigen::Index>(b);
      out.components[table[a][b]].component(i, j) = op(i, j);
    }
  }
  return out;
}

ModeDecomposition mode_decompose(const DensityMatrix& rho, const EnergySpectrum& spectrum, double delta) {
  return mode_decompose(rho.matrix(), spectrum, delta);
}

ComplexMatrix dephase(const ComplexMatrix& op, const EnergySpectrum& spectrum, double delta) {
  require_square(op, spectrum.size(), "operator");
  const auto table = mode_table(spectrum, delta);
  const BohrSpectrum bohr = bohr_spectrum(spectrum, delta);
  const auto zero = static_cast<std::size_t>(
      std::find(bohr.frequencies.begin(), bohr.frequencies.end(), 0.0) - bohr.frequencies.begin());
  ComplexMatrix out = ComplexMatrix::Zero(op.rows(), op.cols());
  for (std::size_t a = 0; a < spectrum.size(); ++a) {
    for (std::size_t b = 0; b < spectrum.size(); ++b) {
      if (table[a][b] != zero) continue;
      const auto i = static_cast<Eigen::Index>(a);
      const auto j = static_cast<Eigen::Index>(b);
      out(i, j) = op(i, j);
    }
  }
  return out;
}

DensityMatrix dephase(const DensityMatrix& rho, const EnergySpectrum& spectrum, double delta) {
  return DensityMatrix(dephase(rho.matrix(), spectrum, delta));
}

double von_neumann_entropy(const DensityMatrix& rho) { return entropy(rho.matrix()); }

double asymmetry(const DensityMatrix& rho, const EnergySpectrum& spectrum) {
  return entropy(dephase(rho.matrix(), spectrum)) - entropy(rho.matrix());
}

double quantum_renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  require_same_size(rho.size(), sigma.size(), "divergence operands");
  if (std::isnan(alpha) || alpha < 0.0) throw InvalidInput("quantum divergence needs alpha >= 0");
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix& s = sigma.matrix();
  Eigensolver es(s);
  const Eigen::VectorXd lam = es.eigenvalues();
  const ComplexMatrix& v = es.eigenvectors();
  // Mass of rho outside the support of sigma.
  double outside = 0.0;
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    if (lam(k) <= kSupport) outside += (v.col(k).adjoint() * r * v.col(k))(0, 0).real();
  }
  const bool contained = outside <= kSupport;

  if (alpha == 0.0) {
    Eigensolver er(r);
    double t = 0.0;
    for (Eigen::Index k = 0; k < er.eigenvalues().size(); ++k) {
      if (er.eigenvalues()(k) > kSupport) {
        t += (er.eigenvectors().col(k).adjoint() * s * er.eigenvectors().col(k))(0, 0).real();
      }
    }
    return t > 0.0 ? -std::log(t) : kUnbounded;
  }
  if (alpha == 1.0) {
    if (!contained) return kUnbounded;
    Eigensolver er(r);
    double cross = 0.0;
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
      if (lam(k) > kSupport) cross += (v.col(k).adjoint() * r * v.col(k))(0, 0).real() * std::log(lam(k));
    }
    return -entropy_of_eigenvalues(er.eigenvalues()) - cross;
  }
  if (alpha < 1.0) {
    const ComplexMatrix ra = hermitian_function(r, support_power, alpha);
    const ComplexMatrix sa = hermitian_function(s, support_power, 1.0 - alpha);
    const double t = (ra * sa).trace().real();
    return t > 0.0 ? std::log(t) / (alpha - 1.0) : kUnbounded;
  }
  if (!contained) return kUnbounded;
  if (alpha == kUnbounded) {
    const ComplexMatrix h = hermitian_function(s, support_power, -0.5);
    Eigensolver em(h * r * h, Eigen::EigenvaluesOnly);
    return std::log(em.eigenvalues().maxCoeff());
  }
  const ComplexMatrix h = hermitian_function(s, support_power, (1.0 - alpha) / (2.0 * alpha));
  Eigensolver em(h * r * h, Eigen::EigenvaluesOnly);
  double t = 0.0;
  for (Eigen::Index k = 0; k < em.eigenvalues().size(); ++k) {
    const double m = em.eigenvalues()(k);
    if (m > 0.0) t += std::pow(m, alpha);
  }
  return std::log(t) / (alpha - 1.0);
}

double asymmetry_alpha(const DensityMatrix& rho, const EnergySpectrum& spectrum, double alpha) {
  return quantum_renyi_divergence(rho, dephase(rho, spectrum), alpha);
}

double holevo_asymmetry(const DensityMatrix& rho, const EnergySpectrum& dephase_axis) {
  return asymmetry(rho, dephase_axis);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_size(rho.size(), sigma.size(), "fidelity operands");
  const ComplexMatrix a = hermitian_function(rho.matrix(), support_power, 0.5);
  const ComplexMatrix b = hermitian_function(sigma.matrix(), support_power, 0.5);
  Eigen::JacobiSVD<ComplexMatrix> svd(a * b);
  return svd.singularValues().sum();
}

double qfi(const DensityMatrix& rho, const EnergySpectrum& spectrum, double delta_t) {
  require_same_size(rho.size(), spectrum.size(), "state and spectrum");
  if (!(delta_t > 0.0) || !std::isfinite(delta_t)) throw InvalidInput("delta_t must be positive");
  const ComplexMatrix root = hermitian_function(rho.matrix(), support_power, 0.5);
  const double e0 = spectrum.min();
  auto q_at = [&](double dt) {
    ComplexVector phase(static_cast<Eigen::Index>(spectrum.size()));
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      phase(static_cast<Eigen::Index>(i)) = std::polar(1.0, -(spectrum[i] - e0) * dt);
    }
    // sqrt(U rho U^dag) = U sqrt(rho) U^dag.
    const ComplexMatrix moved = phase.asDiagonal() * root * phase.conjugate().asDiagonal();
    Eigen::JacobiSVD<ComplexMatrix> svd(root * moved);
    const double f = std::min(1.0, svd.singularValues().sum());
    return 4.0 * (1.0 - f * f) / (dt * dt);
  };
  const double q1 = q_at(delta_t);
  const double q2 = q_at(0.5 * delta_t);
  return std::max(0.0, (4.0 * q2 - q1) / 3.0);
}

FreeEnergySplit free_energy_split(const DensityMatrix& rho, const GibbsContext& ctx) {
  require_same_size(rho.size(), ctx.size(), "state and context");
  if (!(ctx.beta() > 0.0)) throw InvalidInput("free energies need beta > 0");
  const double kT = ctx.kT();
  double cross = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) cross += rho(i, i).real() * std::log(ctx.gibbs()[i]);
  const double s = entropy(rho.matrix());
  const double sd = entropy(dephase(rho.matrix(), ctx.spectrum()));
  return FreeEnergySplit{kT * (-s - cross), kT * (-sd - cross), kT * (sd - s)};
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)), n_(0) {
  if (kraus_.empty()) throw InvalidInput("channel needs at least one Kraus operator");
  const Eigen::Index n = kraus_.front().rows();
  if (n == 0) throw InvalidInput("Kraus operators must be non-empty");
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix& k : kraus_) {
    if (k.rows() != n || k.cols() != n) throw InvalidInput("Kraus operators must share a square shape");
    if (!k.allFinite()) throw InvalidInput("Kraus operator has a non-finite entry");
    s += k.adjoint() * k;
  }
  if ((s - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol::kValidation) {
    throw InvalidInput("Kraus operators are not trace preserving");
  }
  n_ = static_cast<std::size_t>(n);
}

QuantumChannel QuantumChannel::identity(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return QuantumChannel({ComplexMatrix::Identity(m, m)});
}

QuantumChannel QuantumChannel::unitary(const ComplexMatrix& u) { return QuantumChannel({u}); }

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& op) const {
  require_square(op, n_, "operator");
  ComplexMatrix out = ComplexMatrix::Zero(op.rows(), op.cols());
  for (const ComplexMatrix& k : kraus_) out += k * op * k.adjoint();
  return out;
}

DensityMatrix QuantumChannel::apply(const DensityMatrix& rho) const {
  return DensityMatrix(apply(rho.matrix()));
}

ComplexMatrix QuantumChannel::choi() const {
  const auto n = static_cast<Eigen::Index>(n_);
  ComplexMatrix j = ComplexMatrix::Zero(n * n, n * n);
  for (const ComplexMatrix& k : kraus_) {
    // Column vector with entry (x' n + x) = K(x', x).
    ComplexVector v(n * n);
    for (Eigen::Index xp = 0; xp < n; ++xp) {
      for (Eigen::Index x = 0; x < n; ++x) v(xp * n + x) = k(xp, x);
    }
    j += v * v.adjoint();
  }
  return j;
}

StochasticMatrix QuantumChannel::classical_action() const {
  const auto n = static_cast<Eigen::Index>(n_);
  RealMatrix p = RealMatrix::Zero(n, n);
  for (const ComplexMatrix& k : kraus_) p += k.cwiseAbs2();
  return StochasticMatrix(std::move(p));
}

QuantumChannel QuantumChannel::then(const QuantumChannel& next) const {
  require_same_size(n_, next.n_, "composed channels");
  std::vector<ComplexMatrix> ks;
  for (const ComplexMatrix& b : next.kraus_) {
    for (const ComplexMatrix& a : kraus_) ks.push_back(b * a);
  }
  return QuantumChannel(std::move(ks));
}

bool channel_covariance_check(const QuantumChannel& ch, const EnergySpectrum& spectrum, double tol) {
  require_same_size(ch.size(), spectrum.size(), "channel and spectrum");
  const std::size_t n = ch.size();
  const double delta = default_bohr_tolerance(spectrum);
  const ComplexMatrix j = ch.choi();
  std::vector<double> h(n * n);
  for (std::size_t xp = 0; xp < n; ++xp) {
    for (std::size_t x = 0; x < n; ++x) h[xp * n + x] = spectrum[xp] - spectrum[x];
  }
  for (std::size_t r = 0; r < n * n; ++r) {
    for (std::size_t c = 0; c < n * n; ++c) {
      if (std::abs(h[r] - h[c]) <= delta) continue;
      if (std::abs(j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))) > tol) return false;
    }
  }
  return true;
}

bool gibbs_preserving_check(const QuantumChannel& ch, const GibbsContext& ctx, double tol) {
  require_same_size(ch.size(), ctx.size(), "channel and context");
  const ComplexMatrix gamma = thermal_state(ctx).matrix();
  return (ch.apply(gamma) - gamma).cwiseAbs().maxCoeff() <= tol;
}

double cp_bound(const StochasticMatrix& P, const DensityMatrix& rho, const EnergySpectrum& spectrum,
                std::size_t xp, std::size_t yp) {
  const std::size_t n = spectrum.size();
  require_same_size(P.size(), n, "classical action and spectrum");
  require_same_size(rho.size(), n, "state and spectrum");
  if (xp >= n || yp >= n) throw InvalidInput("target index out of range");
  const auto table = mode_table(spectrum);
  double bound = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table[x][y] != table[xp][yp]) continue;
      bound += std::sqrt(P(xp, x) * P(yp, y)) * std::abs(rho(x, y));
    }
  }
  return bound;
}

double mode_shift_bound(const GibbsContext& ctx, double dE) {
  if (!(dE > 0.0) || !std::isfinite(dE)) throw InvalidInput("gap must be positive");
  if (ctx.size() != 3) throw InvalidInput("mode shift bound needs a three-level context");
  const EnergySpectrum& e = ctx.spectrum();
  const double scale = std::max(1.0, std::abs(dE));
  if (std::abs(e[1] - e[0] - dE) > 1e-9 * scale || std::abs(e[2] - e[1] - dE) > 1e-9 * scale) {
    throw InvalidInput("context is not equispaced with the given gap");
  }
  return std::exp(-ctx.beta() * dE);
}

QuantumChannel covariant_lift(const StochasticMatrix& G) {
  const auto n = static_cast<Eigen::Index>(G.size());
  std::vector<ComplexMatrix> ks;
  ComplexMatrix k0 = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k0(i, i) = std::sqrt(G(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));
  }
  ks.push_back(std::move(k0));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = G(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (i == j || v <= 0.0) continue;
      ComplexMatrix k = ComplexMatrix::Zero(n, n);
      k(i, j) = std::sqrt(v);
      ks.push_back(std::move(k));
    }
  }
  return QuantumChannel(std::move(ks));
}

namespace {

void require_qubit(const GibbsContext& ctx) {
  if (ctx.size() != 2) throw InvalidInput("qubit operations need a two-level context");
}

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput(std::string(what) + " must lie in [0, 1]");
}

double qubit_lambda(double p, double q, double g) {
  if (std::abs(p - g) <= kSupport) {
    if (std::abs(q - g) <= kSupport) return 0.0;
    throw UnreachableError("only the thermal population is reachable from a thermal population");
  }
  const double lambda = (q - p) * g / (g - p);
  if (lambda < -kSupport || lambda > 1.0 + kSupport) {
    throw UnreachableError("target population is not reachable");
  }
  return std::clamp(lambda, 0.0, 1.0);
}

}  // namespace

QubitBound qubit_coherence_bound(double p, double q, const GibbsContext& ctx, double c) {
  require_qubit(ctx);
  require_unit(p, "p");
  require_unit(q, "q");
  if (!(c >= 0.0) || c > std::sqrt(p * (1.0 - p)) + kSupport) {
    throw InvalidInput("coherence magnitude exceeds the positivity bound");
  }
  const double g = ctx.gibbs()[0];
  const double lambda = qubit_lambda(p, q, g);
  if (std::abs(p - g) <= kSupport) return QubitBound{lambda, c};
  const double prod = (q * (1.0 - g) - g * (1.0 - p)) * (p * (1.0 - g) - g * (1.0 - q));
  return QubitBound{lambda, std::sqrt(std::max(0.0, prod)) / std::abs(p - g) * c};
}

RealMatrix qubit_lambda_matrix(double lambda, const GibbsContext& ctx) {
  require_qubit(ctx);
  require_unit(lambda, "lambda");
  const double r = ctx.gibbs()[1] / ctx.gibbs()[0];
  RealMatrix G(2, 2);
  G << 1.0 - lambda * r, lambda, lambda * r, 1.0 - lambda;
  return G;
}

QuantumChannel qubit_optimal_channel(double p, double q, const GibbsContext& ctx) {
  require_qubit(ctx);
  require_unit(p, "p");
  require_unit(q, "q");
  const RealMatrix G = qubit_lambda_matrix(qubit_lambda(p, q, ctx.gibbs()[0]), ctx);
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  ComplexMatrix km = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = std::sqrt(G(0, 0));
  k0(1, 1) = std::sqrt(G(1, 1));
  k1(1, 0) = std::sqrt(G(1, 0));
  km(0, 1) = std::sqrt(G(0, 1));
  return QuantumChannel({k0, k1, km});
}

QuantumChannel qubit_partial_dephasing(double mu) {
  require_unit(mu, "mu");
  ComplexMatrix a = ComplexMatrix::Identity(2, 2) * std::sqrt(0.5 * (1.0 + mu));
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = std::sqrt(0.5 * (1.0 - mu));
  z(1, 1) = -z(0, 0);
  return QuantumChannel({a, z});
}

std::vector<QubitBoundaryPoint> qubit_reachable_boundary(double p, double c, const GibbsContext& ctx,
                                                          std::size_t samples) {
  require_qubit(ctx);
  require_unit(p, "p");
  if (samples < 2) throw InvalidInput("boundary needs at least two samples");
  if (!(c >= 0.0) || c > std::sqrt(p * (1.0 - p)) + kSupport) {
    throw InvalidInput("coherence magnitude exceeds the positivity bound");
  }
  const double g = ctx.gibbs()[0];
  const double r = ctx.gibbs()[1] / g;
  std::vector<QubitBoundaryPoint> out;
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double lambda = static_cast<double>(k) / static_cast<double>(samples - 1);
    const double q = p + lambda * (g - p) / g;
    const double d = std::sqrt(std::max(0.0, (1.0 - lambda * r) * (1.0 - lambda))) * c;
    out.push_back({lambda, q, d, 2.0 * d, 2.0 * q - 1.0});
  }
  return out;
}

double ladder_tail_bound(double dE, double beta, std::int64_t n_trunc) {
  if (!(dE > 0.0) || !(beta > 0.0)) throw InvalidInput("ladder needs dE > 0 and beta > 0");
  const double r = std::exp(-beta * dE);
  return std::pow(r, static_cast<double>(n_trunc)) / (1.0 - r);
}

std::vector<std::size_t> ladder_permutation(std::int64_t n_trunc) {
  if (n_trunc < 3) throw InvalidInput("ladder truncation needs at least 3 levels");
  const auto N = static_cast<std::size_t>(n_trunc);
  auto idx = [N](std::size_t s, std::size_t m) { return s * N + m; };
  std::vector<std::size_t> img(3 * N);
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t m = 0; m < N; ++m) {
      const std::size_t k = s + m;
      std::size_t to = idx(s, m);
      if (k == 1) {
        to = s == 1 ? idx(0, 1) : idx(1, 0);
      } else if (k >= 2 && k + 1 <= N) {
        if (s == 2) to = idx(1, k - 1);
        else if (s == 1) to = idx(0, k);
        else to = idx(2, k - 2);
      } else if (k == N) {
        to = s == 1 ? idx(2, N - 2) : idx(1, N - 1);
      }
      img[idx(s, m)] = to;
    }
  }
  return img;
}

ComplexMatrix ladder_map(const ComplexMatrix& op, double dE, double beta, std::int64_t n_trunc,
                         LadderDirection direction, double max_tail) {
  if (op.rows() != 3 || op.cols() != 3) throw InvalidInput("ladder acts on three-level operators");
  if (n_trunc < 3) throw InvalidInput("ladder truncation needs at least 3 levels");
  const double tail = ladder_tail_bound(dE, beta, n_trunc);
  if (tail > max_tail) {
    throw ResolutionError("bath truncation too small for the requested tail bound; raise n_trunc");
  }
  const auto N = static_cast<std::size_t>(n_trunc);
  std::vector<std::size_t> img = ladder_permutation(n_trunc);
  if (direction == LadderDirection::kUp) {
    std::vector<std::size_t> inv(img.size());
    for (std::size_t k = 0; k < img.size(); ++k) inv[img[k]] = k;
    img = std::move(inv);
  }
  const double r = std::exp(-beta * dE);
  std::vector<double> gamma(N);
  double z = 0.0;
  for (std::size_t m = 0; m < N; ++m) {
    gamma[m] = std::pow(r, static_cast<double>(m));
    z += gamma[m];
  }
  ComplexMatrix out = ComplexMatrix::Zero(3, 3);
  for (std::size_t m = 0; m < N; ++m) {
    const double w = gamma[m] / z;
    for (std::size_t s = 0; s < 3; ++s) {
      const std::size_t a = img[s * N + m];
      for (std::size_t t = 0; t < 3; ++t) {
        const std::size_t b = img[t * N + m];
        if (a % N != b % N) continue;
        out(static_cast<Eigen::Index>(a / N), static_cast<Eigen::Index>(b / N)) +=
            w * op(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t));
      }
    }
  }
  return out;
}

DensityMatrix ladder_simulate(const DensityMatrix& rho, double dE, double beta, std::int64_t n_trunc,
                              LadderDirection direction, double max_tail) {
  return DensityMatrix(ladder_map(rho.matrix(), dE, beta, n_trunc, direction, max_tail));
}

}  // namespace athermal
