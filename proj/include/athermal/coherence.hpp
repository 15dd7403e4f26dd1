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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "athermal/core.hpp"

namespace athermal {

/// 1e-9 times the spectral width.
double default_bohr_tolerance(const EnergySpectrum& spectrum);

struct BohrSpectrum {
  std::vector<double> frequencies;  // ascending, contains 0, closed under negation
};

/// Pairwise differences merged by single linkage within delta; negative delta means the default.
BohrSpectrum bohr_spectrum(const EnergySpectrum& spectrum, double delta = -1.0);

/// mode[a][b] = index into bohr_spectrum(...).frequencies of E_a - E_b.
std::vector<std::vector<std::size_t>> mode_table(const EnergySpectrum& spectrum, double delta = -1.0);

struct ModeComponent {
  double omega;
  ComplexMatrix component;
};

struct ModeDecomposition {
  std::vector<ModeComponent> components;  // ascending omega

  ComplexMatrix sum() const;
  const ModeComponent* find(double omega, double tol = 1e-12) const;
};

ModeDecomposition mode_decompose(const ComplexMatrix& op, const EnergySpectrum& spectrum,
                                 double delta = -1.0);
ModeDecomposition mode_decompose(const DensityMatrix& rho, const EnergySpectrum& spectrum,
                                 double delta = -1.0);

/// Keeps the omega = 0 mode.
ComplexMatrix dephase(const ComplexMatrix& op, const EnergySpectrum& spectrum, double delta = -1.0);
DensityMatrix dephase(const DensityMatrix& rho, const EnergySpectrum& spectrum, double delta = -1.0);

double von_neumann_entropy(const DensityMatrix& rho);

/// S(D(rho)) - S(rho).
double asymmetry(const DensityMatrix& rho, const EnergySpectrum& spectrum);

/// Petz form on (0,1), sandwiched form above 1, limits at 0, 1 and infinity.
double quantum_renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha);

double asymmetry_alpha(const DensityMatrix& rho, const EnergySpectrum& spectrum, double alpha);

/// Dephasing along an arbitrary axis spectrum, then entropy gain.
double holevo_asymmetry(const DensityMatrix& rho, const EnergySpectrum& dephase_axis);

/// Fidelity-based quantum Fisher information with Richardson extrapolation over dt, dt/2.
double qfi(const DensityMatrix& rho, const EnergySpectrum& spectrum, double delta_t = 1e-3);

/// Fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

struct FreeEnergySplit {
  double total;
  double classical;
  double coherent;
};

FreeEnergySplit free_energy_split(const DensityMatrix& rho, const GibbsContext& ctx);

class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

  static QuantumChannel identity(std::size_t n);
  static QuantumChannel unitary(const ComplexMatrix& u);

  std::size_t size() const noexcept { return n_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }

  ComplexMatrix apply(const ComplexMatrix& op) const;
  DensityMatrix apply(const DensityMatrix& rho) const;

  /// J[(x' n + x), (y' n + y)] = <x'| E(|x><y|) |y'>.
  ComplexMatrix choi() const;

  /// P(x', x) = <x'| E(|x><x|) |x'>.
  StochasticMatrix classical_action() const;

  QuantumChannel then(const QuantumChannel& next) const;

 private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t n_;
};

bool channel_covariance_check(const QuantumChannel& ch, const EnergySpectrum& spectrum,
                              double tol = tol::kIdentity);

bool gibbs_preserving_check(const QuantumChannel& ch, const GibbsContext& ctx,
                            double tol = tol::kIdentity);

/// Sum over same-frequency pairs (x, y) of sqrt(P(x'|x) P(y'|y)) |rho_xy|.
double cp_bound(const StochasticMatrix& P, const DensityMatrix& rho, const EnergySpectrum& spectrum,
                std::size_t xp, std::size_t yp);

/// e^{-beta dE} for an equispaced three-level context with gap dE.
double mode_shift_bound(const GibbsContext& ctx, double dE);

/// Covariant, Gibbs-preserving channel with classical action G.
QuantumChannel covariant_lift(const StochasticMatrix& G);

struct QubitBound {
  double lambda;
  double d_max;
};

/// p, q are ground populations; c = |rho_01|.
QubitBound qubit_coherence_bound(double p, double q, const GibbsContext& ctx, double c);

RealMatrix qubit_lambda_matrix(double lambda, const GibbsContext& ctx);

QuantumChannel qubit_optimal_channel(double p, double q, const GibbsContext& ctx);

/// Off-diagonals scaled by mu in [0, 1].
QuantumChannel qubit_partial_dephasing(double mu);

struct QubitBoundaryPoint {
  double lambda;
  double q;
  double d;
  double bloch_x;
  double bloch_z;
};

std::vector<QubitBoundaryPoint> qubit_reachable_boundary(double p, double c, const GibbsContext& ctx,
                                                          std::size_t samples);

enum class LadderDirection { kUp, kDown };

inline constexpr double kDefaultLadderTail = 1e-9;

/// r^N / (1 - r) with r = e^{-beta dE}.
double ladder_tail_bound(double dE, double beta, std::int64_t n_trunc);

/// Image of |s; n> (index s * N + n) under the energy-preserving permutation.
std::vector<std::size_t> ladder_permutation(std::int64_t n_trunc);

/// tr_B(U (X (x) gamma_B) U^dag) for any 3x3 operator X; U^dag for kUp.
ComplexMatrix ladder_map(const ComplexMatrix& op, double dE, double beta, std::int64_t n_trunc,
                         LadderDirection direction, double max_tail = kDefaultLadderTail);

DensityMatrix ladder_simulate(const DensityMatrix& rho, double dE, double beta, std::int64_t n_trunc,
                              LadderDirection direction, double max_tail = kDefaultLadderTail);

}  // namespace athermal
