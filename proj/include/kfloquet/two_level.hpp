// Copyright 2026 The kfloquet Authors
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

// The driven two-level (double-well) problem that governs the whole chain.
//
// S(t) solves i dS/dt = H2(t) S, S(0) = I with
//
//     H2(t) = [[-F(t)/2, nu], [nu, F(t)/2]],
//
// i.e. the linear Heisenberg equations of the single-mode creation
// operators of a driven bosonic junction. Its two Floquet multipliers
// exp(-/+ i mu T) fix the quasi-energy ladder of the chain.

#pragma once

#include <optional>

#include <Eigen/Core>
#include <Eigen/LU>

#include "kfloquet/chain.hpp"
#include "kfloquet/integrator.hpp"

namespace kfloquet {

using Matrix2c = Eigen::Matrix2cd;

struct TwoLevelPropagator {
  Matrix2c entries = Matrix2c::Identity();
  double time = 0.0;

  complex s11() const { return entries(0, 0); }
  complex s12() const { return entries(0, 1); }
  complex s21() const { return entries(1, 0); }
  complex s22() const { return entries(1, 1); }

  /// max |(S^dagger S - I)_ij|
  double unitarity_error() const;
  complex determinant() const { return entries.determinant(); }
};

struct FloquetResult {
  double mu = 0.0;     ///< nonnegative quasi-energy in [0, omega/2]
  TwoLevelPropagator monodromy;
  double ratio = 0.0;  ///< 2 mu / omega in [0, 1]
};

/// Integrates the two-level system to t_final with rel = abs = tol.
/// Throws DomainError on t_final < 0 or tol <= 0, NumericalError if the
/// integrator cannot converge.
TwoLevelPropagator integrate_two_level(const ChainSpec& spec, const DriveSpec& drive,
                                       double t_final, double tol = 1e-12);

/// Continues an existing propagator from S.time to t_final (t_final may be
/// smaller than S.time).
TwoLevelPropagator continue_two_level(const TwoLevelPropagator& from, const ChainSpec& spec,
                                      const DriveSpec& drive, double t_final,
                                      double tol = 1e-12);

/// Quasi-energy from the one-period propagator. The eigenphase is taken from
/// the trace, cos(mu T) = Re tr S / 2; close to the degenerate points
/// |tr S| -> 2 the sine is recovered from the traceless part instead, which
/// keeps full relative accuracy for mu -> 0 and mu -> omega/2.
///
/// Throws DomainError if S is not unitary (1e-10) or if S.time differs from
/// 2 pi/omega by more than 1e-12.
FloquetResult floquet_mu(const TwoLevelPropagator& monodromy, double omega);

/// Convenience: integrate one period of a sinusoidal drive and extract mu.
FloquetResult two_level_floquet(const ChainSpec& spec, const DriveSpec& drive,
                                double tol = 1e-12);

/// Quasi-energy carrying the sign of the sigma_x projection of the Floquet
/// vector, continuous through band crossings (mu passes through zero at
/// coherent destruction of tunneling instead of bouncing off it).
double signed_quasienergy(const TwoLevelPropagator& monodromy, double omega);

/// First-kind Bessel function of order zero.
double bessel_j0(double x);

/// High-frequency estimate mu ~ nu |J0(Gamma)|, not folded.
double mu_bessel_approx(const ChainSpec& spec, double gamma);

/// If S is antidiagonal within tol, returns phi = arg(S12).
std::optional<double> detect_swap(const TwoLevelPropagator& s, double tol = 1e-8);

/// Phase phi for which mirror_image() reproduces the chain state after an
/// antidiagonal S, up to a global phase: (arg S12 - arg S21)/2. Equals
/// arg(S12) for S = [[0, e^{i phi}], [e^{-i phi}, 0]]; for unit-determinant
/// swaps it differs from arg(S12) by pi/2.
double mirror_phase(const TwoLevelPropagator& s);

}  // namespace kfloquet
