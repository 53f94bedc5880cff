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

#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kfloquet/chain.hpp"
#include "kfloquet/direct.hpp"
#include "kfloquet/two_level.hpp"

namespace kfloquet {

enum class Method { Lift, Direct };

std::string_view to_string(Method m) noexcept;

struct SpectrumRow {
  double gamma;
  std::vector<double> quasienergies;  ///< N+1 values, ascending
};

struct SpectrumScan {
  double omega = 0.0;
  double nu = 0.0;
  int sites_minus_one = 0;
  std::vector<SpectrumRow> rows;
};

struct ScanOptions {
  Method method = Method::Lift;
  double tol = 1e-12;
  unsigned jobs = 0;  ///< 0: hardware concurrency
  /// Extra amplitudes merged into the uniform grid (e.g. located resonances).
  std::vector<double> extra_gammas;
};

/// Uniform grid gamma_min + k (gamma_max - gamma_min)/(steps-1).
std::vector<double> gamma_grid(double gamma_min, double gamma_max, int steps);

/// Quasi-energy spectrum of the sinusoidally driven chain along a Gamma grid.
/// Lift: two-level mu per point and the folded (N-2n) mu ladder.
/// Direct: eigenphases of the brute-force U(T).
/// Errors carry the failing Gamma in their message.
SpectrumScan scan_spectrum(const ChainSpec& spec, double omega, double gamma_min,
                           double gamma_max, int steps, const ScanOptions& options = {});

/// Chain spectrum at a single amplitude.
std::vector<double> spectrum_at(const ChainSpec& spec, double omega, double gamma,
                                Method method, double tol = 1e-12, unsigned jobs = 1);

/// Number of distinct values on the circle of circumference omega when
/// values closer than cluster_tol (modulo omega) are merged.
int count_distinct_levels(std::vector<double> quasienergies, double omega,
                          double cluster_tol = 1e-6);

struct ResonanceHit {
  double gamma_star = 0.0;
  int q = 0;
  int m = 1;
  double mu = 0.0;
  double residual = 0.0;  ///< |2 mu / omega - q/m|
};

struct ResonanceOptions {
  double tol = 1e-10;          ///< target |2 mu/omega - q/m|
  int prescan_points = 200;
  double integrator_tol = 1e-12;
  unsigned jobs = 1;
};

/// All Gamma in the bracket where 2 mu(Gamma)/omega = q/m. The bracket is
/// pre-scanned on a uniform grid; every sign change is refined.
/// Throws DomainError for invalid (q, m) and BracketError (carrying the
/// sampled values) when no sign change exists.
std::vector<ResonanceHit> find_gammas_for_ratio(int q, int m, const ChainSpec& spec,
                                                double omega,
                                                std::pair<double, double> bracket,
                                                const ResonanceOptions& options = {});

/// Lowest-Gamma root of find_gammas_for_ratio.
ResonanceHit find_gamma_for_ratio(int q, int m, const ChainSpec& spec, double omega,
                                  std::pair<double, double> bracket,
                                  const ResonanceOptions& options = {});

/// Amplitude where the signed two-level quasi-energy crosses zero (ordinary
/// dynamic localization / CDT). Lowest root in the bracket.
ResonanceHit find_localization_gamma(const ChainSpec& spec, double omega,
                                     std::pair<double, double> bracket,
                                     const ResonanceOptions& options = {});

struct Rational {
  long q;
  long m;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct RatioClass {
  bool rational = false;
  Rational convergent{0, 1};  ///< matched (or best) convergent with m <= m_max
  double error = 0.0;         ///< |2 mu/omega - q/m|
};

/// Continued-fraction classification of 2 mu/omega.
RatioClass classify_ratio(double mu, double omega, int m_max = 64, double tol = 1e-9);

struct FidelityTrace {
  std::vector<double> times;           ///< in units of T
  std::vector<double> reconstruction;  ///< |<psi(0)|psi(t)>|^2
  /// (sum_n |c_{N-n}(0)| |c_n(t)|)^2: overlap with the mirrored modulus profile.
  std::vector<double> mirror;
  /// |<mirror_image(psi(0), phi, P)|psi(t)>|^2 where S(t) is a swap, NaN elsewhere.
  std::vector<double> mirror_phase_aware;
  /// |c_n(t)|^2, one vector per time.
  std::vector<std::vector<double>> probabilities;
};

struct TraceOptions {
  Method method = Method::Lift;
  double tol = 1e-12;
  double swap_tol = 1e-6;
};

/// Samples the evolution at t = k T / samples_per_period, k = 0..periods *
/// samples_per_period. Requires a sinusoidal drive.
FidelityTrace fidelity_trace(const ChainSpec& spec, const DriveSpec& drive,
                             const StateVector& initial, int periods, int samples_per_period,
                             const TraceOptions& options = {});

/// Single-point fidelities at time t via the lift.
struct FidelityPoint {
  double reconstruction;
  double mirror;
};
FidelityPoint fidelity_at(const ChainSpec& spec, const DriveSpec& drive,
                          const StateVector& initial, double t, double tol = 1e-12);

double reconstruction_fidelity(const StateVector& initial, const StateVector& current);
double mirror_fidelity(const StateVector& initial, const StateVector& current);

}  // namespace kfloquet
