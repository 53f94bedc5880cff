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

// Domain types shared by every module: the Krawtchouk lattice, the external
// force and chain state vectors. Units have hbar = 1; times are in 1/nu.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace kfloquet {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// A chain of N+1 sites with hopping rates kappa_n = nu*sqrt((n+1)(N-n)).
class ChainSpec {
 public:
  /// Throws DomainError unless N >= 1 and nu > 0 (finite).
  ChainSpec(int sites_minus_one, double nu);

  int sites_minus_one() const noexcept { return n_; }
  int sites() const noexcept { return n_ + 1; }
  double nu() const noexcept { return nu_; }

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

 private:
  int n_;
  double nu_;
};

enum class Waveform { Zero, Dc, Sinusoid };

std::string_view to_string(Waveform w) noexcept;

/// External force F(t). The normalized amplitude Gamma = F0/omega is derived,
/// never stored.
class DriveSpec {
 public:
  static DriveSpec zero() noexcept { return DriveSpec(Waveform::Zero, 0.0, 0.0); }
  static DriveSpec dc(double amplitude);
  /// F(t) = amplitude * cos(omega t). Requires omega > 0.
  static DriveSpec sinusoid(double amplitude, double omega);
  /// Sinusoid parametrized by Gamma = F0/omega.
  static DriveSpec from_gamma(double gamma, double omega);

  Waveform waveform() const noexcept { return waveform_; }
  double amplitude() const noexcept { return amplitude_; }
  double omega() const noexcept { return omega_; }
  double gamma() const noexcept {
    return waveform_ == Waveform::Sinusoid ? amplitude_ / omega_ : 0.0;
  }
  bool periodic() const noexcept { return waveform_ == Waveform::Sinusoid; }
  /// 2*pi/omega; only meaningful for periodic drives.
  double period() const noexcept { return 2.0 * kPi / omega_; }

  friend bool operator==(const DriveSpec&, const DriveSpec&) = default;

 private:
  DriveSpec(Waveform w, double amplitude, double omega) noexcept
      : waveform_(w), amplitude_(amplitude), omega_(omega) {}

  Waveform waveform_;
  double amplitude_;
  double omega_;
};

/// Probability amplitudes c_0..c_N on the lattice sites.
class StateVector {
 public:
  explicit StateVector(std::vector<complex> amplitudes);

  /// c_n = delta_{n,site}. Throws DomainError for an out-of-range site.
  static StateVector delta(int sites, int site);

  std::size_t size() const noexcept { return amps_.size(); }
  int sites_minus_one() const noexcept { return static_cast<int>(amps_.size()) - 1; }
  std::span<const complex> amplitudes() const noexcept { return amps_; }
  const complex& operator[](std::size_t n) const { return amps_[n]; }

  double norm_squared() const noexcept;
  /// Rescales to unit norm. Throws DomainError on a zero vector.
  StateVector normalized() const;

  /// <this|other>
  complex inner(const StateVector& other) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<complex> amps_;
};

/// Hopping rate between sites n and n+1. Throws DomainError unless
/// 0 <= n <= N-1.
double kappa(const ChainSpec& spec, int n);

double drive_value(const DriveSpec& drive, double t) noexcept;

/// Closed-form integral of F over [0, t].
double drive_phase_integral(const DriveSpec& drive, double t) noexcept;

/// Folds a quasi-energy into the Brillouin zone (-omega/2, omega/2].
double fold_quasienergy(double energy, double omega) noexcept;

/// Norm check shared by every evolution routine: |norm^2 - 1| <= tol.
bool norm_preserved(const StateVector& state, double tol = 1e-10) noexcept;

}  // namespace kfloquet
