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

#include "kfloquet/chain.hpp"

#include <cmath>
#include <string>

#include "kfloquet/errors.hpp"

namespace kfloquet {

ChainSpec::ChainSpec(int sites_minus_one, double nu) : n_(sites_minus_one), nu_(nu) {
  if (sites_minus_one < 1) {
    throw DomainError("chain needs N >= 1 (at least two sites), got N=" +
                      std::to_string(sites_minus_one));
  }
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw DomainError("hopping scale nu must be positive and finite");
  }
}

std::string_view to_string(Waveform w) noexcept {
  switch (w) {
    case Waveform::Zero:
      return "zero";
    case Waveform::Dc:
      return "dc";
    case Waveform::Sinusoid:
      return "sinusoid";
  }
  return "unknown";
}

DriveSpec DriveSpec::dc(double amplitude) {
  if (!std::isfinite(amplitude)) throw DomainError("dc amplitude must be finite");
  return DriveSpec(Waveform::Dc, amplitude, 0.0);
}

DriveSpec DriveSpec::sinusoid(double amplitude, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("sinusoidal drive needs omega > 0");
  }
  if (!std::isfinite(amplitude) || !std::isfinite(amplitude / omega)) {
    throw DomainError("sinusoidal drive amplitude must give a finite Gamma = F0/omega");
  }
  return DriveSpec(Waveform::Sinusoid, amplitude, omega);
}

DriveSpec DriveSpec::from_gamma(double gamma, double omega) {
  return sinusoid(gamma * omega, omega);
}

StateVector::StateVector(std::vector<complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 2) throw DomainError("state vector needs at least two sites");
}

StateVector StateVector::delta(int sites, int site) {
  if (sites < 2) throw DomainError("state vector needs at least two sites");
  if (site < 0 || site >= sites) {
    throw DomainError("site index " + std::to_string(site) + " out of range 0.." +
                      std::to_string(sites - 1));
  }
  std::vector<complex> amps(static_cast<std::size_t>(sites));
  amps[static_cast<std::size_t>(site)] = 1.0;
  return StateVector(std::move(amps));
}

double StateVector::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& c : amps_) sum += std::norm(c);
  return sum;
}

StateVector StateVector::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("cannot normalize a zero or non-finite state");
  }
  std::vector<complex> out(amps_);
  for (auto& c : out) c /= norm;
  return StateVector(std::move(out));
}

complex StateVector::inner(const StateVector& other) const {
  if (other.size() != size()) throw DomainError("inner product of states of different size");
  complex sum = 0.0;
  for (std::size_t n = 0; n < amps_.size(); ++n) sum += std::conj(amps_[n]) * other.amps_[n];
  return sum;
}

double kappa(const ChainSpec& spec, int n) {
  const int big_n = spec.sites_minus_one();
  if (n < 0 || n > big_n - 1) {
    throw DomainError("coupling index " + std::to_string(n) + " out of range 0.." +
                      std::to_string(big_n - 1));
  }
  return spec.nu() * std::sqrt(static_cast<double>(n + 1) * static_cast<double>(big_n - n));
}

double drive_value(const DriveSpec& drive, double t) noexcept {
  switch (drive.waveform()) {
    case Waveform::Zero:
      return 0.0;
    case Waveform::Dc:
      return drive.amplitude();
    case Waveform::Sinusoid:
      return drive.amplitude() * std::cos(drive.omega() * t);
  }
  return 0.0;
}

double drive_phase_integral(const DriveSpec& drive, double t) noexcept {
  switch (drive.waveform()) {
    case Waveform::Zero:
      return 0.0;
    case Waveform::Dc:
      return drive.amplitude() * t;
    case Waveform::Sinusoid:
      return drive.gamma() * std::sin(drive.omega() * t);
  }
  return 0.0;
}

double fold_quasienergy(double energy, double omega) noexcept {
  double folded = energy - omega * std::round(energy / omega);
  if (folded <= -0.5 * omega) folded += omega;
  if (folded > 0.5 * omega) folded -= omega;
  return folded;
}

bool norm_preserved(const StateVector& state, double tol) noexcept {
  return std::abs(state.norm_squared() - 1.0) <= tol;
}

}  // namespace kfloquet
