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

#include "kfloquet/two_level.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/special_functions/bessel.hpp>

#include "kfloquet/errors.hpp"

namespace kfloquet {
namespace {

constexpr complex kI{0.0, 1.0};

// S is stored column-major as (s11, s21, s12, s22).
ComplexState to_state(const Matrix2c& s) { return {s(0, 0), s(1, 0), s(0, 1), s(1, 1)}; }

Matrix2c from_state(const ComplexState& y) {
  Matrix2c s;
  s << y[0], y[2], y[1], y[3];
  return s;
}

void check_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
}

}  // namespace

double TwoLevelPropagator::unitarity_error() const {
  return (entries.adjoint() * entries - Matrix2c::Identity()).cwiseAbs().maxCoeff();
}

TwoLevelPropagator continue_two_level(const TwoLevelPropagator& from, const ChainSpec& spec,
                                      const DriveSpec& drive, double t_final, double tol) {
  check_tolerance(tol);
  if (!std::isfinite(t_final)) throw DomainError("t_final must be finite");
  const double nu = spec.nu();
  // dS/dt = -i H2(t) S, column by column.
  auto rhs = [&](const ComplexState& y, ComplexState& dy, double t) {
    const double half_f = 0.5 * drive_value(drive, t);
    for (int col = 0; col < 2; ++col) {
      const complex top = y[2 * col];
      const complex bottom = y[2 * col + 1];
      dy[2 * col] = -kI * (-half_f * top + nu * bottom);
      dy[2 * col + 1] = -kI * (nu * top + half_f * bottom);
    }
  };
  ComplexState y = to_state(from.entries);
  IntegratorOptions opts;
  opts.abs_tol = tol;
  opts.rel_tol = tol;
  integrate_adaptive(rhs, y, from.time, t_final, opts);
  return TwoLevelPropagator{from_state(y), t_final};
}

TwoLevelPropagator integrate_two_level(const ChainSpec& spec, const DriveSpec& drive,
                                       double t_final, double tol) {
  if (!(t_final >= 0.0)) throw DomainError("t_final must be nonnegative");
  return continue_two_level(TwoLevelPropagator{}, spec, drive, t_final, tol);
}

FloquetResult floquet_mu(const TwoLevelPropagator& monodromy, double omega) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  const double period = 2.0 * kPi / omega;
  if (std::abs(monodromy.time - period) > 1e-12 * std::max(1.0, period)) {
    std::ostringstream msg;
    msg << "monodromy time " << monodromy.time << " is not one period 2pi/omega = " << period;
    throw DomainError(msg.str());
  }
  if (monodromy.unitarity_error() > 1e-10) {
    throw DomainError("monodromy is not unitary");
  }
  if (std::abs(monodromy.determinant() - 1.0) > 1e-10) {
    throw DomainError("monodromy must have unit determinant");
  }

  const Matrix2c& s = monodromy.entries;
  // Eigenvalues exp(-/+ i theta): cos theta from the trace, sin theta from
  // the traceless part, which stays accurate where the trace saturates.
  const double cos_theta = 0.5 * (s(0, 0) + s(1, 1)).real();
  const double sin_theta =
      std::sqrt(0.25 * std::norm(s(0, 0) - s(1, 1)) + std::abs(s(0, 1) * s(1, 0)));
  const double theta = std::atan2(sin_theta, cos_theta);

  FloquetResult result;
  result.monodromy = monodromy;
  result.mu = theta == kPi ? 0.5 * omega : theta / period;
  result.mu = std::clamp(result.mu, 0.0, 0.5 * omega);
  result.ratio = 2.0 * result.mu / omega;
  return result;
}

FloquetResult two_level_floquet(const ChainSpec& spec, const DriveSpec& drive, double tol) {
  if (!drive.periodic()) throw DomainError("Floquet analysis needs a sinusoidal drive");
  return floquet_mu(integrate_two_level(spec, drive, drive.period(), tol), drive.omega());
}

double signed_quasienergy(const TwoLevelPropagator& monodromy, double omega) {
  const FloquetResult fr = floquet_mu(monodromy, omega);
  const Matrix2c& s = monodromy.entries;
  // sin(theta) n_x and sin(theta) n_z of S = cos(theta) I - i sin(theta) n.sigma
  const double x = -0.5 * (s(0, 1) + s(1, 0)).imag();
  const double z = -0.5 * (s(0, 0) - s(1, 1)).imag();
  const double sign = x != 0.0 ? std::copysign(1.0, x) : std::copysign(1.0, z);
  return sign * fr.mu;
}

double bessel_j0(double x) { return boost::math::cyl_bessel_j(0, x); }

double mu_bessel_approx(const ChainSpec& spec, double gamma) {
  return spec.nu() * std::abs(bessel_j0(gamma));
}

std::optional<double> detect_swap(const TwoLevelPropagator& s, double tol) {
  if (std::abs(s.s11()) <= tol && std::abs(s.s22()) <= tol) return std::arg(s.s12());
  return std::nullopt;
}

double mirror_phase(const TwoLevelPropagator& s) {
  return 0.5 * (std::arg(s.s12()) - std::arg(s.s21()));
}

}  // namespace kfloquet
