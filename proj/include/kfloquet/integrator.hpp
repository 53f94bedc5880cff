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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <sstream>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "kfloquet/errors.hpp"

namespace kfloquet {

struct IntegratorOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_steps = 20'000'000;
};

struct IntegrationStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double last_dt = 0.0;
};

using ComplexState = std::vector<std::complex<double>>;

/// Advances y' = rhs(y, t) from t0 to t1 (either direction) with an
/// embedded Runge-Kutta-Fehlberg 7(8) pair under combined absolute/relative
/// error control. `rhs` has the odeint signature
/// void(const ComplexState&, ComplexState&, double).
template <class Rhs>
IntegrationStats integrate_adaptive(Rhs&& rhs, ComplexState& y, double t0, double t1,
                                    const IntegratorOptions& opts = {}) {
  namespace ode = boost::numeric::odeint;
  if (!(opts.abs_tol > 0.0) || !(opts.rel_tol >= 0.0)) {
    throw DomainError("integrator tolerances must be positive");
  }
  IntegrationStats stats;
  if (t1 == t0) return stats;

  auto stepper = ode::make_controlled(opts.abs_tol, opts.rel_tol,
                                      ode::runge_kutta_fehlberg78<ComplexState>());
  const double span = t1 - t0;
  const double direction = span > 0 ? 1.0 : -1.0;
  double t = t0;
  double dt = direction * std::min(std::abs(span), 1e-2);
  // Stop once the remaining interval is below a few ulps of t1.
  const double eps = 4.0 * std::numeric_limits<double>::epsilon() *
                     std::max({1.0, std::abs(t0), std::abs(t1)});

  while (direction * (t1 - t) > eps) {
    if (stats.accepted + stats.rejected >= opts.max_steps) {
      std::ostringstream msg;
      msg << "integrator exceeded " << opts.max_steps << " steps at t=" << t << " of ["
          << t0 << ", " << t1 << "], dt=" << dt << ", accepted=" << stats.accepted
          << ", rejected=" << stats.rejected;
      throw NumericalError(msg.str());
    }
    if (direction * (t + dt - t1) > 0) dt = t1 - t;
    const double dt_before = dt;
    if (stepper.try_step(rhs, y, t, dt) == ode::success) {
      ++stats.accepted;
      stats.last_dt = dt_before;
    } else {
      ++stats.rejected;
      if (std::abs(dt) < eps || !std::isfinite(dt)) {
        std::ostringstream msg;
        msg << "integrator step size underflow at t=" << t << " (dt=" << dt
            << ", accepted=" << stats.accepted << ", rejected=" << stats.rejected << ")";
        throw NumericalError(msg.str());
      }
    }
  }
  for (const auto& v : y) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError("integrator produced a non-finite state");
    }
  }
  return stats;
}

}  // namespace kfloquet
