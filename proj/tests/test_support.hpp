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

// Helpers shared by the unit suites: seeded generators and small oracles
// that do not go through the library's own code paths.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "kfloquet/chain.hpp"
#include "kfloquet/two_level.hpp"

namespace kfloquet::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Haar-like random SU(2) element from a normalized quaternion.
inline Matrix2c random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  double q[4];
  double norm = 0.0;
  for (double& x : q) {
    x = g(rng);
    norm += x * x;
  }
  norm = std::sqrt(norm);
  for (double& x : q) x /= norm;
  const complex a(q[0], q[1]);
  const complex b(q[2], q[3]);
  Matrix2c s;
  s << a, b, -std::conj(b), std::conj(a);
  return s;
}

inline StateVector random_state(std::mt19937_64& rng, int sites) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<complex> amps(static_cast<std::size_t>(sites));
  for (auto& z : amps) z = complex(g(rng), g(rng));
  return StateVector(std::move(amps)).normalized();
}

/// exp(-i t (a sigma_x + c sigma_z)) in closed form.
inline Matrix2c exp_static(double a, double c, double t) {
  const double w = std::hypot(a, c);
  Matrix2c out = Matrix2c::Identity() * std::cos(w * t);
  if (w > 0.0) {
    Matrix2c generator;
    generator << c, a, a, -c;
    out -= complex(0.0, std::sin(w * t) / w) * generator;
  }
  return out;
}

}  // namespace kfloquet::testing
