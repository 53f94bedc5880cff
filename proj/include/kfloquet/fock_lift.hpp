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

#include <vector>

#include <Eigen/Core>

#include "kfloquet/chain.hpp"
#include "kfloquet/two_level.hpp"

namespace kfloquet {

using MatrixXc = Eigen::MatrixXcd;

/// U(t) on the chain: c_n(t) = sum_l U(n, l) c_l(0).
struct ChainPropagator {
  MatrixXc entries;
  double time = 0.0;
  double phase_integral = 0.0;

  int sites_minus_one() const { return static_cast<int>(entries.rows()) - 1; }
  double unitarity_error() const;
  StateVector apply(const StateVector& state) const;
};

inline constexpr int kDefaultLiftCap = 64;

/// Exact chain propagator from the two-level propagator S(t):
///
///   U(n,l) = e^{-i N P/2} sqrt(n!(N-n)!/(l!(N-l)!))
///            sum_k C(l,k) C(N-l,n-k) a^k b^(n-k) c^(l-k) d^(N-l-n+k)
///
/// where P = phase_integral and (a, b; c, d) = (s11, s21; s12, s22) are the
/// entries of S^dagger: the chain amplitudes transform with the inverse of
/// the Heisenberg map that S describes. k runs over max(0, n+l-N) ..
/// min(n, l), the support of both binomials, in ascending order.
///
/// Every summand is formed in log-magnitude/phase form and the row is
/// accumulated with Neumaier compensation relative to its largest term.
/// Throws DomainError for non-unitary S, N < 1, or N > cap.
ChainPropagator lift_propagator(const TwoLevelPropagator& s, int sites_minus_one,
                                double phase_integral, int cap = kDefaultLiftCap);

/// Quasi-energies fold((N - 2n) mu, omega) for n = 0..N, in site-ladder
/// order (not sorted). Requires 0 <= mu <= omega/2.
std::vector<double> chain_quasienergies(double mu, int sites_minus_one, double omega);

/// c'_n = c_{N-n} exp[i phi (N - 2n) - i (N/2) phase_integral].
StateVector mirror_image(const StateVector& state, double phi, double phase_integral);

}  // namespace kfloquet
