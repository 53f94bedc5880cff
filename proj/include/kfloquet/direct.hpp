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

// Brute-force integration of the full chain
//
//   i dc_n/dt = -kappa_n c_{n+1} - kappa_{n-1} c_{n-1} + n F(t) c_n,
//
// independent of the two-level reduction. Used as the oracle for the lift
// and for chains beyond the lift cap.

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kfloquet/chain.hpp"
#include "kfloquet/fock_lift.hpp"

namespace kfloquet {

/// Coupling law handed to the oracle. Empty means Krawtchouk couplings;
/// otherwise exactly N values kappa_0..kappa_{N-1}.
struct CouplingOverride {
  std::vector<double> kappas;
};

struct DirectOptions {
  double tol = 1e-12;
  /// Hard limit on |norm^2 - 1| at any sample.
  double norm_limit = 1e-8;
  std::optional<CouplingOverride> couplings;
};

struct TimedState {
  double time;
  StateVector state;
};

/// Evolves `state` to t_final and returns it at `samples` equally spaced
/// times t_final*k/samples, k = 1..samples.
///
/// Throws DomainError on bad arguments, NumericalError on integrator failure
/// and IntegrityError if the norm drifts by more than options.norm_limit.
std::vector<TimedState> direct_evolve(const StateVector& state, const ChainSpec& spec,
                                      const DriveSpec& drive, double t_final, int samples,
                                      const DirectOptions& options = {});

/// Single propagation between two arbitrary times (t1 < t0 runs backwards).
StateVector direct_propagate(const StateVector& state, const ChainSpec& spec,
                             const DriveSpec& drive, double t0, double t1,
                             const DirectOptions& options = {});

/// U(t) assembled column by column (N+1 independent integrations).
ChainPropagator direct_propagator(const ChainSpec& spec, const DriveSpec& drive, double t,
                                  const DirectOptions& options = {}, unsigned jobs = 1);

/// U(T) over one drive period. Requires a sinusoidal drive.
ChainPropagator direct_monodromy(const ChainSpec& spec, const DriveSpec& drive,
                                 const DirectOptions& options = {}, unsigned jobs = 1);

/// Eigenphases of U(T) as quasi-energies folded to (-omega/2, omega/2],
/// sorted ascending; ties within 1e-9 are ordered by the index of the static
/// eigenvector with the largest overlap.
std::vector<double> direct_quasienergies(const ChainSpec& spec, const DriveSpec& drive,
                                         const DirectOptions& options = {}, unsigned jobs = 1);

/// Same as direct_quasienergies for an already computed monodromy.
std::vector<double> quasienergies_from_monodromy(const ChainPropagator& monodromy,
                                                 const ChainSpec& spec, double omega);

/// Dense tridiagonal hopping Hamiltonian (F = 0), real symmetric.
Eigen::MatrixXd static_hamiltonian(const ChainSpec& spec,
                                   const std::optional<CouplingOverride>& couplings = {});

/// Ascending eigenvalues of the static Hamiltonian.
std::vector<double> static_energies(const ChainSpec& spec);

}  // namespace kfloquet
