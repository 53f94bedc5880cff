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

#include "kfloquet/direct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "kfloquet/errors.hpp"
#include "kfloquet/integrator.hpp"
#include "kfloquet/parallel.hpp"

namespace kfloquet {
namespace {

constexpr complex kI{0.0, 1.0};

std::vector<double> couplings_for(const ChainSpec& spec,
                                  const std::optional<CouplingOverride>& override_) {
  const int big_n = spec.sites_minus_one();
  if (override_) {
    if (static_cast<int>(override_->kappas.size()) != big_n) {
      throw DomainError("coupling override needs exactly N values");
    }
    return override_->kappas;
  }
  std::vector<double> k(static_cast<std::size_t>(big_n));
  for (int n = 0; n < big_n; ++n) k[static_cast<std::size_t>(n)] = kappa(spec, n);
  return k;
}

// Three-term stencil of the chain equations; boundary hops are omitted.
class ChainRhs {
 public:
  ChainRhs(std::vector<double> kappas, const DriveSpec& drive)
      : kappas_(std::move(kappas)), drive_(drive) {}

  void operator()(const ComplexState& c, ComplexState& dc, double t) const {
    const std::size_t last = kappas_.size();
    const double force = drive_value(drive_, t);
    for (std::size_t n = 0; n <= last; ++n) {
      complex h = static_cast<double>(n) * force * c[n];
      if (n < last) h -= kappas_[n] * c[n + 1];
      if (n > 0) h -= kappas_[n - 1] * c[n - 1];
      dc[n] = -kI * h;
    }
  }

 private:
  std::vector<double> kappas_;
  DriveSpec drive_;
};

void check_options(const DirectOptions& options) {
  if (!(options.tol > 0.0) || !std::isfinite(options.tol)) {
    throw DomainError("tolerance must be positive");
  }
}

void check_norm(const ComplexState& c, double limit, double t) {
  double norm = 0.0;
  for (const auto& v : c) norm += std::norm(v);
  if (std::abs(norm - 1.0) > limit) {
    std::ostringstream msg;
    msg << "norm drifted to " << norm << " at t=" << t << " (limit " << limit << ")";
    throw IntegrityError(msg.str());
  }
}

ComplexState to_state(const StateVector& s) {
  return ComplexState(s.amplitudes().begin(), s.amplitudes().end());
}

}  // namespace

std::vector<TimedState> direct_evolve(const StateVector& state, const ChainSpec& spec,
                                      const DriveSpec& drive, double t_final, int samples,
                                      const DirectOptions& options) {
  check_options(options);
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw DomainError("t_final must be nonnegative");
  }
  if (samples < 1) throw DomainError("need at least one sample");
  if (static_cast<int>(state.size()) != spec.sites()) {
    throw DomainError("state size does not match the chain");
  }
  ChainRhs rhs(couplings_for(spec, options.couplings), drive);
  IntegratorOptions iopts;
  iopts.abs_tol = options.tol;
  iopts.rel_tol = options.tol;

  ComplexState c = to_state(state);
  const double norm0 = state.norm_squared();
  std::vector<TimedState> out;
  out.reserve(static_cast<std::size_t>(samples));
  double t = 0.0;
  for (int k = 1; k <= samples; ++k) {
    const double t_next = t_final * k / samples;
    integrate_adaptive(rhs, c, t, t_next, iopts);
    t = t_next;
    double norm = 0.0;
    for (const auto& v : c) norm += std::norm(v);
    if (std::abs(norm - norm0) > options.norm_limit) {
      std::ostringstream msg;
      msg << "norm drifted from " << norm0 << " to " << norm << " at t=" << t << " (limit "
          << options.norm_limit << ")";
      throw IntegrityError(msg.str());
    }
    out.push_back({t, StateVector(c)});
  }
  return out;
}

StateVector direct_propagate(const StateVector& state, const ChainSpec& spec,
                             const DriveSpec& drive, double t0, double t1,
                             const DirectOptions& options) {
  check_options(options);
  if (static_cast<int>(state.size()) != spec.sites()) {
    throw DomainError("state size does not match the chain");
  }
  ChainRhs rhs(couplings_for(spec, options.couplings), drive);
  IntegratorOptions iopts;
  iopts.abs_tol = options.tol;
  iopts.rel_tol = options.tol;
  ComplexState c = to_state(state);
  integrate_adaptive(rhs, c, t0, t1, iopts);
  return StateVector(std::move(c));
}

ChainPropagator direct_propagator(const ChainSpec& spec, const DriveSpec& drive, double t,
                                  const DirectOptions& options, unsigned jobs) {
  check_options(options);
  if (!(t >= 0.0)) throw DomainError("t must be nonnegative");
  const int dim = spec.sites();
  ChainPropagator out;
  out.entries = MatrixXc::Zero(dim, dim);
  out.time = t;
  out.phase_integral = drive_phase_integral(drive, t);
  ChainRhs rhs(couplings_for(spec, options.couplings), drive);
  IntegratorOptions iopts;
  iopts.abs_tol = options.tol;
  iopts.rel_tol = options.tol;

  parallel_for(static_cast<std::size_t>(dim), jobs, [&](std::size_t col) {
    ComplexState c(static_cast<std::size_t>(dim));
    c[col] = 1.0;
    integrate_adaptive(rhs, c, 0.0, t, iopts);
    check_norm(c, options.norm_limit, t);
    for (int row = 0; row < dim; ++row) {
      out.entries(row, static_cast<Eigen::Index>(col)) = c[static_cast<std::size_t>(row)];
    }
  });
  return out;
}

ChainPropagator direct_monodromy(const ChainSpec& spec, const DriveSpec& drive,
                                 const DirectOptions& options, unsigned jobs) {
  if (!drive.periodic()) throw DomainError("monodromy needs a sinusoidal drive");
  return direct_propagator(spec, drive, drive.period(), options, jobs);
}

Eigen::MatrixXd static_hamiltonian(const ChainSpec& spec,
                                   const std::optional<CouplingOverride>& couplings) {
  const auto k = couplings_for(spec, couplings);
  const int dim = spec.sites();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) {
    h(n, n + 1) = -k[static_cast<std::size_t>(n)];
    h(n + 1, n) = -k[static_cast<std::size_t>(n)];
  }
  return h;
}

std::vector<double> static_energies(const ChainSpec& spec) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(static_hamiltonian(spec),
                                                        Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> quasienergies_from_monodromy(const ChainPropagator& monodromy,
                                                 const ChainSpec& spec, double omega) {
  const int dim = spec.sites();
  if (monodromy.entries.rows() != dim) throw DomainError("monodromy size does not match chain");
  const double period = 2.0 * kPi / omega;

  Eigen::ComplexEigenSolver<MatrixXc> solver(monodromy.entries, true);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition of the monodromy failed");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> statics(static_hamiltonian(spec));
  const MatrixXc overlaps = statics.eigenvectors().cast<complex>().adjoint() * solver.eigenvectors();

  struct Level {
    double energy;
    Eigen::Index static_index;
  };
  std::vector<Level> levels(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) {
    Eigen::Index best = 0;
    overlaps.col(j).cwiseAbs().maxCoeff(&best);
    // U = exp(-i eps T)
    const double eps = -std::arg(solver.eigenvalues()(j)) / period;
    levels[static_cast<std::size_t>(j)] = {fold_quasienergy(eps, omega), best};
  }
  std::sort(levels.begin(), levels.end(),
            [](const Level& x, const Level& y) { return x.energy < y.energy; });
  // Order near-ties deterministically by the static eigenvector index.
  for (std::size_t lo = 0; lo < levels.size();) {
    std::size_t hi = lo + 1;
    while (hi < levels.size() && levels[hi].energy - levels[hi - 1].energy <= 1e-9) ++hi;
    std::stable_sort(levels.begin() + static_cast<std::ptrdiff_t>(lo),
                     levels.begin() + static_cast<std::ptrdiff_t>(hi),
                     [](const Level& x, const Level& y) { return x.static_index < y.static_index; });
    lo = hi;
  }
  std::vector<double> out;
  out.reserve(levels.size());
  for (const auto& lv : levels) out.push_back(lv.energy);
  return out;
}

std::vector<double> direct_quasienergies(const ChainSpec& spec, const DriveSpec& drive,
                                         const DirectOptions& options, unsigned jobs) {
  return quasienergies_from_monodromy(direct_monodromy(spec, drive, options, jobs), spec,
                                      drive.omega());
}

}  // namespace kfloquet
