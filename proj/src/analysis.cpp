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

#include "kfloquet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/tools/toms748_solve.hpp>

#include "kfloquet/errors.hpp"
#include "kfloquet/fock_lift.hpp"
#include "kfloquet/parallel.hpp"

namespace kfloquet {
namespace {

std::string gamma_context(double gamma, const std::exception& e) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "at Gamma=" << gamma << ": " << e.what();
  return msg.str();
}

// Roots of fn on a uniform pre-scan of the bracket, refined with TOMS 748.
std::vector<std::pair<double, double>> bracketed_roots(const std::function<double(double)>& fn,
                                                       std::pair<double, double> bracket,
                                                       const ResonanceOptions& options,
                                                       const std::string& label) {
  const auto [lo, hi] = bracket;
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("bracket must satisfy lo < hi");
  }
  if (lo < 0.0) throw DomainError("bracket must lie in Gamma >= 0");
  if (options.prescan_points < 2) throw DomainError("pre-scan needs at least two points");
  if (!(options.tol > 0.0)) throw DomainError("root tolerance must be positive");

  const auto grid = gamma_grid(lo, hi, options.prescan_points);
  std::vector<double> values(grid.size());
  parallel_for(grid.size(), options.jobs, [&](std::size_t i) {
    try {
      values[i] = fn(grid[i]);
    } catch (const NumericalError& e) {
      throw NumericalError(gamma_context(grid[i], e));
    }
  });

  std::vector<std::pair<double, double>> roots;  // (x, fn(x))
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      roots.emplace_back(grid[i], 0.0);
      continue;
    }
    if (i + 1 == grid.size() || values[i + 1] == 0.0) continue;
    if ((values[i] < 0.0) == (values[i + 1] < 0.0)) continue;

    std::uintmax_t max_iter = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(
        fn, grid[i], grid[i + 1], values[i], values[i + 1],
        boost::math::tools::eps_tolerance<double>(50), max_iter);
    const double fa = fn(a);
    const double fb = fn(b);
    const auto best = std::abs(fa) <= std::abs(fb) ? std::pair{a, fa} : std::pair{b, fb};
    if (std::abs(best.second) > options.tol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << label << ": refinement near Gamma=" << best.first << " stalled at residual "
          << std::abs(best.second) << " > " << options.tol;
      throw NumericalError(msg.str());
    }
    roots.push_back(best);
  }

  if (roots.empty()) {
    std::vector<BracketError::Sample> samples;
    samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) samples.push_back({grid[i], values[i]});
    std::ostringstream msg;
    msg.precision(6);
    msg << label << ": no sign change on [" << lo << ", " << hi << "]; g ranges over ["
        << *std::min_element(values.begin(), values.end()) << ", "
        << *std::max_element(values.begin(), values.end()) << "]";
    throw BracketError(msg.str(), std::move(samples));
  }
  return roots;
}

void validate_ratio(int q, int m) {
  if (m < 1 || q < 1) throw DomainError("ratio q/m needs positive integers");
  if (std::gcd(q, m) != 1) {
    throw DomainError("ratio " + std::to_string(q) + "/" + std::to_string(m) +
                      " is not irreducible");
  }
  if (q > m) throw DomainError("ratio q/m must not exceed 1");
}

}  // namespace

std::string_view to_string(Method m) noexcept { return m == Method::Lift ? "lift" : "direct"; }

std::vector<double> gamma_grid(double gamma_min, double gamma_max, int steps) {
  if (steps < 2) throw DomainError("Gamma grid needs at least two points");
  if (!(gamma_min >= 0.0) || !(gamma_min < gamma_max) || !std::isfinite(gamma_max)) {
    throw DomainError("Gamma range must satisfy 0 <= min < max");
  }
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double step = (gamma_max - gamma_min) / (steps - 1);
  for (int k = 0; k < steps; ++k) out[static_cast<std::size_t>(k)] = gamma_min + k * step;
  out.back() = gamma_max;
  return out;
}

std::vector<double> spectrum_at(const ChainSpec& spec, double omega, double gamma,
                                Method method, double tol, unsigned jobs) {
  const DriveSpec drive = DriveSpec::from_gamma(gamma, omega);
  std::vector<double> levels;
  if (method == Method::Lift) {
    const FloquetResult fr = two_level_floquet(spec, drive, tol);
    levels = chain_quasienergies(fr.mu, spec.sites_minus_one(), omega);
    std::sort(levels.begin(), levels.end());
  } else {
    DirectOptions opts;
    opts.tol = tol;
    levels = direct_quasienergies(spec, drive, opts, jobs);
  }
  return levels;
}

SpectrumScan scan_spectrum(const ChainSpec& spec, double omega, double gamma_min,
                           double gamma_max, int steps, const ScanOptions& options) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  auto gammas = gamma_grid(gamma_min, gamma_max, steps);
  for (double g : options.extra_gammas) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("extra Gamma must be >= 0");
    gammas.push_back(g);
  }
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());

  SpectrumScan scan;
  scan.omega = omega;
  scan.nu = spec.nu();
  scan.sites_minus_one = spec.sites_minus_one();
  scan.rows.resize(gammas.size());
  parallel_for(gammas.size(), options.jobs, [&](std::size_t i) {
    try {
      scan.rows[i] = {gammas[i], spectrum_at(spec, omega, gammas[i], options.method, options.tol)};
    } catch (const NumericalError& e) {
      throw NumericalError(gamma_context(gammas[i], e));
    }
  });
  return scan;
}

int count_distinct_levels(std::vector<double> quasienergies, double omega, double cluster_tol) {
  if (quasienergies.empty()) return 0;
  for (double& e : quasienergies) e = fold_quasienergy(e, omega);
  std::sort(quasienergies.begin(), quasienergies.end());
  int clusters = 1;
  for (std::size_t i = 1; i < quasienergies.size(); ++i) {
    if (quasienergies[i] - quasienergies[i - 1] > cluster_tol) ++clusters;
  }
  // The zone edges -omega/2 and omega/2 are the same point.
  if (clusters > 1 && quasienergies.front() + omega - quasienergies.back() <= cluster_tol) {
    --clusters;
  }
  return clusters;
}

std::vector<ResonanceHit> find_gammas_for_ratio(int q, int m, const ChainSpec& spec,
                                                double omega,
                                                std::pair<double, double> bracket,
                                                const ResonanceOptions& options) {
  validate_ratio(q, m);
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  const double target = static_cast<double>(q) / m;
  auto g = [&](double gamma) {
    return two_level_floquet(spec, DriveSpec::from_gamma(gamma, omega), options.integrator_tol)
               .ratio -
           target;
  };
  const std::string label = "ratio " + std::to_string(q) + "/" + std::to_string(m);
  std::vector<ResonanceHit> hits;
  for (const auto& [gamma, residual] : bracketed_roots(g, bracket, options, label)) {
    const double mu = (residual + target) * 0.5 * omega;
    hits.push_back({gamma, q, m, mu, std::abs(residual)});
  }
  return hits;
}

ResonanceHit find_gamma_for_ratio(int q, int m, const ChainSpec& spec, double omega,
                                  std::pair<double, double> bracket,
                                  const ResonanceOptions& options) {
  return find_gammas_for_ratio(q, m, spec, omega, bracket, options).front();
}

ResonanceHit find_localization_gamma(const ChainSpec& spec, double omega,
                                     std::pair<double, double> bracket,
                                     const ResonanceOptions& options) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  auto g = [&](double gamma) {
    const DriveSpec drive = DriveSpec::from_gamma(gamma, omega);
    const auto s = integrate_two_level(spec, drive, drive.period(), options.integrator_tol);
    return 2.0 * signed_quasienergy(s, omega) / omega;
  };
  const auto roots = bracketed_roots(g, bracket, options, "quasi-energy crossing");
  const auto& [gamma, residual] = roots.front();
  return {gamma, 0, 1, 0.5 * omega * std::abs(residual), std::abs(residual)};
}

RatioClass classify_ratio(double mu, double omega, int m_max, double tol) {
  if (m_max < 1) throw DomainError("m_max must be >= 1");
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  const double x = 2.0 * mu / omega;

  RatioClass result;
  // Convergents h/k of the continued fraction of x.
  long h_prev = 1, h_prev2 = 0;
  long k_prev = 0, k_prev2 = 1;
  double r = x;
  bool have = false;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(r);
    if (a_real > 1e15) break;
    const long a = static_cast<long>(a_real);
    const long h = a * h_prev + h_prev2;
    const long k = a * k_prev + k_prev2;
    if (k > m_max) break;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    have = true;
    result.convergent = {h, k};
    result.error = std::abs(x - static_cast<double>(h) / static_cast<double>(k));
    if (result.error <= tol) {
      result.rational = true;
      return result;
    }
    const double frac = r - a_real;
    if (frac <= 0.0) break;
    r = 1.0 / frac;
  }
  if (!have) {
    result.convergent = {static_cast<long>(std::floor(x)), 1};
    result.error = std::abs(x - std::floor(x));
  }
  return result;
}

double reconstruction_fidelity(const StateVector& initial, const StateVector& current) {
  return std::norm(initial.inner(current));
}

double mirror_fidelity(const StateVector& initial, const StateVector& current) {
  if (initial.size() != current.size()) throw DomainError("state sizes differ");
  const std::size_t last = initial.size() - 1;
  double overlap = 0.0;
  for (std::size_t n = 0; n <= last; ++n) {
    overlap += std::abs(initial[last - n]) * std::abs(current[n]);
  }
  return overlap * overlap;
}

FidelityTrace fidelity_trace(const ChainSpec& spec, const DriveSpec& drive,
                             const StateVector& initial, int periods, int samples_per_period,
                             const TraceOptions& options) {
  if (!drive.periodic()) throw DomainError("fidelity traces need a sinusoidal drive");
  if (periods < 1) throw DomainError("periods must be >= 1");
  if (samples_per_period < 1) throw DomainError("samples per period must be >= 1");
  if (static_cast<int>(initial.size()) != spec.sites()) {
    throw DomainError("initial state size does not match the chain");
  }
  const StateVector psi0 = initial.normalized();
  const double period = drive.period();
  const int total = periods * samples_per_period;

  FidelityTrace trace;
  trace.times.reserve(static_cast<std::size_t>(total) + 1);
  TwoLevelPropagator s;  // identity at t = 0
  StateVector psi = psi0;
  DirectOptions dopts;
  dopts.tol = options.tol;

  for (int k = 0; k <= total; ++k) {
    const double t = period * k / samples_per_period;
    if (k > 0) {
      const double t_prev = s.time;
      s = continue_two_level(s, spec, drive, t, options.tol);
      if (options.method == Method::Lift) {
        psi = lift_propagator(s, spec.sites_minus_one(), drive_phase_integral(drive, t)).apply(psi0);
      } else {
        psi = direct_propagate(psi, spec, drive, t_prev, t, dopts);
        if (std::abs(psi.norm_squared() - 1.0) > dopts.norm_limit) {
          throw IntegrityError("norm drift beyond limit in fidelity trace");
        }
      }
    }
    trace.times.push_back(static_cast<double>(k) / samples_per_period);
    trace.reconstruction.push_back(reconstruction_fidelity(psi0, psi));
    trace.mirror.push_back(mirror_fidelity(psi0, psi));
    if (detect_swap(s, options.swap_tol)) {
      const StateVector target =
          mirror_image(psi0, mirror_phase(s), drive_phase_integral(drive, t));
      trace.mirror_phase_aware.push_back(std::norm(target.inner(psi)));
    } else {
      trace.mirror_phase_aware.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    std::vector<double> probs(psi.size());
    for (std::size_t n = 0; n < psi.size(); ++n) probs[n] = std::norm(psi[n]);
    trace.probabilities.push_back(std::move(probs));
  }
  return trace;
}

FidelityPoint fidelity_at(const ChainSpec& spec, const DriveSpec& drive,
                          const StateVector& initial, double t, double tol) {
  const StateVector psi0 = initial.normalized();
  const auto s = integrate_two_level(spec, drive, t, tol);
  const StateVector psi =
      lift_propagator(s, spec.sites_minus_one(), drive_phase_integral(drive, t)).apply(psi0);
  return {reconstruction_fidelity(psi0, psi), mirror_fidelity(psi0, psi)};
}

}  // namespace kfloquet
