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

#include "kfloquet/fock_lift.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "kfloquet/errors.hpp"

namespace kfloquet {
namespace {

// Summands are formed and accumulated in extended precision: the binomial
// sum cancels heavily for large N, so the working precision sets the
// unitarity floor of the result.
using wide = long double;

// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(wide x) noexcept {
    const wide t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  wide value() const noexcept { return sum_ + comp_; }

 private:
  wide sum_ = 0.0L;
  wide comp_ = 0.0L;
};

// One S entry raised to integer powers in polar form. An exactly vanishing
// entry contributes 1 for exponent 0 and kills the term otherwise.
struct PolarEntry {
  wide log_abs;
  wide phase;
  bool zero;

  explicit PolarEntry(complex z)
      : log_abs(z == 0.0 ? 0.0L : std::log(std::hypot(wide(z.real()), wide(z.imag())))),
        phase(std::atan2(wide(z.imag()), wide(z.real()))),
        zero(z == 0.0) {}
};

struct Term {
  wide log_mag;
  wide phase;
};

// Closest matrix of the form [[u, v], [-conj(v), conj(u)]] with |u|^2 + |v|^2 = 1.
Matrix2c nearest_su2(const Matrix2c& m) {
  const complex u = 0.5 * (m(0, 0) + std::conj(m(1, 1)));
  const complex v = 0.5 * (m(0, 1) - std::conj(m(1, 0)));
  const double scale = 1.0 / std::sqrt(std::norm(u) + std::norm(v));
  Matrix2c out;
  out << scale * u, scale * v, -scale * std::conj(v), scale * std::conj(u);
  return out;
}

}  // namespace

double ChainPropagator::unitarity_error() const {
  const auto n = entries.rows();
  return (entries.adjoint() * entries - MatrixXc::Identity(n, n)).cwiseAbs().maxCoeff();
}

StateVector ChainPropagator::apply(const StateVector& state) const {
  if (static_cast<Eigen::Index>(state.size()) != entries.cols()) {
    throw DomainError("state size does not match propagator dimension");
  }
  const auto amps = state.amplitudes();
  Eigen::VectorXcd in(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) in(static_cast<Eigen::Index>(i)) = amps[i];
  const Eigen::VectorXcd out = entries * in;
  return StateVector(std::vector<complex>(out.data(), out.data() + out.size()));
}

ChainPropagator lift_propagator(const TwoLevelPropagator& s, int sites_minus_one,
                                double phase_integral, int cap) {
  const int big_n = sites_minus_one;
  if (big_n < 1) throw DomainError("lift needs N >= 1");
  if (big_n > cap) {
    throw DomainError("N=" + std::to_string(big_n) + " exceeds the validated lift range (N <= " +
                      std::to_string(cap) + "); use the direct integrator instead");
  }
  if (s.unitarity_error() > 1e-9) throw DomainError("two-level propagator is not unitary");

  // The chain amplitudes follow the inverse of the operator map encoded by S.
  // Integrator drift is removed first by projecting onto SU(2); the lift
  // would otherwise amplify it roughly N-fold.
  const Matrix2c sd = nearest_su2(s.entries).adjoint();
  const PolarEntry a(sd(0, 0));  // S11 in the binomial sum
  const PolarEntry b(sd(1, 0));  // S21
  const PolarEntry c(sd(0, 1));  // S12
  const PolarEntry d(sd(1, 1));  // S22

  std::vector<wide> log_fact(static_cast<std::size_t>(big_n) + 1);
  for (int k = 0; k <= big_n; ++k) log_fact[static_cast<std::size_t>(k)] = std::lgamma(k + 1.0L);
  auto lf = [&](int k) { return log_fact[static_cast<std::size_t>(k)]; };
  auto log_binom = [&](int top, int bottom) { return lf(top) - lf(bottom) - lf(top - bottom); };

  ChainPropagator out;
  out.entries = MatrixXc::Zero(big_n + 1, big_n + 1);
  out.phase_integral = phase_integral;
  out.time = s.time;
  const complex global = std::polar(1.0, -0.5 * big_n * phase_integral);

  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(big_n) + 1);
  for (int n = 0; n <= big_n; ++n) {
    for (int l = 0; l <= big_n; ++l) {
      terms.clear();
      const int k_lo = std::max(0, n + l - big_n);
      const int k_hi = std::min(n, l);
      for (int k = k_lo; k <= k_hi; ++k) {
        const std::array<std::pair<const PolarEntry*, int>, 4> factors{
            {{&a, k}, {&b, n - k}, {&c, l - k}, {&d, big_n - l - n + k}}};
        Term term{log_binom(l, k) + log_binom(big_n - l, n - k), 0.0L};
        bool vanishes = false;
        for (const auto& [entry, power] : factors) {
          if (power == 0) continue;
          if (entry->zero) {
            vanishes = true;
            break;
          }
          term.log_mag += power * entry->log_abs;
          term.phase += power * entry->phase;
        }
        if (!vanishes) terms.push_back(term);
      }
      if (terms.empty()) continue;

      wide max_log = -std::numeric_limits<wide>::infinity();
      for (const auto& t : terms) max_log = std::max(max_log, t.log_mag);
      CompensatedSum re;
      CompensatedSum im;
      for (const auto& t : terms) {
        const wide mag = std::exp(t.log_mag - max_log);
        re.add(mag * std::cos(t.phase));
        im.add(mag * std::sin(t.phase));
      }
      const wide scale = std::exp(max_log + 0.5L * (lf(n) + lf(big_n - n) - lf(l) - lf(big_n - l)));
      out.entries(n, l) = global * complex(static_cast<double>(scale * re.value()),
                                           static_cast<double>(scale * im.value()));
    }
  }
  return out;
}

std::vector<double> chain_quasienergies(double mu, int sites_minus_one, double omega) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (sites_minus_one < 1) throw DomainError("chain needs N >= 1");
  if (!(mu >= 0.0) || mu > 0.5 * omega) {
    throw DomainError("quasi-energy mu must lie in [0, omega/2]");
  }
  std::vector<double> out(static_cast<std::size_t>(sites_minus_one) + 1);
  for (int n = 0; n <= sites_minus_one; ++n) {
    out[static_cast<std::size_t>(n)] = fold_quasienergy((sites_minus_one - 2 * n) * mu, omega);
  }
  return out;
}

StateVector mirror_image(const StateVector& state, double phi, double phase_integral) {
  const int big_n = state.sites_minus_one();
  std::vector<complex> out(state.size());
  for (int n = 0; n <= big_n; ++n) {
    const double phase = phi * (big_n - 2 * n) - 0.5 * big_n * phase_integral;
    out[static_cast<std::size_t>(n)] =
        state[static_cast<std::size_t>(big_n - n)] * std::polar(1.0, phase);
  }
  return StateVector(std::move(out));
}

}  // namespace kfloquet
