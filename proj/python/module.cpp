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
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "kfloquet/analysis.hpp"
#include "kfloquet/direct.hpp"
#include "kfloquet/fock_lift.hpp"
#include "kfloquet/serialize.hpp"
#include "kfloquet/two_level.hpp"

namespace py = pybind11;
using namespace kfloquet;

namespace {

Method method_from(const std::string& name) {
  if (name == "lift") return Method::Lift;
  if (name == "direct") return Method::Direct;
  throw DomainError("method must be 'lift' or 'direct'");
}

DriveSpec drive_from(const std::string& waveform, double amplitude, double omega) {
  if (waveform == "sinusoid") return DriveSpec::from_gamma(amplitude, omega);
  if (waveform == "dc") return DriveSpec::dc(amplitude);
  if (waveform == "zero") return DriveSpec::zero();
  throw DomainError("waveform must be 'sinusoid', 'dc' or 'zero'");
}

StateVector state_from(const Eigen::VectorXcd& amps) {
  return StateVector(std::vector<complex>(amps.data(), amps.data() + amps.size()));
}

py::dict hit_dict(const ResonanceHit& h) {
  py::dict d;
  d["gamma_star"] = h.gamma_star;
  d["q"] = h.q;
  d["m"] = h.m;
  d["mu"] = h.mu;
  d["residual"] = h.residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_kfloquet, m) {
  m.doc() = "Floquet analysis of ac-driven Krawtchouk chains";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);

  m.def(
      "kappa", [](int sites_minus_one, double nu, int n) { return kappa(ChainSpec(sites_minus_one, nu), n); },
      py::arg("sites_minus_one"), py::arg("nu"), py::arg("n"));

  m.def(
      "two_level_propagator",
      [](double nu, double t, const std::string& waveform, double amplitude, double omega,
         double tol) {
        return Eigen::Matrix2cd(
            integrate_two_level(ChainSpec(1, nu), drive_from(waveform, amplitude, omega), t, tol)
                .entries);
      },
      py::arg("nu"), py::arg("t"), py::arg("waveform") = "sinusoid", py::arg("amplitude") = 0.0,
      py::arg("omega") = 3.0, py::arg("tol") = 1e-12,
      "S(t). For the sinusoid waveform the amplitude is Gamma = F0/omega.");

  m.def(
      "mu",
      [](double nu, double omega, double gamma, double tol) {
        return two_level_floquet(ChainSpec(1, nu), DriveSpec::from_gamma(gamma, omega), tol).mu;
      },
      py::arg("nu"), py::arg("omega"), py::arg("gamma"), py::arg("tol") = 1e-12);

  m.def("bessel_j0", &bessel_j0, py::arg("x"));

  m.def(
      "chain_propagator",
      [](int sites_minus_one, double nu, double t, const std::string& waveform, double amplitude,
         double omega, double tol) {
        const ChainSpec spec(sites_minus_one, nu);
        const auto drive = drive_from(waveform, amplitude, omega);
        const auto s = integrate_two_level(spec, drive, t, tol);
        return Eigen::MatrixXcd(
            lift_propagator(s, sites_minus_one, drive_phase_integral(drive, t)).entries);
      },
      py::arg("sites_minus_one"), py::arg("nu"), py::arg("t"), py::arg("waveform") = "sinusoid",
      py::arg("amplitude") = 0.0, py::arg("omega") = 3.0, py::arg("tol") = 1e-12);

  m.def(
      "direct_propagator",
      [](int sites_minus_one, double nu, double t, const std::string& waveform, double amplitude,
         double omega, double tol, unsigned jobs) {
        DirectOptions opts;
        opts.tol = tol;
        py::gil_scoped_release release;
        return Eigen::MatrixXcd(direct_propagator(ChainSpec(sites_minus_one, nu),
                                                  drive_from(waveform, amplitude, omega), t,
                                                  opts, jobs)
                                    .entries);
      },
      py::arg("sites_minus_one"), py::arg("nu"), py::arg("t"), py::arg("waveform") = "sinusoid",
      py::arg("amplitude") = 0.0, py::arg("omega") = 3.0, py::arg("tol") = 1e-12,
      py::arg("jobs") = 1);

  m.def(
      "static_energies",
      [](int sites_minus_one, double nu) { return static_energies(ChainSpec(sites_minus_one, nu)); },
      py::arg("sites_minus_one"), py::arg("nu"));

  m.def(
      "spectrum_at",
      [](int sites_minus_one, double nu, double omega, double gamma, const std::string& method,
         double tol) {
        return spectrum_at(ChainSpec(sites_minus_one, nu), omega, gamma, method_from(method), tol);
      },
      py::arg("sites_minus_one"), py::arg("nu"), py::arg("omega"), py::arg("gamma"),
      py::arg("method") = "lift", py::arg("tol") = 1e-12);

  m.def(
      "scan_spectrum",
      [](int sites_minus_one, double nu, double omega, double gamma_min, double gamma_max,
         int steps, const std::string& method, unsigned jobs) {
        ScanOptions opts;
        opts.method = method_from(method);
        opts.jobs = jobs;
        SpectrumScan scan;
        {
          py::gil_scoped_release release;
          scan = scan_spectrum(ChainSpec(sites_minus_one, nu), omega, gamma_min, gamma_max, steps,
                               opts);
        }
        const auto rows = static_cast<py::ssize_t>(scan.rows.size());
        const auto cols = static_cast<py::ssize_t>(sites_minus_one) + 1;
        py::array_t<double> gammas(rows);
        py::array_t<double> levels({rows, cols});
        auto g = gammas.mutable_unchecked<1>();
        auto e = levels.mutable_unchecked<2>();
        for (py::ssize_t i = 0; i < rows; ++i) {
          g(i) = scan.rows[static_cast<std::size_t>(i)].gamma;
          for (py::ssize_t j = 0; j < cols; ++j) {
            e(i, j) = scan.rows[static_cast<std::size_t>(i)].quasienergies[static_cast<std::size_t>(j)];
          }
        }
        return py::make_tuple(gammas, levels);
      },
      py::arg("sites_minus_one"), py::arg("nu"), py::arg("omega"), py::arg("gamma_min"),
      py::arg("gamma_max"), py::arg("steps"), py::arg("method") = "lift", py::arg("jobs") = 0,
      "Returns (gammas, quasienergies[rows, N+1]).");

  m.def("count_distinct_levels", &count_distinct_levels, py::arg("quasienergies"),
        py::arg("omega"), py::arg("cluster_tol") = 1e-6);

  m.def(
      "find_gamma_for_ratio",
      [](int q, int m_den, double nu, double omega, std::pair<double, double> bracket, double tol) {
        ResonanceOptions opts;
        opts.tol = tol;
        return hit_dict(find_gamma_for_ratio(q, m_den, ChainSpec(1, nu), omega, bracket, opts));
      },
      py::arg("q"), py::arg("m"), py::arg("nu") = 1.0, py::arg("omega") = 3.0,
      py::arg("bracket") = std::pair<double, double>{0.0, 2.5}, py::arg("tol") = 1e-10);

  m.def(
      "find_localization_gamma",
      [](double nu, double omega, std::pair<double, double> bracket) {
        return hit_dict(find_localization_gamma(ChainSpec(1, nu), omega, bracket));
      },
      py::arg("nu") = 1.0, py::arg("omega") = 3.0,
      py::arg("bracket") = std::pair<double, double>{0.0, 2.5});

  m.def(
      "classify_ratio",
      [](double mu_value, double omega, int m_max, double tol) {
        const auto c = classify_ratio(mu_value, omega, m_max, tol);
        return py::make_tuple(c.rational, c.convergent.q, c.convergent.m, c.error);
      },
      py::arg("mu"), py::arg("omega"), py::arg("m_max") = 64, py::arg("tol") = 1e-9,
      "Returns (rational, q, m, error).");

  m.def(
      "fidelity_trace",
      [](int sites_minus_one, double nu, double omega, double gamma,
         const Eigen::VectorXcd& initial, int periods, int samples_per_period,
         const std::string& method) {
        TraceOptions opts;
        opts.method = method_from(method);
        const auto psi0 = state_from(initial).normalized();
        FidelityTrace trace;
        {
          py::gil_scoped_release release;
          trace = fidelity_trace(ChainSpec(sites_minus_one, nu), DriveSpec::from_gamma(gamma, omega),
                                 psi0, periods, samples_per_period, opts);
        }
        py::dict d;
        d["t_over_T"] = trace.times;
        d["reconstruction"] = trace.reconstruction;
        d["mirror"] = trace.mirror;
        d["mirror_phase_aware"] = trace.mirror_phase_aware;
        d["probabilities"] = trace.probabilities;
        return d;
      },
      py::arg("sites_minus_one"), py::arg("nu"), py::arg("omega"), py::arg("gamma"),
      py::arg("initial"), py::arg("periods"), py::arg("samples_per_period") = 1,
      py::arg("method") = "lift");
}
