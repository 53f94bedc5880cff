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

#include "kfloquet/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "kfloquet/analysis.hpp"
#include "kfloquet/direct.hpp"
#include "kfloquet/errors.hpp"
#include "kfloquet/fock_lift.hpp"
#include "kfloquet/serialize.hpp"
#include "kfloquet/two_level.hpp"

namespace kfloquet::cli {
namespace {

using nlohmann::json;

/// Options shared by all subcommands; flag names double as config-file keys.
struct CommonConfig {
  double nu = 1.0;
  double omega = 3.0;
  int sites = 41;
  double tol = 1e-12;
  std::string method = "lift";
  std::string out = "-";
  std::string format;  // csv | json; inferred from --out when empty
  unsigned jobs = 0;
};

double parse_real(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw DomainError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc() || ptr != last) {
    throw DomainError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Method parse_method(const std::string& m) {
  if (m == "lift") return Method::Lift;
  if (m == "direct") return Method::Direct;
  throw DomainError("unknown method '" + m + "' (expected lift or direct)");
}

void validate_common(const CommonConfig& c) {
  if (!(c.nu > 0.0) || !std::isfinite(c.nu)) throw DomainError("--nu must be positive");
  if (!(c.omega > 0.0) || !std::isfinite(c.omega)) throw DomainError("--omega must be positive");
  if (c.sites < 2) throw DomainError("--sites must be at least 2");
  if (!(c.tol > 0.0) || !(c.tol < 1.0)) throw DomainError("--tol must lie in (0, 1)");
  parse_method(c.method);
  if (!c.format.empty() && c.format != "csv" && c.format != "json") {
    throw DomainError("--format must be csv or json");
  }
}

bool wants_json(const CommonConfig& c) {
  if (!c.format.empty()) return c.format == "json";
  return c.out.size() >= 5 && c.out.compare(c.out.size() - 5, 5, ".json") == 0;
}

json common_params(const CommonConfig& c) {
  return {{"nu", c.nu}, {"omega", c.omega}, {"sites", c.sites}, {"tol", c.tol},
          {"method", c.method}};
}

/// Writes through `writer` to --out (or stdout for "-").
void emit(const CommonConfig& c, std::ostream& stdout_, const std::function<void(std::ostream&)>& writer) {
  if (c.out == "-" || c.out.empty()) {
    writer(stdout_);
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + c.out + "'");
  writer(file);
  if (!file) throw NumericalError("failed writing '" + c.out + "'");
}

void add_common(CLI::App* sub, CommonConfig& c) {
  sub->add_option("--nu", c.nu, "hopping scale nu")->capture_default_str();
  sub->add_option("--omega", c.omega, "drive angular frequency")->capture_default_str();
  sub->add_option("--sites", c.sites, "number of lattice sites N+1")->capture_default_str();
  sub->add_option("--tol", c.tol, "integrator tolerance (relative and absolute)")
      ->capture_default_str();
  sub->add_option("--method", c.method, "lift | direct")->capture_default_str();
  sub->add_option("--out", c.out, "output path, - for stdout")->capture_default_str();
  sub->add_option("--format", c.format, "csv | json (default: from --out extension)");
  sub->add_option("--jobs", c.jobs, "worker threads, 0 = all cores")->capture_default_str();
}

// --- spectrum ----------------------------------------------------------------

int cmd_spectrum(const CommonConfig& c, const std::string& gamma_text, std::ostream& out) {
  validate_common(c);
  const GammaRange range = parse_gamma(gamma_text);
  if (range.single) throw DomainError("spectrum needs a Gamma range min:max:steps");
  const ChainSpec spec(c.sites - 1, c.nu);
  ScanOptions opts;
  opts.method = parse_method(c.method);
  opts.tol = c.tol;
  opts.jobs = c.jobs;
  const SpectrumScan scan = scan_spectrum(spec, c.omega, range.min, range.max, range.steps, opts);
  emit(c, out, [&](std::ostream& os) {
    if (wants_json(c)) {
      json params = common_params(c);
      params["gamma"] = gamma_text;
      os << spectrum_to_json(scan, params).dump() << '\n';
    } else {
      write_spectrum_csv(os, scan);
    }
  });
  return kOk;
}

// --- evolve ------------------------------------------------------------------

struct EvolveArgs {
  double gamma = 0.84;
  int periods = 10;
  int samples_per_period = 20;
  std::string init = "delta:0";
};

int cmd_evolve(const CommonConfig& c, const EvolveArgs& a, std::ostream& out) {
  validate_common(c);
  if (!(a.gamma >= 0.0) || !std::isfinite(a.gamma)) throw DomainError("--gamma must be >= 0");
  if (a.periods < 1) throw DomainError("--periods must be >= 1");
  if (a.samples_per_period < 1) throw DomainError("--samples-per-period must be >= 1");
  const ChainSpec spec(c.sites - 1, c.nu);
  const StateVector initial = parse_initial_state(a.init, c.sites);
  TraceOptions opts;
  opts.method = parse_method(c.method);
  opts.tol = c.tol;
  const FidelityTrace trace = fidelity_trace(spec, DriveSpec::from_gamma(a.gamma, c.omega),
                                             initial, a.periods, a.samples_per_period, opts);
  emit(c, out, [&](std::ostream& os) {
    if (wants_json(c)) {
      json params = common_params(c);
      params["gamma"] = a.gamma;
      params["periods"] = a.periods;
      params["samples_per_period"] = a.samples_per_period;
      params["init"] = a.init;
      os << trace_to_json(trace, params).dump() << '\n';
    } else {
      write_trace_csv(os, trace);
    }
  });
  return kOk;
}

// --- resonance ---------------------------------------------------------------

struct ResonanceArgs {
  std::string ratios = "3/5,1/2,1/3,1/4";
  std::string bracket = "0:2.5";
  int prescan = 200;
  double root_tol = 1e-10;
};

int cmd_resonance(const CommonConfig& c, const ResonanceArgs& a, std::ostream& out,
                  std::ostream& err) {
  validate_common(c);
  const auto ratios = parse_ratios(a.ratios);
  const auto bracket = parse_bracket(a.bracket);
  if (a.prescan < 2) throw DomainError("--prescan must be >= 2");
  if (!(a.root_tol > 0.0)) throw DomainError("--root-tol must be positive");
  const ChainSpec spec(c.sites - 1, c.nu);
  ResonanceOptions opts;
  opts.tol = a.root_tol;
  opts.prescan_points = a.prescan;
  opts.integrator_tol = c.tol;
  opts.jobs = c.jobs;

  std::vector<ResonanceHit> hits;
  int missing = 0;
  for (const auto& r : ratios) {
    try {
      const auto found = find_gammas_for_ratio(r.q, r.m, spec, c.omega, bracket, opts);
      hits.insert(hits.end(), found.begin(), found.end());
    } catch (const BracketError& e) {
      ++missing;
      err << "not found: " << e.what() << "\n";
      err << "  Gamma        2mu/omega-q/m\n";
      const auto& samples = e.samples();
      const std::size_t stride = std::max<std::size_t>(1, samples.size() / 20);
      for (std::size_t i = 0; i < samples.size(); i += stride) {
        err << "  " << std::setw(10) << samples[i].x << "   " << samples[i].value << "\n";
      }
    }
  }
  if (hits.empty()) {
    err << "no resonance found for any requested ratio\n";
    return kNotFound;
  }
  emit(c, out, [&](std::ostream& os) {
    if (wants_json(c)) {
      json params = common_params(c);
      params["ratios"] = a.ratios;
      params["bracket"] = a.bracket;
      os << resonances_to_json(hits, params).dump() << '\n';
    } else {
      write_resonances_csv(os, hits);
    }
  });
  if (missing > 0) err << missing << " ratio(s) without a root in the bracket\n";
  return kOk;
}

// --- mu ----------------------------------------------------------------------

struct MuArgs {
  std::string gamma = "0:2.5:26";
  int m_max = 64;
  double ratio_tol = 1e-9;
};

int cmd_mu(const CommonConfig& c, const MuArgs& a, std::ostream& out) {
  validate_common(c);
  if (a.m_max < 1) throw DomainError("--m-max must be >= 1");
  const GammaRange range = parse_gamma(a.gamma);
  const ChainSpec spec(c.sites - 1, c.nu);
  const std::vector<double> gammas =
      range.single ? std::vector<double>{range.min} : gamma_grid(range.min, range.max, range.steps);

  json rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "gamma,mu,ratio,mu_bessel,q,m,rational\n";
  for (double g : gammas) {
    const auto fr = two_level_floquet(spec, DriveSpec::from_gamma(g, c.omega), c.tol);
    const double bessel = fold_quasienergy(mu_bessel_approx(spec, g), c.omega);
    const RatioClass cls = classify_ratio(fr.mu, c.omega, a.m_max, a.ratio_tol);
    csv << g << ',' << fr.mu << ',' << fr.ratio << ',' << std::abs(bessel) << ','
        << cls.convergent.q << ',' << cls.convergent.m << ',' << (cls.rational ? 1 : 0) << '\n';
    rows.push_back({{"gamma", g},
                    {"mu", fr.mu},
                    {"ratio", fr.ratio},
                    {"mu_bessel", std::abs(bessel)},
                    {"q", cls.convergent.q},
                    {"m", cls.convergent.m},
                    {"rational", cls.rational}});
  }
  emit(c, out, [&](std::ostream& os) {
    if (wants_json(c)) {
      json params = common_params(c);
      params["gamma"] = a.gamma;
      os << envelope(params, rows).dump() << '\n';
    } else {
      os << csv.str();
    }
  });
  return kOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  int sites = 21;
  int cases = 30;
  bool deep = false;
  std::uint64_t seed = 20260101;
  double tol = 1e-12;
  unsigned jobs = 0;
};

struct CheckRow {
  std::string name;
  bool pass;
  std::string detail;
};

std::string sci(double x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << x;
  return s.str();
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (!(a.tol > 0.0) || !(a.tol < 1.0)) throw DomainError("--tol must lie in (0, 1)");
  if (a.sites < 2) throw DomainError("--sites must be at least 2");
  if (a.cases < 1) throw DomainError("--cases must be >= 1");

  std::vector<CheckRow> rows;
  std::mt19937_64 rng(a.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  DirectOptions dopts;
  dopts.tol = a.tol;

  // Lift against brute-force integration on random drives and times.
  std::vector<int> sizes;
  for (int n : {1, 2, 3, 5, 10, 20}) {
    if (n <= a.sites - 1) sizes.push_back(n);
  }
  if (a.deep && a.sites - 1 > 20) sizes.push_back(std::min(a.sites - 1, kDefaultLiftCap));
  for (int n : sizes) {
    const double limit = n <= 20 ? 1e-9 : 1e-8;
    double worst = 0.0;
    double worst_unitarity = 0.0;
    for (int k = 0; k < a.cases; ++k) {
      const ChainSpec spec(n, 0.5 + u01(rng));
      const double omega = 1.0 + 4.0 * u01(rng);
      const DriveSpec drive = u01(rng) < 0.8 ? DriveSpec::from_gamma(3.0 * u01(rng), omega)
                                             : DriveSpec::dc(2.0 * u01(rng) - 1.0);
      const double t = 2.0 * (2.0 * kPi / omega) * u01(rng);
      const auto s = integrate_two_level(spec, drive, t, a.tol);
      const auto lifted = lift_propagator(s, n, drive_phase_integral(drive, t));
      const auto direct = direct_propagator(spec, drive, t, dopts, a.jobs);
      worst = std::max(worst, (lifted.entries - direct.entries).cwiseAbs().maxCoeff());
      worst_unitarity = std::max({worst_unitarity, lifted.unitarity_error(), direct.unitarity_error()});
    }
    rows.push_back({"lift_vs_direct N=" + std::to_string(n), worst <= limit,
                    "max|U_lift-U_direct|=" + sci(worst) + " (limit " + sci(limit) + ")"});
    rows.push_back({"unitarity N=" + std::to_string(n), worst_unitarity <= 1e-8,
                    "max|U^dag U - I|=" + sci(worst_unitarity)});
  }

  // Static revival and mirror inversion.
  {
    const int n = std::min(a.sites - 1, 40);
    const ChainSpec spec(n, 1.0);
    const auto psi0 = StateVector::delta(n + 1, 0);
    const auto half = direct_evolve(psi0, spec, DriveSpec::zero(), kPi / 2.0, 1, dopts);
    const auto full = direct_evolve(psi0, spec, DriveSpec::zero(), kPi, 1, dopts);
    const double mirror = std::norm(half.back().state[static_cast<std::size_t>(n)]);
    const double revival = reconstruction_fidelity(psi0, full.back().state);
    rows.push_back({"static_revival N=" + std::to_string(n), revival >= 1.0 - 1e-8,
                    "fidelity at pi/nu=" + sci(1.0 - revival) + " below 1"});
    rows.push_back({"static_mirror N=" + std::to_string(n), mirror >= 1.0 - 1e-8,
                    "|c_N|^2 at pi/(2nu)=" + sci(1.0 - mirror) + " below 1"});
  }

  // Fractional reconstruction at located resonances.
  {
    const int n = std::min(a.sites - 1, 40);
    const ChainSpec spec(n, 1.0);
    const double omega = 3.0;
    ResonanceOptions ropts;
    ropts.integrator_tol = a.tol;
    ropts.jobs = a.jobs;
    const std::pair<int, int> ratios[] = {{1, 2}, {1, 3}};
    for (const auto& [q, m] : ratios) {
      const auto hit = find_gamma_for_ratio(q, m, spec, omega, {0.0, 2.5}, ropts);
      const auto drive = DriveSpec::from_gamma(hit.gamma_star, omega);
      std::vector<complex> amps(static_cast<std::size_t>(n) + 1);
      for (auto& z : amps) z = complex(u01(rng) - 0.5, u01(rng) - 0.5);
      const StateVector psi0 = StateVector(amps).normalized();
      const auto fid = fidelity_at(spec, drive, psi0, m * drive.period(), a.tol);
      rows.push_back({"fractional_dl " + std::to_string(q) + "/" + std::to_string(m),
                      fid.reconstruction >= 1.0 - 1e-6,
                      "Gamma*=" + std::to_string(hit.gamma_star) + ", 1-F(MT)=" +
                          sci(1.0 - fid.reconstruction)});
    }
  }

  bool all = true;
  for (const auto& r : rows) {
    out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name << ' '
        << r.detail << '\n';
    all = all && r.pass;
  }
  out << (all ? "all checks passed" : "verification FAILED") << '\n';
  return all ? kOk : kVerifyFailed;
}

}  // namespace

GammaRange parse_gamma(std::string_view text) {
  const auto parts = split(trim(text), ':');
  GammaRange r;
  if (parts.size() == 1) {
    r.min = r.max = parse_real(parts[0], "Gamma");
    if (r.min < 0.0) throw DomainError("Gamma must be >= 0");
    return r;
  }
  if (parts.size() != 3) throw DomainError("Gamma range must be min:max:steps");
  r.single = false;
  r.min = parse_real(parts[0], "Gamma min");
  r.max = parse_real(parts[1], "Gamma max");
  r.steps = parse_int(parts[2], "Gamma steps");
  if (r.steps < 2) throw DomainError("Gamma range needs at least 2 steps");
  if (r.min < 0.0 || !(r.min < r.max)) throw DomainError("Gamma range needs 0 <= min < max");
  return r;
}

std::pair<double, double> parse_bracket(std::string_view text) {
  const auto parts = split(trim(text), ':');
  if (parts.size() != 2) throw DomainError("bracket must be lo:hi");
  const double lo = parse_real(parts[0], "bracket");
  const double hi = parse_real(parts[1], "bracket");
  if (lo < 0.0 || !(lo < hi)) throw DomainError("bracket needs 0 <= lo < hi");
  return {lo, hi};
}

std::vector<RatioSpec> parse_ratios(std::string_view text) {
  std::vector<RatioSpec> out;
  for (auto item : split(trim(text), ',')) {
    item = trim(item);
    const auto qm = split(item, '/');
    if (qm.size() != 2) throw DomainError("ratio must be q/m, got '" + std::string(item) + "'");
    const int q = parse_int(trim(qm[0]), "ratio numerator");
    const int m = parse_int(trim(qm[1]), "ratio denominator");
    if (q < 1 || m < 1 || q > m) throw DomainError("ratio must satisfy 0 < q/m <= 1");
    if (std::gcd(q, m) != 1) {
      throw DomainError("ratio " + std::string(item) + " is not irreducible");
    }
    out.push_back({q, m});
  }
  return out;
}

StateVector parse_initial_state(std::string_view text, int sites) {
  text = trim(text);
  if (text.rfind("delta:", 0) == 0) {
    return StateVector::delta(sites, parse_int(text.substr(6), "site index"));
  }
  if (text.rfind("file:", 0) == 0) text.remove_prefix(5);
  std::ifstream file{std::string(text)};
  if (!file) throw DomainError("cannot open initial-state file '" + std::string(text) + "'");
  std::vector<complex> amps;
  std::string line;
  while (std::getline(file, line)) {
    std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    std::string cleaned(l);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream fields(cleaned);
    std::vector<std::string> tokens{std::istream_iterator<std::string>(fields),
                                    std::istream_iterator<std::string>()};
    if (tokens.empty() || tokens.size() > 2) {
      throw DomainError("initial-state line must be 're' or 're,im': '" + line + "'");
    }
    const double re = parse_real(tokens[0], "amplitude");
    const double im = tokens.size() == 2 ? parse_real(tokens[1], "amplitude") : 0.0;
    amps.emplace_back(re, im);
  }
  if (static_cast<int>(amps.size()) != sites) {
    throw DomainError("initial-state file has " + std::to_string(amps.size()) +
                      " amplitudes, expected " + std::to_string(sites));
  }
  return StateVector(std::move(amps)).normalized();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Floquet spectra and dynamic localization of ac-driven Krawtchouk chains",
               "kfloquet"};
  app.set_config("--config", "", "TOML/INI file whose keys mirror the flag names");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CommonConfig common;
  std::string spectrum_gamma = "0:2.5:800";
  EvolveArgs evolve;
  ResonanceArgs resonance;
  MuArgs mu;
  VerifyArgs verify;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "quasi-energy spectrum versus Gamma");
  add_common(spectrum_cmd, common);
  spectrum_cmd->add_option("--gamma", spectrum_gamma, "Gamma range min:max:steps")
      ->capture_default_str();

  auto* evolve_cmd = app.add_subcommand("evolve", "site occupations and fidelities versus time");
  add_common(evolve_cmd, common);
  evolve_cmd->add_option("--gamma", evolve.gamma, "normalized amplitude F0/omega")
      ->capture_default_str();
  evolve_cmd->add_option("--periods", evolve.periods, "number of drive periods")
      ->capture_default_str();
  evolve_cmd->add_option("--samples-per-period", evolve.samples_per_period)
      ->capture_default_str();
  evolve_cmd->add_option("--init", evolve.init, "delta:<site> or a file with re[,im] lines")
      ->capture_default_str();

  auto* resonance_cmd =
      app.add_subcommand("resonance", "locate Gamma where 2mu/omega equals q/m");
  add_common(resonance_cmd, common);
  resonance_cmd->add_option("--ratios", resonance.ratios, "comma-separated q/m list")
      ->capture_default_str();
  resonance_cmd->add_option("--bracket", resonance.bracket, "search interval lo:hi")
      ->capture_default_str();
  resonance_cmd->add_option("--prescan", resonance.prescan, "pre-scan grid points")
      ->capture_default_str();
  resonance_cmd->add_option("--root-tol", resonance.root_tol, "tolerance on 2mu/omega")
      ->capture_default_str();

  auto* mu_cmd = app.add_subcommand("mu", "two-level quasi-energy and its rationality");
  add_common(mu_cmd, common);
  mu_cmd->add_option("--gamma", mu.gamma, "Gamma value or min:max:steps")->capture_default_str();
  mu_cmd->add_option("--m-max", mu.m_max, "largest denominator for classification")
      ->capture_default_str();
  mu_cmd->add_option("--ratio-tol", mu.ratio_tol, "rationality tolerance")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run the cross-module invariant checks");
  verify_cmd->add_option("--sites", verify.sites, "largest chain (N+1) in the lift check")
      ->capture_default_str();
  verify_cmd->add_option("--cases", verify.cases, "random cases per chain size")
      ->capture_default_str();
  verify_cmd->add_flag("--deep", verify.deep, "also validate N = sites-1 beyond 20");
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--tol", verify.tol, "integrator tolerance")->capture_default_str();
  verify_cmd->add_option("--jobs", verify.jobs)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*spectrum_cmd) return cmd_spectrum(common, spectrum_gamma, out);
    if (*evolve_cmd) return cmd_evolve(common, evolve, out);
    if (*resonance_cmd) return cmd_resonance(common, resonance, out, err);
    if (*mu_cmd) return cmd_mu(common, mu, out);
    if (*verify_cmd) return cmd_verify(verify, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BracketError& e) {
    err << "error: " << e.what() << '\n';
    return kNotFound;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace kfloquet::cli
