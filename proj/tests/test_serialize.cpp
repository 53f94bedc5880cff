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
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "kfloquet/serialize.hpp"

using namespace kfloquet;
using nlohmann::json;

namespace {

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

SpectrumScan sample_scan() {
  SpectrumScan scan;
  scan.omega = 3.0;
  scan.nu = 1.0;
  scan.sites_minus_one = 2;
  scan.rows = {{0.1, {-0.1 / 3.0, 0.0, 1.0 / 7.0}}, {0.2, {-1.5e-17, 2.0 / 3.0, 1.4999999999999998}}};
  return scan;
}

FidelityTrace sample_trace() {
  FidelityTrace t;
  t.times = {0.0, 0.5};
  t.reconstruction = {1.0, 0.123456789012345678};
  t.mirror = {0.0, 0.99999999999999989};
  t.mirror_phase_aware = {std::numeric_limits<double>::quiet_NaN(), 0.75};
  t.probabilities = {{1.0, 0.0}, {0.3, 0.7}};
  return t;
}

}  // namespace

TEST_CASE("CSV headers are stable") {
  std::ostringstream spectrum;
  write_spectrum_csv(spectrum, sample_scan());
  CHECK(first_line(spectrum.str()) == "gamma,level,quasienergy");

  std::ostringstream trace;
  write_trace_csv(trace, sample_trace());
  CHECK(first_line(trace.str()) == "t_over_T,site,prob,recon_fid,mirror_fid");

  std::ostringstream res;
  write_resonances_csv(res, {{0.84, 1, 2, 0.75, 1e-12}});
  CHECK(res.str() == "q,m,gamma_star,mu,residual\n1,2,0.83999999999999997,0.75,9.9999999999999998e-13\n");
}

TEST_CASE("CSV is long format with 17 significant digits") {
  std::ostringstream out;
  out.precision(3);
  write_spectrum_csv(out, sample_scan());
  std::istringstream in(out.str());
  std::string line;
  int rows = 0;
  std::getline(in, line);
  while (std::getline(in, line)) {
    ++rows;
    const auto value = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(std::isfinite(value));
  }
  CHECK(rows == 6);
  CHECK(out.str().find("0.14285714285714285") != std::string::npos);
  CHECK(out.precision() == 3);
}

TEST_CASE("spectrum JSON round-trips bit for bit") {
  const auto scan = sample_scan();
  const json doc = json::parse(spectrum_to_json(scan, {{"method", "lift"}}).dump());
  CHECK(doc.at("tool_version") == "1.0.0");
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("params").at("method") == "lift");
  const auto back = spectrum_from_json(doc);
  CHECK(back.omega == scan.omega);
  CHECK(back.nu == scan.nu);
  CHECK(back.sites_minus_one == scan.sites_minus_one);
  REQUIRE(back.rows.size() == scan.rows.size());
  for (std::size_t k = 0; k < scan.rows.size(); ++k) {
    CHECK(back.rows[k].gamma == scan.rows[k].gamma);
    CHECK(back.rows[k].quasienergies == scan.rows[k].quasienergies);
  }
}

TEST_CASE("trace JSON round-trips and maps NaN to null") {
  const auto trace = sample_trace();
  const json doc = json::parse(trace_to_json(trace).dump());
  CHECK(doc.at("rows").at(0).at("mirror_phase_fid").is_null());
  const auto back = trace_from_json(doc);
  CHECK(back.times == trace.times);
  CHECK(back.reconstruction == trace.reconstruction);
  CHECK(back.mirror == trace.mirror);
  CHECK(back.probabilities == trace.probabilities);
  CHECK(std::isnan(back.mirror_phase_aware[0]));
  CHECK(back.mirror_phase_aware[1] == 0.75);
}

TEST_CASE("resonance JSON round-trips") {
  const std::vector<ResonanceHit> hits = {{0.4961234, 3, 5, 0.9, 3e-13}, {1.5476, 1, 4, 0.375, 0.0}};
  const auto back = resonances_from_json(json::parse(resonances_to_json(hits).dump()));
  REQUIRE(back.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(back[k].gamma_star == hits[k].gamma_star);
    CHECK(back[k].q == hits[k].q);
    CHECK(back[k].m == hits[k].m);
    CHECK(back[k].mu == hits[k].mu);
    CHECK(back[k].residual == hits[k].residual);
  }
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS(spectrum_from_json(json{{"params", {{"omega", 3.0}, {"nu", 1.0}, {"sites", 3}}}}));
  const json out_of_order = envelope({{"omega", 3.0}, {"nu", 1.0}, {"sites", 3}},
                                     json::array({{{"gamma", 0.0}, {"level", 1}, {"quasienergy", 0.0}}}));
  CHECK_THROWS(spectrum_from_json(out_of_order));
}
