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

#include "kfloquet/serialize.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "kfloquet/errors.hpp"

namespace kfloquet {
namespace {

using nlohmann::json;

// Restores stream formatting on scope exit.
class RealFormat {
 public:
  explicit RealFormat(std::ostream& out)
      : out_(out), flags_(out.flags()), precision_(out.precision()) {
    out_.unsetf(std::ios::floatfield);
    out_.precision(17);
  }
  ~RealFormat() {
    out_.flags(flags_);
    out_.precision(precision_);
  }
  RealFormat(const RealFormat&) = delete;
  RealFormat& operator=(const RealFormat&) = delete;

 private:
  std::ostream& out_;
  std::ios::fmtflags flags_;
  std::streamsize precision_;
};

json real_or_null(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

double real_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

const json& rows_of(const json& doc) {
  if (!doc.contains("rows") || !doc.at("rows").is_array()) {
    throw DomainError("JSON document has no rows array");
  }
  return doc.at("rows");
}

}  // namespace

void write_spectrum_csv(std::ostream& out, const SpectrumScan& scan) {
  RealFormat fmt(out);
  out << kSpectrumHeader << '\n';
  for (const auto& row : scan.rows) {
    for (std::size_t level = 0; level < row.quasienergies.size(); ++level) {
      out << row.gamma << ',' << level << ',' << row.quasienergies[level] << '\n';
    }
  }
}

void write_trace_csv(std::ostream& out, const FidelityTrace& trace) {
  RealFormat fmt(out);
  out << kTraceHeader << '\n';
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    const auto& probs = trace.probabilities[k];
    for (std::size_t site = 0; site < probs.size(); ++site) {
      out << trace.times[k] << ',' << site << ',' << probs[site] << ','
          << trace.reconstruction[k] << ',' << trace.mirror[k] << '\n';
    }
  }
}

void write_resonances_csv(std::ostream& out, const std::vector<ResonanceHit>& hits) {
  RealFormat fmt(out);
  out << kResonanceHeader << '\n';
  for (const auto& h : hits) {
    out << h.q << ',' << h.m << ',' << h.gamma_star << ',' << h.mu << ',' << h.residual << '\n';
  }
}

json envelope(json params, json rows) {
  return json{{"params", params.is_null() ? json::object() : std::move(params)},
              {"tool_version", std::string(kToolVersion)},
              {"schema_version", kSchemaVersion},
              {"rows", std::move(rows)}};
}

json spectrum_to_json(const SpectrumScan& scan, const json& params) {
  json p = params.is_null() ? json::object() : params;
  p["omega"] = scan.omega;
  p["nu"] = scan.nu;
  p["sites"] = scan.sites_minus_one + 1;
  json rows = json::array();
  for (const auto& row : scan.rows) {
    for (std::size_t level = 0; level < row.quasienergies.size(); ++level) {
      rows.push_back({{"gamma", row.gamma}, {"level", level}, {"quasienergy", row.quasienergies[level]}});
    }
  }
  return envelope(std::move(p), std::move(rows));
}

SpectrumScan spectrum_from_json(const json& doc) {
  SpectrumScan scan;
  const json& p = doc.at("params");
  scan.omega = p.at("omega").get<double>();
  scan.nu = p.at("nu").get<double>();
  scan.sites_minus_one = p.at("sites").get<int>() - 1;
  for (const auto& r : rows_of(doc)) {
    const double gamma = r.at("gamma").get<double>();
    const auto level = r.at("level").get<std::size_t>();
    if (level == 0) scan.rows.push_back({gamma, {}});
    if (scan.rows.empty() || scan.rows.back().quasienergies.size() != level) {
      throw DomainError("spectrum rows are not in (gamma, level) order");
    }
    scan.rows.back().quasienergies.push_back(r.at("quasienergy").get<double>());
  }
  return scan;
}

json trace_to_json(const FidelityTrace& trace, const json& params) {
  json rows = json::array();
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    const auto& probs = trace.probabilities[k];
    for (std::size_t site = 0; site < probs.size(); ++site) {
      rows.push_back({{"t_over_T", trace.times[k]},
                      {"site", site},
                      {"prob", probs[site]},
                      {"recon_fid", trace.reconstruction[k]},
                      {"mirror_fid", trace.mirror[k]},
                      {"mirror_phase_fid", real_or_null(trace.mirror_phase_aware[k])}});
    }
  }
  return envelope(params, std::move(rows));
}

FidelityTrace trace_from_json(const json& doc) {
  FidelityTrace trace;
  for (const auto& r : rows_of(doc)) {
    const auto site = r.at("site").get<std::size_t>();
    if (site == 0) {
      trace.times.push_back(r.at("t_over_T").get<double>());
      trace.reconstruction.push_back(r.at("recon_fid").get<double>());
      trace.mirror.push_back(r.at("mirror_fid").get<double>());
      trace.mirror_phase_aware.push_back(real_from(r.at("mirror_phase_fid")));
      trace.probabilities.emplace_back();
    }
    if (trace.probabilities.empty() || trace.probabilities.back().size() != site) {
      throw DomainError("trace rows are not in (time, site) order");
    }
    trace.probabilities.back().push_back(r.at("prob").get<double>());
  }
  return trace;
}

json resonances_to_json(const std::vector<ResonanceHit>& hits, const json& params) {
  json rows = json::array();
  for (const auto& h : hits) {
    rows.push_back({{"q", h.q},
                    {"m", h.m},
                    {"gamma_star", h.gamma_star},
                    {"mu", h.mu},
                    {"residual", h.residual}});
  }
  return envelope(params, std::move(rows));
}

std::vector<ResonanceHit> resonances_from_json(const json& doc) {
  std::vector<ResonanceHit> hits;
  for (const auto& r : rows_of(doc)) {
    hits.push_back({r.at("gamma_star").get<double>(), r.at("q").get<int>(), r.at("m").get<int>(),
                    r.at("mu").get<double>(), r.at("residual").get<double>()});
  }
  return hits;
}

}  // namespace kfloquet
