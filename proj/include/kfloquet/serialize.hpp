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

// Long-format CSV (one observable per row, 17 significant digits, LF) and a
// JSON mirror wrapped in {params, tool_version, schema_version, rows}.

#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kfloquet/analysis.hpp"

namespace kfloquet {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

inline constexpr std::string_view kSpectrumHeader = "gamma,level,quasienergy";
inline constexpr std::string_view kTraceHeader = "t_over_T,site,prob,recon_fid,mirror_fid";
inline constexpr std::string_view kResonanceHeader = "q,m,gamma_star,mu,residual";

void write_spectrum_csv(std::ostream& out, const SpectrumScan& scan);
void write_trace_csv(std::ostream& out, const FidelityTrace& trace);
void write_resonances_csv(std::ostream& out, const std::vector<ResonanceHit>& hits);

nlohmann::json envelope(nlohmann::json params, nlohmann::json rows);

nlohmann::json spectrum_to_json(const SpectrumScan& scan, const nlohmann::json& params = {});
SpectrumScan spectrum_from_json(const nlohmann::json& doc);

nlohmann::json trace_to_json(const FidelityTrace& trace, const nlohmann::json& params = {});
FidelityTrace trace_from_json(const nlohmann::json& doc);

nlohmann::json resonances_to_json(const std::vector<ResonanceHit>& hits,
                                  const nlohmann::json& params = {});
std::vector<ResonanceHit> resonances_from_json(const nlohmann::json& doc);

}  // namespace kfloquet
