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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kfloquet/chain.hpp"

namespace kfloquet::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kNumerical = 3,
  kNotFound = 4,
};

struct GammaRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;
  bool single = true;
};

/// "min:max:steps" or a plain number. Throws DomainError on malformed or
/// degenerate input (steps < 2, min >= max, negative values).
GammaRange parse_gamma(std::string_view text);

/// "lo:hi" with 0 <= lo < hi.
std::pair<double, double> parse_bracket(std::string_view text);

struct RatioSpec {
  int q;
  int m;
};
/// Comma-separated "q/m" list; every pair must be irreducible with 0 < q/m <= 1.
std::vector<RatioSpec> parse_ratios(std::string_view text);

/// "delta:<site>" or a path to a file with one "re[,im]" line per site.
/// The state is normalized.
StateVector parse_initial_state(std::string_view text, int sites);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfloquet::cli
