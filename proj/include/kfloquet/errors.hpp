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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kfloquet {

/// Precondition violated by the caller (bad index, non-unitary input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The adaptive integrator or a root search could not reach the requested
/// accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A conserved quantity drifted beyond its hard limit.
class IntegrityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// No sign change of the target function inside the requested bracket.
class BracketError : public std::runtime_error {
 public:
  struct Sample {
    double x;
    double value;
  };

  BracketError(const std::string& what, std::vector<Sample> samples)
      : std::runtime_error(what), samples_(std::move(samples)) {}

  const std::vector<Sample>& samples() const noexcept { return samples_; }

 private:
  std::vector<Sample> samples_;
};

}  // namespace kfloquet
