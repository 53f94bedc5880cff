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

#include <algorithm>

#include "kfloquet/direct.hpp"
#include "kfloquet/errors.hpp"
#include "test_support.hpp"

using namespace kfloquet;

TEST_CASE("static spectrum is the equally spaced ladder") {
  for (int n : {1, 2, 3, 5, 10, 20, 40}) {
    const ChainSpec spec(n, 0.8);
    const auto energies = static_energies(spec);
    REQUIRE(static_cast<int>(energies.size()) == n + 1);
    for (int k = 0; k <= n; ++k) {
      // ascending: -nu N, ..., nu N
      CHECK(std::abs(energies[k] - 0.8 * (2 * k - n)) <= 1e-10);
    }
  }
}

TEST_CASE("static Hamiltonian honours a coupling override") {
  const ChainSpec spec(3, 1.0);
  const CouplingOverride flat{{1.0, 1.0, 1.0}};
  const auto h = static_hamiltonian(spec, flat);
  CHECK(h(0, 1) == -1.0);
  CHECK(h(2, 1) == -1.0);
  CHECK(h(0, 0) == 0.0);
  CHECK_THROWS_AS(static_hamiltonian(spec, CouplingOverride{{1.0, 1.0}}), DomainError);
}

TEST_CASE("static revival and mirror inversion") {
  const ChainSpec spec(40, 1.0);
  const auto psi0 = StateVector::delta(41, 0);
  const auto samples = direct_evolve(psi0, spec, DriveSpec::zero(), kPi, 2);
  REQUIRE(samples.size() == 2);
  CHECK(samples[0].time == doctest::Approx(kPi / 2.0));
  CHECK(std::norm(samples[0].state[40]) >= 1.0 - 1e-8);
  CHECK(std::norm(psi0.inner(samples[1].state)) >= 1.0 - 1e-8);
}

TEST_CASE("uniform couplings break perfect transfer") {
  const int n = 10;
  const ChainSpec spec(n, 1.0);
  DirectOptions opts;
  opts.couplings = CouplingOverride{std::vector<double>(n, 1.0)};
  const auto samples =
      direct_evolve(StateVector::delta(n + 1, 0), spec, DriveSpec::zero(), 200.0, 400, opts);
  double best = 0.0;
  for (const auto& s : samples) best = std::max(best, std::norm(s.state[n]));
  CHECK(best < 0.99);
}

TEST_CASE("evolution conserves the norm") {
  auto rng = testing::make_rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const ChainSpec spec(12, testing::uniform(rng, 0.5, 1.5));
    const auto drive = DriveSpec::from_gamma(testing::uniform(rng, 0.0, 3.0), 3.0);
    for (const auto& s :
         direct_evolve(testing::random_state(rng, 13), spec, drive, 10.0, 5)) {
      CHECK(std::abs(s.state.norm_squared() - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("backward propagation undoes forward propagation") {
  auto rng = testing::make_rng(42);
  const ChainSpec spec(8, 1.0);
  const auto drive = DriveSpec::from_gamma(1.7, 2.5);
  const auto psi = testing::random_state(rng, 9);
  const auto forward = direct_propagate(psi, spec, drive, 0.3, 4.1);
  const auto back = direct_propagate(forward, spec, drive, 4.1, 0.3);
  for (int n = 0; n <= 8; ++n) CHECK(std::abs(back[n] - psi[n]) <= 1e-10);
}

TEST_CASE("propagator assembly does not depend on the worker count") {
  const ChainSpec spec(10, 1.0);
  const auto drive = DriveSpec::from_gamma(0.9, 3.0);
  const auto serial = direct_propagator(spec, drive, 1.3, {}, 1);
  const auto threaded = direct_propagator(spec, drive, 1.3, {}, 4);
  CHECK((serial.entries.array() == threaded.entries.array()).all());
  CHECK(serial.unitarity_error() <= 1e-10);
}

TEST_CASE("monodromy eigenphases agree with the folded ladder") {
  const ChainSpec spec(5, 1.0);
  const double omega = 3.0;
  const auto drive = DriveSpec::from_gamma(1.0, omega);
  const auto eps = direct_quasienergies(spec, drive);
  const double mu = two_level_floquet(spec, drive).mu;
  auto ladder = chain_quasienergies(mu, 5, omega);
  std::sort(ladder.begin(), ladder.end());
  REQUIRE(eps.size() == ladder.size());
  for (std::size_t k = 0; k < eps.size(); ++k) CHECK(std::abs(eps[k] - ladder[k]) <= 1e-9);
  CHECK(std::is_sorted(eps.begin(), eps.end()));
}

TEST_CASE("direct routines validate their input") {
  const ChainSpec spec(3, 1.0);
  const auto psi = StateVector::delta(4, 0);
  CHECK_THROWS_AS(direct_evolve(psi, spec, DriveSpec::zero(), 1.0, 0), DomainError);
  CHECK_THROWS_AS(direct_evolve(psi, spec, DriveSpec::zero(), -1.0, 1), DomainError);
  CHECK_THROWS_AS(direct_evolve(StateVector::delta(3, 0), spec, DriveSpec::zero(), 1.0, 1),
                  DomainError);
  CHECK_THROWS_AS(direct_monodromy(spec, DriveSpec::dc(1.0)), DomainError);
}
