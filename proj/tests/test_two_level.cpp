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

#include "kfloquet/errors.hpp"
#include "kfloquet/two_level.hpp"
#include "test_support.hpp"

using namespace kfloquet;
using doctest::Approx;

namespace {

const ChainSpec kUnit(1, 1.0);
constexpr complex kI{0.0, 1.0};

double max_abs(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("undriven two-level propagator is an exact rotation") {
  const auto s_pi = integrate_two_level(kUnit, DriveSpec::zero(), kPi);
  CHECK(max_abs(s_pi.entries + Matrix2c::Identity()) <= 1e-10);

  const auto s_half = integrate_two_level(kUnit, DriveSpec::zero(), kPi / 2.0);
  Matrix2c expected;
  expected << 0.0, -kI, -kI, 0.0;
  CHECK(max_abs(s_half.entries - expected) <= 1e-10);
  CHECK(std::abs(s_half.s11()) <= 1e-10);
  CHECK(std::abs(std::abs(s_half.s12()) - 1.0) <= 1e-10);
}

TEST_CASE("dc drive matches the closed-form exponential") {
  auto rng = testing::make_rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const ChainSpec spec(1, testing::uniform(rng, 0.2, 3.0));
    const double f0 = testing::uniform(rng, -4.0, 4.0);
    const double t = testing::uniform(rng, 0.0, 10.0);
    const auto s = integrate_two_level(spec, DriveSpec::dc(f0), t);
    // H2 = nu sigma_x - (F/2) sigma_z
    CHECK(max_abs(s.entries - testing::exp_static(spec.nu(), -0.5 * f0, t)) <= 1e-10);
  }
}

TEST_CASE("monodromy at Gamma=1, omega=3 matches an independent DOP853 integration") {
  // Frozen from scipy solve_ivp(DOP853, rtol=1e-13, atol=1e-14).
  Matrix2c expected;
  expected << complex(0.16754433005661917, -0.68931259123015787),
      complex(-1.2975731600306517e-15, -0.70482412631622493),
      complex(1.2975731600306517e-15, -0.70482412631622493),
      complex(0.16754433005661934, 0.68931259123015809);
  const auto drive = DriveSpec::from_gamma(1.0, 3.0);
  const auto s = integrate_two_level(kUnit, drive, drive.period());
  CHECK(max_abs(s.entries - expected) <= 1e-10);
}

TEST_CASE("propagators stay unitary with unit determinant") {
  auto rng = testing::make_rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const ChainSpec spec(1, testing::uniform(rng, 0.2, 2.0));
    const double omega = testing::uniform(rng, 0.5, 6.0);
    const DriveSpec drive = trial % 2 ? DriveSpec::from_gamma(testing::uniform(rng, 0, 4), omega)
                                      : DriveSpec::dc(testing::uniform(rng, -3, 3));
    const auto s = integrate_two_level(spec, drive, testing::uniform(rng, 0.0, 20.0));
    CHECK(s.unitarity_error() <= 1e-10);
    CHECK(std::abs(s.determinant() - 1.0) <= 1e-10);
  }
}

TEST_CASE("two periods compose as the squared monodromy") {
  auto rng = testing::make_rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const double omega = testing::uniform(rng, 1.0, 5.0);
    const auto drive = DriveSpec::from_gamma(testing::uniform(rng, 0.0, 3.0), omega);
    const auto one = integrate_two_level(kUnit, drive, drive.period());
    const auto two = integrate_two_level(kUnit, drive, 2.0 * drive.period());
    CHECK(max_abs(two.entries - one.entries * one.entries) <= 1e-9);
  }
}

TEST_CASE("continue_two_level runs in both directions") {
  const auto drive = DriveSpec::from_gamma(1.3, 3.0);
  const auto mid = integrate_two_level(kUnit, drive, 0.7);
  const auto end = continue_two_level(mid, kUnit, drive, 2.1);
  const auto direct = integrate_two_level(kUnit, drive, 2.1);
  CHECK(max_abs(end.entries - direct.entries) <= 1e-10);
  const auto back = continue_two_level(end, kUnit, drive, 0.0);
  CHECK(max_abs(back.entries - Matrix2c::Identity()) <= 1e-10);
}

TEST_CASE("integrate_two_level validates its arguments") {
  CHECK_THROWS_AS(integrate_two_level(kUnit, DriveSpec::zero(), -1.0), DomainError);
  CHECK_THROWS_AS(integrate_two_level(kUnit, DriveSpec::zero(), 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(integrate_two_level(kUnit, DriveSpec::zero(), 1.0, -1e-3), DomainError);
}

TEST_CASE("floquet_mu") {
  SUBCASE("identity monodromy") {
    const TwoLevelPropagator id{Matrix2c::Identity(), 2.0 * kPi / 3.0};
    const auto fr = floquet_mu(id, 3.0);
    CHECK(fr.mu == 0.0);
    CHECK(fr.ratio == 0.0);
  }
  SUBCASE("static limit gives mu = nu inside the first zone") {
    const auto s = integrate_two_level(kUnit, DriveSpec::zero(), 2.0 * kPi / 3.0);
    CHECK(floquet_mu(s, 3.0).mu == Approx(1.0).epsilon(1e-10));

    auto rng = testing::make_rng(24);
    for (int trial = 0; trial < 20; ++trial) {
      const double omega = testing::uniform(rng, 1.0, 8.0);
      const ChainSpec spec(1, testing::uniform(rng, 0.05, 0.49) * omega);
      const auto st = integrate_two_level(spec, DriveSpec::zero(), 2.0 * kPi / omega);
      CHECK(std::abs(floquet_mu(st, omega).mu - spec.nu()) <= 1e-9);
    }
  }
  SUBCASE("half-ratio resonance near Gamma = 0.84") {
    const auto fr = two_level_floquet(kUnit, DriveSpec::from_gamma(0.84, 3.0));
    // scipy DOP853 reference: 0.7500957022688762
    CHECK(fr.mu == Approx(0.7500957022688762).epsilon(1e-9));
    CHECK(std::abs(fr.mu - 0.75) < 2e-4);
    CHECK(std::abs(fr.ratio - 0.5) < 1e-4);
  }
  SUBCASE("mu is tiny at the reported crossing amplitude") {
    const auto drive = DriveSpec::from_gamma(2.261, 3.0);
    const auto fr = two_level_floquet(kUnit, drive);
    // reference 0.004978379095; the exact crossing lies at Gamma = 2.27144
    CHECK(fr.mu == Approx(0.004978379095233629).epsilon(1e-7));
    const Eigen::ComplexEigenSolver<Matrix2c> es(fr.monodromy.entries);
    for (int j = 0; j < 2; ++j) CHECK(std::abs(std::arg(es.eigenvalues()(j))) < 0.011);
  }
  SUBCASE("monodromy eigenvalues are exp(-/+ i mu T)") {
    auto rng = testing::make_rng(25);
    for (int trial = 0; trial < 20; ++trial) {
      const double omega = testing::uniform(rng, 1.0, 6.0);
      const auto fr =
          two_level_floquet(kUnit, DriveSpec::from_gamma(testing::uniform(rng, 0.0, 3.0), omega));
      REQUIRE(fr.mu >= 0.0);
      REQUIRE(fr.mu <= 0.5 * omega);
      const double period = 2.0 * kPi / omega;
      const Eigen::ComplexEigenSolver<Matrix2c> es(fr.monodromy.entries);
      for (int j = 0; j < 2; ++j) {
        const complex lambda = es.eigenvalues()(j);
        const double d_minus = std::abs(lambda - std::polar(1.0, -fr.mu * period));
        const double d_plus = std::abs(lambda - std::polar(1.0, fr.mu * period));
        CHECK(std::min(d_minus, d_plus) <= 1e-9);
      }
    }
  }
  SUBCASE("rejects bad input") {
    Matrix2c bad = Matrix2c::Identity() * 1.1;
    CHECK_THROWS_AS(floquet_mu({bad, 2.0 * kPi / 3.0}, 3.0), DomainError);
    CHECK_THROWS_AS(floquet_mu({Matrix2c::Identity(), 2.0}, 3.0), DomainError);
  }
  SUBCASE("zone edge") {
    const TwoLevelPropagator minus_id{-Matrix2c::Identity(), 2.0 * kPi / 3.0};
    CHECK(floquet_mu(minus_id, 3.0).mu == 1.5);
  }
}

TEST_CASE("mu is continuous along a fine Gamma scan") {
  double previous = two_level_floquet(kUnit, DriveSpec::from_gamma(0.0, 3.0)).mu;
  double worst = 0.0;
  for (int k = 1; k <= 2600; ++k) {
    const double mu = two_level_floquet(kUnit, DriveSpec::from_gamma(1e-3 * k, 3.0)).mu;
    worst = std::max(worst, std::abs(mu - previous));
    previous = mu;
  }
  CHECK(worst <= 0.05);
}

TEST_CASE("signed quasi-energy changes sign through the crossing") {
  const auto at = [](double gamma) {
    const auto drive = DriveSpec::from_gamma(gamma, 3.0);
    return signed_quasienergy(integrate_two_level(kUnit, drive, drive.period()), 3.0);
  };
  CHECK(at(0.0) == Approx(1.0).epsilon(1e-10));
  CHECK(at(2.26) > 0.0);
  CHECK(at(2.28) < 0.0);
}

TEST_CASE("Bessel estimate") {
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(std::abs(bessel_j0(1.0) - 0.765197686557967) <= 1e-14);
  CHECK(std::abs(bessel_j0(2.40482555769577)) <= 1e-13);
  CHECK(std::abs(bessel_j0(30.0) - (-0.086367983581040225)) <= 1e-13);
  CHECK(mu_bessel_approx(kUnit, 0.0) == 1.0);
  CHECK(mu_bessel_approx(ChainSpec(1, 2.0), 0.0) == 2.0);
  CHECK(mu_bessel_approx(kUnit, 2.404826) < 1e-6);

  // Large-frequency regime: the integrated mu approaches |J0(Gamma)|.
  const auto fr = two_level_floquet(kUnit, DriveSpec::from_gamma(1.0, 20.0));
  CHECK(fr.mu == Approx(0.763477227797689).epsilon(1e-9));
  CHECK(std::abs(fr.mu - mu_bessel_approx(kUnit, 1.0)) <= 0.01);
}

TEST_CASE("detect_swap") {
  Matrix2c swap;
  swap << 0.0, kI, kI, 0.0;
  const auto phi = detect_swap({swap, 0.0}, 1e-12);
  REQUIRE(phi.has_value());
  CHECK(*phi == Approx(kPi / 2.0));

  CHECK_FALSE(detect_swap({Matrix2c::Identity(), 0.0}).has_value());

  const auto s = integrate_two_level(kUnit, DriveSpec::zero(), kPi / 2.0);
  const auto phi_static = detect_swap(s, 1e-8);
  REQUIRE(phi_static.has_value());
  CHECK(*phi_static == Approx(-kPi / 2.0).epsilon(1e-9));
}

TEST_CASE("mirror_phase reads the swap phase") {
  const double phi = 0.37;
  Matrix2c hermitian_swap;
  hermitian_swap << 0.0, std::polar(1.0, phi), std::polar(1.0, -phi), 0.0;
  CHECK(mirror_phase({hermitian_swap, 0.0}) == Approx(phi));

  Matrix2c su2_swap;
  su2_swap << 0.0, std::polar(1.0, phi), -std::polar(1.0, -phi), 0.0;
  const double shifted = mirror_phase({su2_swap, 0.0});
  // Differs by pi/2 modulo pi.
  const double d = std::remainder(shifted - phi - kPi / 2.0, kPi);
  CHECK(std::abs(d) < 1e-12);
}
