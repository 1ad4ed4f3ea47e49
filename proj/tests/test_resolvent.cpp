// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/resolvent.hpp"

#include <cmath>

#include "doctest.h"
#include "semistab/generator.hpp"
#include "semistab/modal.hpp"
#include "semistab/mode_algebra.hpp"

using namespace semistab;

namespace {

SpectrumSpec n_squared() {
  return SpectrumSpec::discrete({}, TailFormula{TailForm::Square, 1.0, 1.0, 2.0, 1});
}

}  // namespace

TEST_CASE("block resolvent residual") {
  for (double s : {1.0, 9.0, 1e4}) {
    for (double fs : {0.1, 1.0, 2.0 * std::sqrt(s), 30.0}) {
      for (double lambda : {0.3, 1.0, -2.5, 50.0}) {
        const Eigen::Matrix2cd r = mode_resolvent(s, fs, lambda);
        const Eigen::Matrix2cd m =
            std::complex<double>(0.0, lambda) * Eigen::Matrix2cd::Identity() -
            mode_generator(s, fs).cast<std::complex<double>>();
        CHECK((m * r - Eigen::Matrix2cd::Identity()).norm() <= 1e-10);
      }
    }
  }
}

TEST_CASE("resolvent guards") {
  SUBCASE("conservative resonance is on the spectrum") {
    const SpectrumSpec kg = SpectrumSpec::continuous({{1.0, 0.0, true}});
    CHECK_THROWS_AS(resolvent_norm(DampingFunction::zero(), kg, 1.0, 50), OnSpectrum);
    // Off the spectrum image the norm is finite.
    CHECK(resolvent_norm(DampingFunction::zero(), kg, 0.5, 50) > 0.0);
  }
  SUBCASE("lambda = 0 requires bijectivity") {
    CHECK_THROWS_AS(resolvent_norm(DampingFunction::power(2.0), n_squared(), 0.0, 50),
                    OnSpectrum);
  }
  SUBCASE("damped resonances are fine") {
    CHECK(resolvent_norm(DampingFunction::power(-1.0), n_squared(), 2.0, 50) > 0.0);
  }
}

TEST_CASE("resolvent norm at lambda=0 equals the psi gauge at t=0") {
  const SpectrumSpec spec = n_squared();
  const double at_zero = resolvent_norm(DampingFunction::power(0.0), spec, 0.0, 1000);
  CHECK(at_zero == doctest::Approx(1.6180339887498949).epsilon(1e-12));
  CHECK(at_zero ==
        doctest::Approx(psi_norm(DampingFunction::power(0.0), spec, 0.0, 1000).value)
            .epsilon(1e-15));
}

TEST_CASE("resolvent norm is symmetric in lambda") {
  const SpectrumSpec spec = n_squared();
  for (double lambda : {0.5, 3.3, 17.0}) {
    const double plus = resolvent_norm(DampingFunction::power(1.0), spec, lambda, 100);
    const double minus = resolvent_norm(DampingFunction::power(1.0), spec, -lambda, 100);
    CHECK(plus == doctest::Approx(minus).epsilon(1e-14));
  }
}

TEST_CASE("resolvent norm never decreases with the budget") {
  const SpectrumSpec spec = n_squared();
  for (double lambda : {5.0, 12.0, 30.0}) {
    double prev = 0.0;
    for (int budget : {10, 100, 1000}) {
      const double norm = resolvent_norm(DampingFunction::power(-1.0), spec, lambda, budget);
      CHECK(norm >= prev - 1e-14);
      prev = norm;
    }
  }
}

TEST_CASE("resonance peaks grow like the predicted envelope") {
  // For f(s) = 1/s the block norm at lambda = sqrt(s) is about 2/f = 2s.
  const SpectrumSpec spec = n_squared();
  for (int n : {5, 10, 20}) {
    const double s = static_cast<double>(n) * n;
    const double norm = resolvent_norm(DampingFunction::power(-1.0), spec, std::sqrt(s), 1000);
    CHECK(norm == doctest::Approx(2.0 * s).epsilon(0.02));
  }
}

TEST_CASE("growth exponent fits for semiuniform wave dampings") {
  const SpectrumSpec spec = n_squared();
  SUBCASE("theta = -1 gives exponent 2") {
    const LogLogFit fit = growth_exponent(DampingFunction::power(-1.0), spec, 10.0, 200.0, 120, 700);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(0.05));
  }
  SUBCASE("theta = -1/2 gives exponent 1") {
    const LogLogFit fit =
        growth_exponent(DampingFunction::power(-0.5), spec, 10.0, 200.0, 120, 700);
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(0.1));
  }
}

TEST_CASE("growth exponent for the rotational beam") {
  const SpectrumSpec spec =
      SpectrumSpec::discrete({}, TailFormula{TailForm::RotationalQuotient, 1.0, 1.0, 2.0, 1});
  const LogLogFit fit = growth_exponent(DampingFunction::rotational_inertia(0.0, 1.0), spec,
                                        10.0, 200.0, 120, 700);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(0.075));
}

TEST_CASE("growth exponent guards") {
  const SpectrumSpec spec = n_squared();
  CHECK_THROWS_AS(growth_exponent(DampingFunction::power(0.0), spec, 10.0, 1e3, 100, 100),
                  NotSemiuniform);
  CHECK_THROWS_AS(growth_exponent(DampingFunction::power(-1.0), spec, 10.0, 12.0, 5, 100),
                  InsufficientRange);
}

TEST_CASE("bt consistency guard for exponential systems") {
  CHECK_THROWS_AS(bt_consistency(DampingFunction::power(0.0), n_squared(), 100),
                  NotSemiuniform);
}

TEST_CASE("profile is sorted with resonances included") {
  const SpectrumSpec spec = n_squared();
  const ResolventProfile profile =
      resolvent_profile(DampingFunction::power(-1.0), spec, 2.0, 20.0, 40, 500);
  REQUIRE(!profile.samples.empty());
  for (std::size_t i = 1; i < profile.samples.size(); ++i)
    CHECK(profile.samples[i - 1].lambda < profile.samples[i].lambda);
  // Integer resonances sqrt(n^2) = n inside [2, 20] are on the grid.
  bool found_7 = false;
  for (const auto& s : profile.samples)
    if (s.lambda == 7.0) found_7 = true;
  CHECK(found_7);
}
