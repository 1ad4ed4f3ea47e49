// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/damping.hpp"

#include <cmath>
#include <limits>

#include "doctest.h"

using namespace semistab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SpectrumSpec n_squared() {
  return SpectrumSpec::discrete({}, TailFormula{TailForm::Square, 1.0, 1.0, 2.0, 1});
}

SpectrumSpec rotational_spectrum(double omega) {
  return SpectrumSpec::discrete({}, TailFormula{TailForm::RotationalQuotient, omega, 1.0, 2.0, 1});
}

}  // namespace

TEST_CASE("family evaluation") {
  CHECK(DampingFunction::power(-1.0)(4.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(DampingFunction::zero()(7.0) == 0.0);
  CHECK(DampingFunction::constant(2.5)(3.0) == 2.5);

  // Rotational inertia at s = lambda^2/(1+omega lambda) equals
  // lambda^theta/(1+omega lambda); here lambda = 4, omega = 1, theta = 0.
  const DampingFunction f = DampingFunction::rotational_inertia(0.0, 1.0);
  CHECK(f(3.2) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("family evaluation matches the defining formulas directly") {
  const DampingFunction pw = DampingFunction::power(0.7);
  const DampingFunction ri = DampingFunction::rotational_inertia(1.3, 0.25);
  for (double s : {0.5, 1.0, 3.7, 42.0, 1e4, 1e8}) {
    CHECK(pw(s) == doctest::Approx(std::pow(s, 0.7)).epsilon(1e-14));
    const double lam = (0.25 * s + std::sqrt(0.25 * 0.25 * s * s + 4.0 * s)) / 2.0;
    CHECK(ri(s) == doctest::Approx(s * std::pow(lam, 1.3 - 2.0)).epsilon(1e-14));
  }
}

TEST_CASE("rotational inertia eigenvalue identity") {
  // f(lambda^2/(1+omega lambda)) = lambda^theta/(1+omega lambda) for all
  // lambda > 0; checked over the n^2 sequence and a theta/omega grid.
  for (double theta : {-1.0, 0.0, 0.5, 1.0, 2.0, 2.5}) {
    for (double omega : {0.25, 1.0, 4.0}) {
      const DampingFunction f = DampingFunction::rotational_inertia(theta, omega);
      for (int n = 1; n <= 100; ++n) {
        const double lam = static_cast<double>(n) * n;
        const double s = lam * lam / (1.0 + omega * lam);
        const double expected = std::pow(lam, theta) / (1.0 + omega * lam);
        CHECK(f(s) == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("tabulated interpolation and range errors") {
  const DampingFunction f = DampingFunction::tabulated({{1.0, 2.0}, {3.0, 4.0}});
  CHECK(f(1.0) == 2.0);
  CHECK(f(2.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(f(3.0) == 4.0);
  CHECK_THROWS_AS(f(0.5), OutOfRange);
  CHECK_THROWS_AS(f(3.5), OutOfRange);

  const DampingFunction with_tail =
      DampingFunction::tabulated({{1.0, 2.0}, {3.0, 4.0}}, DampingTail{-1.0, 6.0});
  CHECK(with_tail(6.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("damping construction errors") {
  CHECK_THROWS_AS(DampingFunction::constant(-1.0), InvalidParameter);
  CHECK_THROWS_AS(DampingFunction::rotational_inertia(0.0, 0.0), InvalidParameter);
  CHECK_THROWS_AS(DampingFunction::tabulated({{1.0, 1.0}}), InvalidParameter);
  CHECK_THROWS_AS(DampingFunction::tabulated({{1.0, -1.0}, {2.0, 1.0}}), InvalidParameter);
  CHECK_THROWS_AS(DampingFunction::tabulated({{-1.0, 1.0}, {2.0, 1.0}}), NonPositivePoint);
}

TEST_CASE("extremes closed forms on the n^2 spectrum") {
  const SpectrumSpec spec = n_squared();

  SUBCASE("power theta=2: f/s unbounded") {
    const auto ex = extremes(DampingFunction::power(2.0), spec);
    CHECK(ex.sup_f_over_s.value == kInf);
    CHECK(ex.sup_f_over_s.exact);
  }
  SUBCASE("power theta=0: constant damping") {
    const auto ex = extremes(DampingFunction::power(0.0), spec);
    CHECK(ex.inf_f.value == 1.0);
    CHECK(ex.sup_f_over_s.value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ex.inf_f.exact);
  }
  SUBCASE("power theta=-1: inf reached in the limit") {
    const auto ex = extremes(DampingFunction::power(-1.0), spec);
    CHECK(ex.inf_f.value == 0.0);
    CHECK(ex.inf_f.exact);
    CHECK(ex.sup_f_over_s.value == doctest::Approx(1.0).epsilon(1e-15));
    // The sampled infimum decreases toward the closed-form limit.
    double prev = kInf;
    for (int budget : {10, 100, 1000, 100000}) {
      double inf_sample = kInf;
      for (double s : sample_modes(spec, budget))
        inf_sample = std::min(inf_sample, 1.0 / s);
      CHECK(inf_sample <= prev);
      prev = inf_sample;
    }
    CHECK(prev > 0.0);
    CHECK(prev < 1e-9);
  }
}

TEST_CASE("extremes on bounded spectra are attained at list points") {
  const SpectrumSpec spec = SpectrumSpec::discrete({2.0, 5.0});
  const auto ex = extremes(DampingFunction::power(1.0), spec);
  CHECK(ex.inf_f.value == 2.0);
  CHECK(ex.sup_f_over_s.value == 1.0);
  CHECK(ex.sup_f_over_sqrt_s.value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(ex.inf_f.exact);
}

TEST_CASE("rotational inertia extremes against dense sampling") {
  for (double theta : {-0.5, 0.0, 0.5, 1.0, 1.25, 1.5, 1.75, 2.0, 2.5}) {
    const DampingFunction f = DampingFunction::rotational_inertia(theta, 1.0);
    const SpectrumSpec spec = rotational_spectrum(1.0);
    const auto ex = extremes(f, spec);
    double inf_s = kInf, sup_ratio = 0.0, sup_sqrt = 0.0;
    for (double s : sample_modes(spec, 3000)) {
      const double fs = f(s);
      inf_s = std::min(inf_s, fs);
      sup_ratio = std::max(sup_ratio, fs / s);
      sup_sqrt = std::max(sup_sqrt, fs / std::sqrt(s));
    }
    // Closed forms bound the samples from the correct side.
    CHECK(ex.inf_f.value <= inf_s + 1e-12);
    CHECK(ex.sup_f_over_s.value >= sup_ratio - 1e-12);
    CHECK(ex.sup_f_over_sqrt_s.value >= sup_sqrt - 1e-12);
    // And the samples approach them for the attained cases.
    if (std::isfinite(ex.sup_f_over_s.value))
      CHECK(sup_ratio == doctest::Approx(ex.sup_f_over_s.value).epsilon(0.05));
  }
}

TEST_CASE("rotational extremes skip peaks falling between intervals") {
  // theta = 1.25, omega = 1: f/sqrt(s) peaks at lambda = 1, i.e. s = 1/2,
  // which lies in the gap of this spectrum; the supremum must come from
  // the interval endpoints, not the unattained peak.
  const DampingFunction f = DampingFunction::rotational_inertia(1.25, 1.0);
  const SpectrumSpec spec =
      SpectrumSpec::continuous({{0.1, 0.2, false}, {5.0, 9.0, false}});
  const auto ex = extremes(f, spec);
  CHECK(ex.sup_f_over_sqrt_s.exact);
  double dense = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    for (auto [lo, hi] : {std::pair{0.1, 0.2}, std::pair{5.0, 9.0}}) {
      const double s = lo + (hi - lo) * i / 2000.0;
      dense = std::max(dense, f(s) / std::sqrt(s));
    }
  }
  CHECK(ex.sup_f_over_sqrt_s.value == doctest::Approx(dense).epsilon(1e-6));
  // The peak value itself is strictly larger.
  CHECK(ex.sup_f_over_sqrt_s.value < std::pow(1.0, 0.25) / std::sqrt(2.0) - 1e-3);
}

TEST_CASE("tabulated extremes with tail metadata") {
  const SpectrumSpec spec = n_squared();
  const DampingFunction f = DampingFunction::tabulated(
      {{1.0, 2.0}, {10.0, 1.0}, {100.0, 0.5}}, DampingTail{-1.0, 50.0});
  const auto ex = extremes(f, spec);
  CHECK(ex.inf_f.exact);
  CHECK(ex.inf_f.value == 0.0);  // tail decays to zero
  CHECK(std::isfinite(ex.sup_f_over_s.value));

  const DampingFunction no_tail = DampingFunction::tabulated({{1.0, 2.0}, {100.0, 0.5}});
  const auto ex2 = extremes(no_tail, spec);
  CHECK_FALSE(ex2.inf_f.exact);
}

TEST_CASE("extremes monotone under budget growth for sampled data") {
  const SpectrumSpec spec = SpectrumSpec::continuous({{1.0, 0.0, true}});
  const DampingFunction f = DampingFunction::tabulated(
      {{1.0, 2.0}, {7.0, 0.3}, {50.0, 1.0}, {5000.0, 0.1}});
  double prev_inf = kInf, prev_sup = 0.0;
  for (int budget : {4, 16, 64, 256}) {
    const auto ex = extremes(f, spec, budget);
    CHECK(ex.inf_f.value <= prev_inf + 1e-15);
    CHECK(ex.sup_f_over_s.value >= prev_sup - 1e-15);
    prev_inf = ex.inf_f.value;
    prev_sup = ex.sup_f_over_s.value;
  }
}

TEST_CASE("rate exponents") {
  const SpectrumSpec spec = n_squared();
  SUBCASE("power theta=-1") {
    const auto r = rate_exponents(DampingFunction::power(-1.0), spec);
    REQUIRE(r.alpha);
    REQUIRE(r.beta);
    CHECK(r.alpha->value == 1.0);
    CHECK(r.beta->value == 1.0);
    CHECK(r.alpha->exact);
  }
  SUBCASE("rotational inertia theta=0") {
    const auto r =
        rate_exponents(DampingFunction::rotational_inertia(0.0, 1.0), rotational_spectrum(1.0));
    REQUIRE(r.alpha);
    CHECK(r.alpha->value == 1.0);
    CHECK(r.beta->value == 1.0);
  }
  SUBCASE("power theta=0 needs no weight") {
    const auto r = rate_exponents(DampingFunction::power(0.0), spec);
    CHECK_FALSE(r.alpha);
    CHECK_FALSE(r.beta);
  }
  SUBCASE("bounded spectra have no exponents") {
    const auto r = rate_exponents(DampingFunction::power(-1.0), SpectrumSpec::discrete({2.0, 5.0}));
    CHECK_FALSE(r.alpha);
    CHECK_FALSE(r.beta);
  }
}

TEST_CASE("rate exponent numeric consistency") {
  const SpectrumSpec spec = n_squared();
  SUBCASE("power: s^alpha f = 1 exactly") {
    const DampingFunction f = DampingFunction::power(-0.5);
    const auto r = rate_exponents(f, spec);
    REQUIRE(r.alpha);
    for (double s : sample_modes(spec, 500)) {
      CHECK(std::pow(s, r.alpha->value) * f(s) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("rotational inertia: weighted sup bounded by omega^(theta-2)") {
    const double theta = 0.0, omega = 1.0;
    const DampingFunction f = DampingFunction::rotational_inertia(theta, omega);
    const SpectrumSpec rspec = rotational_spectrum(omega);
    const auto r = rate_exponents(f, rspec);
    REQUIRE(r.beta);
    const double bound = std::pow(omega, theta - 2.0);
    double inf_weighted = kInf;
    for (double s : sample_modes(rspec, 500)) {
      const double weighted = std::pow(s, r.beta->value) * f(s);
      CHECK(weighted <= bound * (1.0 + 1e-12));
      inf_weighted = std::min(inf_weighted, weighted);
    }
    CHECK(inf_weighted > 0.0);
  }
}

TEST_CASE("ratio limit points") {
  const SpectrumSpec spec = n_squared();
  CHECK(ratio_limit_points(DampingFunction::power(1.0), spec).values ==
        std::vector<double>{1.0});
  CHECK(ratio_limit_points(DampingFunction::power(1.0), SpectrumSpec::discrete({2.0, 5.0}))
            .values.empty());
  CHECK(ratio_limit_points(DampingFunction::rotational_inertia(2.0, 1.0),
                           rotational_spectrum(1.0))
            .values == std::vector<double>{1.0});
  CHECK(ratio_limit_points(DampingFunction::power(0.99), spec).values.empty());

  const DampingFunction tab_tail =
      DampingFunction::tabulated({{1.0, 1.0}, {10.0, 30.0}}, DampingTail{1.0, 3.0});
  CHECK(ratio_limit_points(tab_tail, spec).values == std::vector<double>{3.0});

  const DampingFunction tab_plain = DampingFunction::tabulated({{1.0, 1.0}, {10.0, 30.0}});
  const auto lim = ratio_limit_points(tab_plain, spec);
  CHECK(lim.values.empty());
  CHECK_FALSE(lim.certified);
}
