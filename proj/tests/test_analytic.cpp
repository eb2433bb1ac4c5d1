#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "spinfr/analytic.hpp"

using namespace spinfr;

// closed-form value at the default operating point, t = 20 ps, tau = 1
static constexpr double kThetaPlus = 1.929069037103836e-2;

TEST_CASE("solution coefficients at the default operating point") {
  const PhysicalParams p = preset::paper_params();
  const auto c = solution_coefficients(p, preset::kPaperTimeSeconds);
  CHECK(c.alpha == doctest::Approx(-9.8e-3).epsilon(1e-12));
  CHECK(c.omega_shift == doctest::Approx(-9.604e8).epsilon(1e-12));

  CHECK(std::abs(solution_coefficients(p, 0.0).g) == 0.0);
  const double t_pi = std::numbers::pi / p.detuning();
  // e^{-i pi} = -1, so g = 2 alpha (negative t is fine for the coefficients)
  const auto g_pi = solution_coefficients(p, t_pi).g;
  CHECK(g_pi.real() == doctest::Approx(2.0 * c.alpha).epsilon(1e-9));
  CHECK(std::abs(g_pi.imag()) < 1e-12);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ts(0.0, 1e-9);
  for (int i = 0; i < 1000; ++i)
    CHECK(std::abs(solution_coefficients(p, ts(rng)).g) <= 2.0 * std::abs(c.alpha) + 1e-15);
}

TEST_CASE("rotation angle closed form") {
  const PhysicalParams p = preset::paper_params();
  const double t = preset::kPaperTimeSeconds;

  const double theta_plus = faraday_angle(p, t, SpinMixture(1.0)).theta_rad;
  CHECK(theta_plus == doctest::Approx(kThetaPlus).epsilon(1e-14));

  CHECK(faraday_angle(p, 0.0, SpinMixture(1.0)).theta_rad == 0.0);
  CHECK(faraday_angle(p, t, SpinMixture(0.5)).theta_rad == 0.0);
  CHECK(faraday_angle(p, t, SpinMixture(0.0)).theta_rad == -theta_plus);
  CHECK_THROWS_AS(faraday_angle(p, -1.0, SpinMixture(1.0)), std::invalid_argument);
}

TEST_CASE("mixture linearity and antisymmetry over random inputs") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> lam(1e9, 5e11), wp(1e15, 3e15), dw(1e12, 5e13);
  std::uniform_real_distribution<double> time(0.0, 1e-10), tau(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    const double omega_p = wp(rng);
    const PhysicalParams p(lam(rng), omega_p, omega_p + sign * dw(rng));
    const double t = time(rng);
    const double tv = tau(rng);
    const double plus = faraday_angle(p, t, SpinMixture(1.0)).theta_rad;
    const double minus = faraday_angle(p, t, SpinMixture(0.0)).theta_rad;
    const double mixed = faraday_angle(p, t, SpinMixture(tv)).theta_rad;
    CHECK(std::abs(mixed - (tv * plus + (1.0 - tv) * minus)) <=
          1e-15 * std::abs(plus) + 1e-300);
    CHECK(std::abs(mixed + faraday_angle(p, t, SpinMixture(1.0 - tv)).theta_rad) <=
          1e-15 * std::abs(plus) + 1e-300);
  }
}

TEST_CASE("fluctuation closed form") {
  const PhysicalParams p = preset::paper_params();
  const double t = preset::kPaperTimeSeconds;

  SUBCASE("pure states see shot noise only") {
    CHECK(faraday_fluctuation(p, t, SpinMixture(1.0), 5e5) ==
          doctest::Approx(7.0710678118654755e-4).epsilon(1e-12));
    CHECK(faraday_fluctuation(p, t, SpinMixture(0.0), 123.0) ==
          doctest::Approx(0.5 / std::sqrt(123.0)).epsilon(1e-12));
  }

  SUBCASE("mixed states saturate at the intrinsic level") {
    const double sat = faraday_fluctuation(p, t, SpinMixture(0.5), 1e12);
    CHECK(sat == doctest::Approx(kThetaPlus).epsilon(1e-9));
  }

  SUBCASE("floor and monotonicity") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> tau(0.0, 1.0), logn(1.0, 12.0);
    for (int i = 0; i < 1000; ++i) {
      const double tv = tau(rng);
      const double n = std::pow(10.0, logn(rng));
      const double f = faraday_fluctuation(p, t, SpinMixture(tv), n);
      CHECK(f >= 0.5 / std::sqrt(n) - 1e-18);
      CHECK(f >= faraday_fluctuation(p, t, SpinMixture(tv), 2.0 * n) - 1e-18);
    }
    // equality holds exactly on the pure boundary
    CHECK(faraday_fluctuation(p, t, SpinMixture(1.0), 777.0) ==
          doctest::Approx(0.5 / std::sqrt(777.0)).epsilon(1e-14));
  }

  SUBCASE("shot-noise scaling has log-log slope -1/2") {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int points = 33;
    for (int i = 0; i < points; ++i) {
      const double logn = 2.0 + 8.0 * i / (points - 1);
      const double x = logn * std::numbers::ln10;
      const double y = std::log(faraday_fluctuation(p, t, SpinMixture(1.0), std::pow(10, logn)));
      sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double slope = (points * sxy - sx * sy) / (points * sxx - sx * sx);
    CHECK(std::abs(slope + 0.5) < 1e-6);
  }

  CHECK_THROWS_AS(faraday_fluctuation(p, t, SpinMixture(0.5), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(faraday_fluctuation(p, t, SpinMixture(0.5), -5.0), std::invalid_argument);
}

TEST_CASE("angle extraction from stokes expectations") {
  CHECK(faraday_from_stokes(0.0, 3.0).exact_rad == 0.0);
  CHECK(faraday_from_stokes(0.0, 3.0).small_angle_rad == 0.0);

  const auto tiny = faraday_from_stokes(2e-5, 1.0);
  CHECK(tiny.small_angle_rad == doctest::Approx(1e-5).epsilon(1e-12));
  CHECK(tiny.exact_rad == doctest::Approx(1e-5).epsilon(1e-9));

  const auto big = faraday_from_stokes(1.0, 1.0);  // outside the small-angle regime
  CHECK(big.exact_rad == doctest::Approx(std::numbers::pi / 8).epsilon(1e-12));
  CHECK(big.small_angle_rad == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(faraday_from_stokes(1.0, 0.0), std::invalid_argument);

  // the two forms differ by the cubic arctangent term: |diff|/|exact| ~ x^2/3
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xs(-1e-2, 1e-2);
  for (int i = 0; i < 1000; ++i) {
    const double x = xs(rng);
    if (x == 0.0) continue;
    const auto a = faraday_from_stokes(x, 1.0);
    const double rel = std::abs(a.exact_rad - a.small_angle_rad) / std::abs(a.exact_rad);
    CHECK(rel <= x * x / 3.0 * (1.0 + 1e-6) + 1e-15);
  }
}
