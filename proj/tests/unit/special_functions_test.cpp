#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "stretchft/errors.hpp"
#include "stretchft/special_functions.hpp"

namespace {

using namespace stretchft;
constexpr double kPi = std::numbers::pi;

TEST(Gamma, Examples) {
  EXPECT_NEAR(gamma_real(5.0), 24.0, 24.0 * 1e-14);
  EXPECT_NEAR(gamma_real(0.5), std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(gamma_real(-0.5), -2.0 * std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(gamma_real(1.0), 1.0, 1e-15);
}

TEST(Gamma, PolesAndRange) {
  EXPECT_THROW(gamma_real(0.0), PoleError);
  EXPECT_THROW(gamma_real(-3.0), PoleError);
  EXPECT_THROW(gamma_real(200.0), OverflowError);
  EXPECT_THROW(gamma_real(std::nan("")), DomainError);
}

TEST(Gamma, RecurrenceOnTenthGrid) {
  for (int k = 1; k <= 400; ++k) {
    const double x = 0.1 * k;
    const double lhs = gamma_real(x + 1.0);
    const double rhs = x * gamma_real(x);
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-12) << "x=" << x;
  }
}

TEST(Gamma, ReflectionOnNegativeArguments) {
  for (double x : {-0.3, -1.5, -2.7, -7.25}) {
    EXPECT_NEAR(gamma_real(x) * gamma_real(1.0 - x) * std::sin(kPi * x) / kPi, 1.0, 1e-12) << x;
  }
}

TEST(LogGamma, MatchesGammaWhereBothExist) {
  for (double x : {0.3, 1.0, 2.5, 17.0, 120.0}) {
    EXPECT_NEAR(log_gamma(x), std::log(gamma_real(x)), 1e-12 * std::max(1.0, std::abs(log_gamma(x))));
  }
}

TEST(SinPi, ExactAtIntegersAndHalves) {
  EXPECT_EQ(sin_pi(3.0), 0.0);
  EXPECT_EQ(sin_pi(-7.0), 0.0);
  EXPECT_DOUBLE_EQ(sin_pi(0.5), 1.0);
  EXPECT_DOUBLE_EQ(sin_pi(1.5), -1.0);
  EXPECT_NEAR(sin_pi(1e6 + 0.25), std::sqrt(0.5), 1e-12);
}

TEST(BesselJ, Examples) {
  EXPECT_EQ(bessel_j(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(2.0, 0.0), 0.0);
  EXPECT_NEAR(bessel_j(0.5, 1.0), 0.671396707141803090, 1e-14);
  EXPECT_NEAR(bessel_j(0.0, 2.404825557695773), 0.0, 1e-10);
}

TEST(BesselJ, HalfIntegerClosedForms) {
  for (double x = 0.25; x <= 100.0; x += 0.75) {
    const double c = std::sqrt(2.0 / (kPi * x));
    EXPECT_NEAR(bessel_j(0.5, x), c * std::sin(x), 1e-12) << x;
    EXPECT_NEAR(bessel_j(-0.5, x), c * std::cos(x), 1e-12) << x;
    EXPECT_NEAR(bessel_j(1.5, x), c * (std::sin(x) / x - std::cos(x)), 1e-12) << x;
  }
}

TEST(BesselJ, ThreeTermRecurrence) {
  for (double nu = 0.0; nu <= 5.0; nu += 0.25) {
    for (double x = 0.5; x <= 50.0; x += 0.5) {
      if (nu - 1.0 < -0.5) continue;
      const double lhs = bessel_j(nu - 1.0, x) + bessel_j(nu + 1.0, x);
      EXPECT_NEAR(lhs, 2.0 * nu / x * bessel_j(nu, x), 1e-9) << "nu=" << nu << " x=" << x;
    }
  }
}

TEST(BesselJ, Domain) {
  EXPECT_THROW(bessel_j(-0.75, 1.0), DomainError);
  EXPECT_THROW(bessel_j(0.0, -1.0), DomainError);
}

TEST(BesselZeros, KnownValues) {
  EXPECT_NEAR(bessel_j_zeros(0.0, 1)[0], 2.40482555769577277, 1e-12);
  EXPECT_NEAR(bessel_j_zeros(1.0, 1)[0], 3.83170597020751232, 1e-12);
  EXPECT_NEAR(bessel_j_zeros(2.5, 3)[2], 12.3229409705665821, 1e-11);
  // zeros of J_{1/2} and J_{-1/2} are k pi and (k - 1/2) pi
  const auto half = bessel_j_zeros(0.5, 40);
  const auto minus_half = bessel_j_zeros(-0.5, 40);
  for (int k = 1; k <= 40; ++k) {
    EXPECT_NEAR(half[k - 1], k * kPi, 1e-10 * k);
    EXPECT_NEAR(minus_half[k - 1], (k - 0.5) * kPi, 1e-10 * k);
  }
}

TEST(BesselZeros, AscendingSimpleAndComplete) {
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.5, 4.0}) {
    const auto z = bessel_j_zeros(nu, 60);
    for (std::size_t k = 0; k < z.size(); ++k) {
      EXPECT_NEAR(bessel_j(nu, z[k]), 0.0, 1e-12) << nu << " " << k;
      if (k > 0) {
        EXPECT_GT(z[k], z[k - 1]);
        // no zero skipped: consecutive zeros are about pi apart
        EXPECT_LT(z[k] - z[k - 1], 1.5 * kPi);
      }
    }
  }
}

}  // namespace
