#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fd_oracle.hpp"
#include "stretchft/errors.hpp"
#include "stretchft/monotone.hpp"

namespace {

using namespace stretchft;

TEST(StretchExponent, Validation) {
  EXPECT_EQ(StretchExponent(1.5).value(), 1.5);
  EXPECT_THROW((void)StretchExponent(0.0), DomainError);
  EXPECT_THROW((void)StretchExponent(INFINITY), DomainError);
}

TEST(FallingFactorial, Examples) {
  EXPECT_EQ(falling_factorial(0.3, 0), 1.0);
  EXPECT_DOUBLE_EQ(falling_factorial(0.5, 2), -0.25);
  EXPECT_EQ(falling_factorial(1.0, 3), 0.0);
  EXPECT_EQ(falling_factorial(2.0, 5), 0.0);
  EXPECT_DOUBLE_EQ(falling_factorial(5.0, 3), 60.0);
  EXPECT_EQ(falling_factorial(Extended(1), 4), 0);
}

TEST(GDeriv, Examples) {
  for (double x : {0.1, 1.0, 7.0}) EXPECT_DOUBLE_EQ(g_deriv(1.0, 1, x), -1.0);
  EXPECT_DOUBLE_EQ(g_deriv(0.5, 2, 1.0), 0.25);
  EXPECT_DOUBLE_EQ(g_deriv(0.5, 1, 4.0), -0.25);
  EXPECT_THROW(g_deriv(0.5, 1, 0.0), DomainError);
  EXPECT_THROW(g_deriv(0.5, 0, 1.0), DomainError);
}

TEST(GDeriv, AlternatingSignsForSmallExponents) {
  // g^(n+1) = -s (s-1) ... (s-n) x^{s-n-1} and the product has n negative
  // factors when s <= 1, so (-1)^{n+1} g^(n+1) >= 0
  for (double s : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    for (double x : {0.05, 0.5, 1.0, 5.0, 20.0}) {
      for (int n = 0; n <= 20; ++n) {
        const double v = (n % 2 == 0 ? -1.0 : 1.0) * g_deriv(s, n + 1, x);
        EXPECT_GE(v, 0.0) << s << " " << x << " " << n;
      }
    }
  }
}

TEST(GDeriv, ExtendedAgreesWithDouble) {
  const auto ext = g_derivs_extended(0.7, 8, 1.3);
  const auto dbl = g_derivs(0.7, 8, 1.3);
  ASSERT_EQ(ext.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(ext[k].convert_to<double>(), dbl[k], 1e-14 * std::abs(dbl[k]));
  }
}

TEST(FDeriv, Examples) {
  for (int n = 0; n <= 6; ++n) {
    for (double x : {0.3, 2.0}) {
      EXPECT_NEAR(f_deriv(1.0, n, x), (n % 2 == 0 ? 1.0 : -1.0) * std::exp(-x), 1e-15);
    }
  }
  EXPECT_NEAR(f_deriv(2.0, 1, 1.0), -2.0 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(f_deriv(0.5, 2, 1.0), 0.5 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(f_deriv(0.5, 2, 1.0, Precision::fp64), 0.5 * std::exp(-1.0), 1e-15);
}

TEST(FDeriv, RangeErrorsAreRaised) {
  EXPECT_THROW(f_deriv(0.5, 1, -1.0), DomainError);
  // huge derivative of exp(-x^0.5) near the origin
  EXPECT_THROW(f_deriv(0.5, 60, 1e-8), OverflowError);
  // exp(-x^2) at x = 40 is below the double range
  EXPECT_THROW(f_deriv(2.0, 0, 40.0), UnderflowError);
}

TEST(FDeriv, MatchesFiniteDifferences) {
  for (double s : {0.5, 1.0, 1.5}) {
    for (double x : {0.5, 1.0, 2.0}) {
      for (int n = 0; n <= 5; ++n) {
        const double fd = stretchft::testing::fd_stretched(s, n, x).convert_to<double>();
        EXPECT_NEAR(f_deriv(s, n, x), fd, 1e-6 * std::abs(fd)) << s << " " << x << " " << n;
      }
    }
  }
}

TEST(CMCheck, Examples) {
  const std::vector<double> pts = {0.1, 1.0, 10.0};
  const auto exp_report = cm_check(1.0, 20, pts, default_cm_tolerance(Precision::extended));
  EXPECT_FALSE(exp_report.first_violation);
  EXPECT_TRUE(exp_report.all_positive());

  const auto sqrt_report = cm_check(0.5, 20, pts, default_cm_tolerance(Precision::extended));
  EXPECT_FALSE(sqrt_report.first_violation);
  EXPECT_TRUE(sqrt_report.all_positive());

  const std::vector<double> one = {0.1};
  const auto bad = cm_check(1.5, 2, one, default_cm_tolerance(Precision::extended));
  ASSERT_TRUE(bad.first_violation);
  EXPECT_EQ(bad.first_violation->n, 2);
  EXPECT_EQ(bad.first_violation->x, 0.1);
  // f'' = (s^2 x^{2s-2} - s(s-1) x^{s-2}) exp(-x^s)
  const double x = 0.1;
  const double expect = (2.25 * std::pow(x, 1.0) - 0.75 * std::pow(x, -0.5)) * std::exp(-std::pow(x, 1.5));
  EXPECT_NEAR(bad.records.back().value, expect, 1e-14);
}

TEST(CMCheck, RecordLayout) {
  const std::vector<double> pts = {0.5, 2.0};
  const auto r = cm_check(0.75, 4, pts, 1e-30);
  EXPECT_EQ(r.records.size(), 10u);
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    EXPECT_EQ(r.records[i].n, static_cast<int>(i / 2));
    EXPECT_EQ(r.records[i].x, pts[i % 2]);
  }
  for (const auto& rec : r.records) {
    if (rec.n == 0) {
      EXPECT_DOUBLE_EQ(rec.value, std::exp(-std::pow(rec.x, 0.75)));
    }
    EXPECT_GT(rec.scale, 0.0);
  }
}

TEST(CMCheck, CompletelyMonotoneGrid) {
  const std::vector<double> pts = {0.05, 0.5, 1.0, 5.0, 20.0};
  for (double s : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    const auto r = cm_check(s, 20, pts, default_cm_tolerance(Precision::extended));
    EXPECT_TRUE(r.all_positive()) << s;
    for (const auto& rec : r.records) EXPECT_GT(rec.value, 0.0) << s << " " << rec.n << " " << rec.x;
  }
}

TEST(CMCheck, ViolationsAboveOne) {
  const std::vector<double> pts = {0.05, 0.1, 0.5, 1.0};
  for (double s : {1.2, 1.5, 1.9}) {
    const auto r = cm_check(s, 3, pts, default_cm_tolerance(Precision::extended));
    ASSERT_TRUE(r.first_violation) << s;
    EXPECT_LE(r.first_violation->n, 3);
    EXPECT_LE(r.first_violation->x, 1.0);
  }
}

TEST(CMCheck, ViolationIffNegativeRecord) {
  const std::vector<double> pts = {0.2, 3.0};
  for (double s : {0.4, 1.0, 1.3, 2.5, 3.0}) {
    const auto r = cm_check(s, 6, pts, 1e-30);
    bool negative = false;
    for (const auto& rec : r.records) negative |= rec.sign == SignClass::negative;
    EXPECT_EQ(negative, r.first_violation.has_value()) << s;
  }
}

TEST(CMCheck, DoublePrecisionIsForcedUpAboveTen) {
  const std::vector<double> pts = {0.05};
  const auto r = cm_check(0.1, 20, pts, default_cm_tolerance(Precision::fp64), Precision::fp64);
  EXPECT_TRUE(r.all_positive());
}

}  // namespace
