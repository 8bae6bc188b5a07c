#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "stretchft/closed_forms.hpp"
#include "stretchft/errors.hpp"
#include "stretchft/transform.hpp"

namespace {

using namespace stretchft;
constexpr double kPi = std::numbers::pi;

TEST(StretchSpec, Validation) {
  EXPECT_NO_THROW(StretchSpec(4.0, 1));
  EXPECT_THROW(StretchSpec(0.0, 1), DomainError);
  EXPECT_THROW(StretchSpec(-1.0, 1), DomainError);
  EXPECT_THROW(StretchSpec(1.0, 0), DomainError);
  EXPECT_THROW(StretchSpec(NAN, 1), DomainError);
}

TEST(SphereArea, Examples) {
  EXPECT_NEAR(sphere_area(1), 2.0, 1e-15);
  EXPECT_NEAR(sphere_area(2), 2.0 * kPi, 1e-14);
  EXPECT_NEAR(sphere_area(3), 4.0 * kPi, 1e-14);
  EXPECT_THROW(sphere_area(0), DomainError);
}

TEST(FtAtZero, Examples) {
  EXPECT_NEAR(ft_at_zero(StretchSpec(1.0, 1)), 2.0, 1e-14);
  EXPECT_NEAR(ft_at_zero(StretchSpec(2.0, 2)), kPi, 1e-14);
  EXPECT_NEAR(ft_at_zero(StretchSpec(1.0, 3)), 8.0 * kPi, 1e-13);
  EXPECT_NEAR(ft_at_zero(StretchSpec(0.5, 1)), 4.0, 1e-14);
}

TEST(FtAtZero, LogFormAndLargeRatio) {
  for (double s : {0.1, 0.5, 2.0, 3.0}) {
    for (int d : {1, 3, 10}) {
      const StretchSpec spec(s, d);
      EXPECT_NEAR(log_ft_at_zero(spec), std::log(ft_at_zero(spec)), 1e-12 * std::abs(log_ft_at_zero(spec)) + 1e-14);
    }
  }
  // d/s beyond the direct Gamma range, finite overall
  const StretchSpec wide(1.7, 300);
  EXPECT_TRUE(std::isfinite(ft_at_zero(wide)));
  EXPECT_NEAR(std::log(ft_at_zero(wide)), log_ft_at_zero(wide), 1e-10 * log_ft_at_zero(wide));
  EXPECT_THROW(ft_at_zero(StretchSpec(0.05, 10)), OverflowError);
}

TEST(GaussianFt, Examples) {
  EXPECT_NEAR(gaussian_ft(kPi, 2, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(gaussian_ft(1.0, 1, 0.0), std::sqrt(kPi), 1e-15);
  EXPECT_NEAR(gaussian_ft(1.0, 1, 1.0), 9.16769605680501808e-05, 1e-18);
  EXPECT_THROW(gaussian_ft(0.0, 1, 1.0), DomainError);
  EXPECT_NEAR(log_gaussian_ft(std::log(2.5), 3, 0.7), std::log(gaussian_ft(2.5, 3, 0.7)), 1e-14);
}

TEST(ClosedForm, Examples) {
  EXPECT_NEAR(ft_closed_form(2.0, 3, 0.0), std::pow(kPi, 1.5), 1e-14);
  EXPECT_NEAR(ft_closed_form(1.0, 1, 0.0), 2.0, 1e-15);
  EXPECT_NEAR(ft_closed_form(1.0, 3, 0.0), 8.0 * kPi, 1e-13);
  EXPECT_NEAR(ft_closed_form(1.0, 1, 1.0), 0.0494090460637152802, 1e-16);
  EXPECT_THROW(ft_closed_form(1.5, 1, 0.0), DomainError);
}

TEST(ClosedForm, AgreesWithNormalizationAtOrigin) {
  for (double s : {1.0, 2.0}) {
    for (int d : {1, 2, 3, 5, 10}) {
      EXPECT_NEAR(ft_closed_form(s, d, 0.0) / ft_at_zero(StretchSpec(s, d)), 1.0, 1e-13) << s << " " << d;
    }
  }
}

TEST(Hankel, Examples) {
  EXPECT_NEAR(ft_radial_hankel(StretchSpec(2.0, 1), 0.5).value, 0.150312900032361890, 1e-12);
  EXPECT_NEAR(ft_radial_hankel(StretchSpec(2.0, 1), 0.5).value, gaussian_ft(1.0, 1, 0.5), 1e-12);
  EXPECT_NEAR(ft_radial_hankel(StretchSpec(1.0, 1), 1.0).value, 2.0 / (1.0 + 4.0 * kPi * kPi), 1e-12);
  for (double s : {0.3, 1.7, 3.0}) {
    EXPECT_EQ(ft_radial_hankel(StretchSpec(s, 2), 0.0).value, ft_at_zero(StretchSpec(s, 2)));
  }
  EXPECT_THROW(ft_radial_hankel(StretchSpec(1.0, 1), -1.0), DomainError);
}

TEST(Hankel, IndependentReferenceValues) {
  // 30-digit values from an independent oscillatory quadrature
  struct Ref {
    double s;
    int d;
    double r, value;
  };
  const std::vector<Ref> refs = {{1.5, 1, 1.0, 0.0233105747384550847},
                                 {1.5, 2, 0.7, 0.0579739492184590783},
                                 {0.5, 3, 1.0, 0.0121657908934069052},
                                 {0.75, 2, 0.5, 0.145580948368941296},
                                 {1.5, 3, 2.0, 0.000374756466041501643},
                                 {4.0, 1, 0.55, -0.000820199243252244352},
                                 {3.0, 2, 1.0, -0.0313822013155652202}};
  for (const auto& r : refs) {
    const auto h = ft_radial_hankel(StretchSpec(r.s, r.d), r.r);
    EXPECT_NEAR(h.value, r.value, 1e-10) << r.s << " " << r.d << " " << r.r;
    EXPECT_LE(std::abs(h.value - r.value), 3.0 * h.abs_err + 1e-13);
    if (r.s <= 2.0) {
      const auto m = ft(StretchSpec(r.s, r.d), r.r, FtMethodChoice::mixture);
      EXPECT_NEAR(m.result.value, r.value, 1e-10);
      EXPECT_LE(std::abs(m.result.value - r.value), 3.0 * m.result.abs_err + 1e-13);
    }
  }
}

TEST(Hankel, OddDimensionElementaryForm) {
  // d = 3: f^(r) = (2 / r) int_0^inf exp(-rho^s) rho sin(2 pi r rho) d rho
  for (double s : {0.8, 1.5, 3.0}) {
    for (double r : {0.3, 1.1}) {
      const double w = 2.0 * kPi * r;
      const auto sine = integrate_bessel_oscillatory(
          [s](double rho) { return std::exp(-std::pow(rho, s)) * std::pow(rho, 1.5); }, 0.5, w);
      const double elementary = 2.0 * kPi * std::pow(r, -0.5) * sine.value;
      EXPECT_NEAR(ft_radial_hankel(StretchSpec(s, 3), r).value, elementary, 1e-10) << s << " " << r;
    }
  }
}

TEST(Ft, Dispatch) {
  const auto gauss = ft(StretchSpec(2.0, 2), 1.0);
  EXPECT_EQ(gauss.method, FtMethod::closed_form);
  EXPECT_NEAR(gauss.result.value, kPi * std::exp(-kPi * kPi), 1e-16);
  EXPECT_EQ(ft(StretchSpec(1.5, 2), 0.7).method, FtMethod::mixture);
  EXPECT_EQ(ft(StretchSpec(1.95, 2), 0.7).method, FtMethod::hankel);
  EXPECT_EQ(ft(StretchSpec(3.0, 2), 0.7).method, FtMethod::hankel);
  EXPECT_EQ(ft(StretchSpec(1.5, 2), 0.0).method, FtMethod::normalization);
  EXPECT_THROW(ft(StretchSpec(1.5, 2), 0.7, FtMethodChoice::closed), DomainError);
  EXPECT_THROW(ft(StretchSpec(3.0, 2), 0.7, FtMethodChoice::mixture), DomainError);
  EXPECT_THROW(parse_method_choice("fft"), DomainError);
  EXPECT_EQ(parse_method_choice("auto"), FtMethodChoice::automatic);
}

TEST(Ft, CrossMethodAgreementOnSpecGrid) {
  for (double s : {0.5, 1.0, 1.5, 2.0}) {
    for (int d : {1, 2, 3}) {
      for (double r : {0.0, 0.25, 0.5, 1.0, 2.0, 5.0}) {
        const StretchSpec spec(s, d);
        const auto h = ft(spec, r, FtMethodChoice::hankel);
        const auto m = ft(spec, r, FtMethodChoice::mixture);
        EXPECT_LE(std::abs(h.result.value - m.result.value), 3.0 * (h.result.abs_err + m.result.abs_err))
            << s << " " << d << " " << r;
      }
    }
  }
}

TEST(Ft, OriginConsistency) {
  for (double s : {0.5, 1.0, 1.5, 2.0}) {
    for (int d : {1, 2, 3}) {
      const StretchSpec spec(s, d);
      const double z = ft_at_zero(spec);
      for (auto m : {FtMethodChoice::automatic, FtMethodChoice::hankel, FtMethodChoice::mixture}) {
        EXPECT_NEAR(ft(spec, 0.0, m).result.value / z, 1.0, 1e-10);
      }
    }
  }
  EXPECT_NEAR(ft(StretchSpec(0.5, 1), 0.0).result.value, 4.0, 1e-14);
}

TEST(Ft, OracleAgreementAtClosedForms) {
  for (double s : {1.0, 2.0}) {
    for (int d : {1, 2, 3}) {
      for (double r = 0.0; r <= 3.0; r += 0.25) {
        const StretchSpec spec(s, d);
        const double exact = ft_closed_form(s, d, r);
        EXPECT_NEAR(ft(spec, r, FtMethodChoice::hankel).result.value, exact, 1e-8);
        EXPECT_NEAR(ft(spec, r, FtMethodChoice::mixture).result.value, exact, 1e-8);
      }
    }
  }
}

TEST(Ft, MonotoneDecayAndPositivity) {
  for (double s : {0.25, 0.75, 1.25, 1.75, 2.0}) {
    for (int d : {1, 3, 5}) {
      double prev = INFINITY;
      for (double r = 0.0; r <= 10.0; r += 0.5) {
        const auto v = ft(StretchSpec(s, d), r);
        EXPECT_TRUE(v.certified_positive()) << s << " " << d << " " << r;
        if (v.result.value > 0) {
          EXPECT_LT(v.result.value, prev);
          prev = v.result.value;
        }
      }
    }
  }
}

TEST(Ft, UnderflowedClosedFormStaysCertified) {
  const auto v = ft(StretchSpec(2.0, 1), 10.0);
  EXPECT_EQ(v.result.value, 0.0);
  EXPECT_TRUE(v.certified_positive());
  EXPECT_FALSE(v.certified_negative());
  EXPECT_NEAR(v.log_value, 0.5 * std::log(kPi) - 100.0 * kPi * kPi, 1e-10);
}

TEST(Ft, VectorArgumentUsesTheNorm) {
  const StretchSpec spec(1.0, 3);
  const std::vector<double> xi = {0.3, -0.4, 0.0};
  EXPECT_DOUBLE_EQ(ft_at(spec, xi).result.value, ft(spec, 0.5).result.value);
  EXPECT_THROW(ft_at(spec, std::vector<double>{1.0}), DomainError);
}

TEST(Ft, SignConventionIsIrrelevantForRadialFunctions) {
  // the transform of a real radial function is real and even in xi
  const StretchSpec spec(1.3, 2);
  const std::vector<double> a = {0.6, 0.2};
  const std::vector<double> b = {-0.6, -0.2};
  EXPECT_EQ(ft_at(spec, a).result.value, ft_at(spec, b).result.value);
}

}  // namespace
