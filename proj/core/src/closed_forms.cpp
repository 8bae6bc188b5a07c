#include "stretchft/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stretchft/errors.hpp"
#include "stretchft/special_functions.hpp"

namespace stretchft {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogPi = std::log(kPi);

void require_dimension(int d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
}

void require_radius(double r) {
  if (!(r >= 0) || !std::isfinite(r)) throw DomainError("radius must be finite and >= 0");
}

double checked_exp(double log_value, const char* what) {
  const double v = std::exp(log_value);
  if (!std::isfinite(v)) throw OverflowError(std::string(what) + ": overflows double");
  return v;
}

}  // namespace

StretchSpec::StretchSpec(double s, int d) : s_(s), d_(d) {
  if (!(s > 0) || !std::isfinite(s)) throw DomainError("StretchSpec: s must be finite and > 0");
  require_dimension(d);
}

double sphere_area(int d) {
  require_dimension(d);
  return 2.0 * std::pow(kPi, 0.5 * d) / gamma_real(0.5 * d);
}

double log_ft_at_zero(const StretchSpec& spec) {
  const double s = spec.s();
  const double d = spec.d();
  return std::log(2.0) + 0.5 * d * kLogPi - std::log(s) + log_gamma(d / s) - log_gamma(0.5 * d);
}

double ft_at_zero(const StretchSpec& spec) {
  const double s = spec.s();
  const int d = spec.d();
  if (d / s <= 170.0) {
    return sphere_area(d) * gamma_real(d / s) / s;
  }
  return checked_exp(log_ft_at_zero(spec), "ft_at_zero");
}

double log_gaussian_ft(double log_t, int d, double r) {
  require_dimension(d);
  require_radius(r);
  if (!std::isfinite(log_t)) throw DomainError("gaussian_ft: t must be finite and > 0");
  const double inv_t = std::exp(-log_t);
  const double decay = (r == 0.0) ? 0.0 : kPi * kPi * r * r * inv_t;
  return 0.5 * d * (kLogPi - log_t) - decay;
}

double gaussian_ft(double t, int d, double r) {
  if (!(t > 0) || !std::isfinite(t)) throw DomainError("gaussian_ft: t must be finite and > 0");
  require_dimension(d);
  require_radius(r);
  return std::pow(kPi / t, 0.5 * d) * std::exp(-kPi * kPi * r * r / t);
}

double log_ft_closed_form(double s, int d, double r) {
  require_dimension(d);
  require_radius(r);
  if (s == 2.0) return 0.5 * d * kLogPi - kPi * kPi * r * r;
  if (s == 1.0) {
    return log_gamma(0.5 * (d + 1)) + d * std::log(2.0) + 0.5 * (d - 1) * kLogPi -
           0.5 * (d + 1) * std::log1p(4.0 * kPi * kPi * r * r);
  }
  throw DomainError("ft_closed_form: closed forms exist only for s = 1 and s = 2");
}

double ft_closed_form(double s, int d, double r) {
  require_dimension(d);
  require_radius(r);
  if (s == 2.0) return std::pow(kPi, 0.5 * d) * std::exp(-kPi * kPi * r * r);
  if (s == 1.0) {
    return gamma_real(0.5 * (d + 1)) * std::ldexp(1.0, d) * std::pow(kPi, 0.5 * (d - 1)) *
           std::pow(1.0 + 4.0 * kPi * kPi * r * r, -0.5 * (d + 1));
  }
  throw DomainError("ft_closed_form: closed forms exist only for s = 1 and s = 2");
}

}  // namespace stretchft
