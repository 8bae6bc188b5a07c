#include "stretchft/transform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stretchft/errors.hpp"
#include "stretchft/special_functions.hpp"

namespace stretchft {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// mixing densities close to the point mass are left to the Hankel integral
constexpr double kMixtureAutoMax = 1.9;

// radius past which exp(-rho^s) rho^{d/2} < e^{-45}
double effective_support(double s, int d) {
  double rho = std::pow(45.0, 1.0 / s);
  for (int i = 0; i < 60; ++i) {
    rho = std::pow(45.0 + 0.5 * d * std::log(std::max(rho, 1.0)), 1.0 / s);
  }
  return std::max(rho, 1.0);
}

void fill_logs(FtValue& out) {
  const double v = out.result.value;
  out.log_value = v > 0 ? std::log(v) : -std::numeric_limits<double>::infinity();
  out.log_abs_err = std::log(out.result.abs_err);
}

FtValue closed_value(const StretchSpec& spec, double r) {
  FtValue out;
  out.r = r;
  out.method = FtMethod::closed_form;
  out.log_value = log_ft_closed_form(spec.s(), spec.d(), r);
  // a handful of roundings in gamma, pow and exp
  const double rel = 16.0 * kEps;
  out.log_abs_err = out.log_value + std::log(rel);
  const double v = std::exp(out.log_value);
  out.result = {v, rel * v, Method::closed_form};
  return out;
}

}  // namespace

std::string_view to_string(FtMethod m) noexcept {
  switch (m) {
    case FtMethod::hankel: return "hankel";
    case FtMethod::mixture: return "mixture";
    case FtMethod::closed_form: return "closed";
    case FtMethod::normalization: return "normalization";
  }
  return "unknown";
}

std::string_view to_string(FtMethodChoice m) noexcept {
  switch (m) {
    case FtMethodChoice::automatic: return "auto";
    case FtMethodChoice::hankel: return "hankel";
    case FtMethodChoice::mixture: return "mixture";
    case FtMethodChoice::closed: return "closed";
  }
  return "unknown";
}

FtMethodChoice parse_method_choice(std::string_view name) {
  if (name == "auto") return FtMethodChoice::automatic;
  if (name == "hankel") return FtMethodChoice::hankel;
  if (name == "mixture") return FtMethodChoice::mixture;
  if (name == "closed") return FtMethodChoice::closed;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

bool FtValue::certified_positive() const noexcept {
  if (!(result.value >= 0)) return false;
  if (result.value > 0 && result.value - result.abs_err > 0) return true;
  return std::isfinite(log_value) && log_abs_err < log_value;
}

bool FtValue::certified_negative() const noexcept {
  return result.value + result.abs_err < 0;
}

EvalResult ft_radial_hankel(const StretchSpec& spec, double r, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(r >= 0) || !std::isfinite(r)) throw DomainError("ft_radial_hankel: r must be finite and >= 0");
  if (r == 0.0) {
    const double v = ft_at_zero(spec);
    return {v, 16.0 * kEps * v, Method::closed_form};
  }
  const double s = spec.s();
  const int d = spec.d();
  const double nu = 0.5 * d - 1.0;
  const double omega = 2.0 * kPi * r;
  const double half_d = 0.5 * d;
  const double pre = 2.0 * kPi * std::pow(r, -nu);

  // the prefactor scales the error, so the inner tolerance is tightened to match
  QuadratureConfig inner = cfg;
  inner.abs_tol = cfg.abs_tol / pre;

  const double first_zero = BesselZeros(nu).next() / omega;
  EvalResult raw;
  if (first_zero > effective_support(s, d)) {
    const Integrand f = [=](double rho) {
      if (rho == 0.0) return 0.0;
      return std::exp(-std::pow(rho, s) + half_d * std::log(rho)) * bessel_j(nu, omega * rho);
    };
    raw = integrate_semi_infinite(f, 0.0, inner);
  } else {
    const Integrand g = [=](double rho) {
      if (rho == 0.0) return 0.0;
      return std::exp(-std::pow(rho, s) + half_d * std::log(rho));
    };
    raw = integrate_bessel_oscillatory(g, nu, omega, inner);
  }
  return {pre * raw.value, pre * raw.abs_err, raw.method};
}

FtValue ft(const StretchSpec& spec, double r, FtMethodChoice method, const QuadratureConfig& cfg) {
  if (!(r >= 0) || !std::isfinite(r)) throw DomainError("ft: r must be finite and >= 0");
  const double s = spec.s();
  const bool has_closed = s == 1.0 || s == 2.0;

  if (method == FtMethodChoice::automatic) {
    if (has_closed) {
      method = FtMethodChoice::closed;
    } else if (s <= kMixtureAutoMax) {
      method = FtMethodChoice::mixture;
    } else {
      method = FtMethodChoice::hankel;
    }
  }

  if (method == FtMethodChoice::closed) {
    if (!has_closed) throw DomainError("ft: closed form exists only for s = 1 and s = 2");
    return closed_value(spec, r);
  }

  FtValue out;
  out.r = r;
  if (r == 0.0) {
    if (method == FtMethodChoice::mixture && s > 2.0) {
      throw DomainError("ft: the mixture route needs s <= 2");
    }
    out.method = FtMethod::normalization;
    out.log_value = log_ft_at_zero(spec);
    out.log_abs_err = out.log_value + std::log(16.0 * kEps);
    const double v = ft_at_zero(spec);
    out.result = {v, 16.0 * kEps * v, Method::closed_form};
    return out;
  }
  if (method == FtMethodChoice::mixture) {
    if (s > 2.0) throw DomainError("ft: the mixture route needs s <= 2");
    out.method = FtMethod::mixture;
    out.result = mixture_ft(s, spec.d(), r, MixtureSpec::for_alpha(0.5 * s), cfg);
  } else {
    out.method = FtMethod::hankel;
    out.result = ft_radial_hankel(spec, r, cfg);
  }
  fill_logs(out);
  return out;
}

FtValue ft_at(const StretchSpec& spec, std::span<const double> xi, FtMethodChoice method,
              const QuadratureConfig& cfg) {
  if (xi.size() != static_cast<std::size_t>(spec.d())) {
    throw DomainError("ft_at: xi has " + std::to_string(xi.size()) + " components, expected " +
                      std::to_string(spec.d()));
  }
  double sum = 0.0;
  double scale = 0.0;
  for (const double x : xi) scale = std::max(scale, std::abs(x));
  if (scale > 0) {
    for (const double x : xi) sum += (x / scale) * (x / scale);
  }
  return ft(spec, scale * std::sqrt(sum), method, cfg);
}

}  // namespace stretchft
