#include "stretchft/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stretchft/closed_forms.hpp"
#include "stretchft/errors.hpp"
#include "stretchft/special_functions.hpp"

namespace stretchft {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// log of the largest series term allowed at the split, relative to the density
constexpr double kSplitLogGrowth = 6.0;

double log_a_min(double alpha) {
  // A(0+) = alpha^{alpha/(1-alpha)} (1 - alpha)
  return alpha / (1.0 - alpha) * std::log(alpha) + std::log1p(-alpha);
}

QuadratureConfig theta_quadrature() {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-300;
  cfg.max_subdivisions = 500;
  return cfg;
}

void require_open_alpha(double alpha, const char* what) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(std::string(what) + ": alpha must lie in (0, 1)");
  }
}

}  // namespace

MixtureSpec MixtureSpec::for_alpha(double alpha) {
  MixtureSpec spec;
  spec.alpha = alpha;
  if (alpha > 0.0 && alpha < 1.0) {
    const double log_u = (1.0 - alpha) * (std::log(kSplitLogGrowth) - log_a_min(alpha));
    spec.split_point = std::exp(-log_u / alpha);
  } else {
    spec.split_point = 1.0;
  }
  return spec;
}

void MixtureSpec::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("MixtureSpec: alpha must lie in (0, 1]");
  if (series_terms < 5) throw DomainError("MixtureSpec: series_terms must be >= 5");
  if (!(split_point > 0) || !std::isfinite(split_point)) {
    throw DomainError("MixtureSpec: split_point must be finite and > 0");
  }
  if (!(target_abs > 0)) throw DomainError("MixtureSpec: target_abs must be > 0");
}

double levy_density(double t) {
  if (!(t > 0)) throw DomainError("levy_density: t must be > 0");
  if (!std::isfinite(t)) return 0.0;
  return 0.5 / std::sqrt(kPi) * std::pow(t, -1.5) * std::exp(-0.25 / t);
}

MixingDensity::MixingDensity(const MixtureSpec& spec) : spec_(spec) {
  spec_.validate();
  require_open_alpha(spec_.alpha, "MixingDensity");
  const double alpha = spec_.alpha;
  levy_ = alpha == 0.5;

  // coefficients of u^{k-1}; truncate once the terms at u_split are far below
  // both the largest term and the truncation target
  double log_u = -alpha * std::log(spec_.split_point);
  const double log_norm = std::log(alpha * kPi);
  for (int attempt = 0; attempt < 200; ++attempt) {
    coeffs_.clear();
    abs_coeffs_.clear();
    double peak = -std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int k = 1; k <= spec_.series_terms; ++k) {
      const double log_mag = log_gamma(alpha * k + 1.0) - log_gamma(k + 1.0) - log_norm;
      const double sign = ((k % 2 == 1) ? 1.0 : -1.0) * sin_pi(alpha * k);
      const double mag = std::exp(log_mag);
      coeffs_.push_back(sign * mag);
      abs_coeffs_.push_back(mag);
      const double log_term = log_mag + (k - 1) * log_u;
      peak = std::max(peak, log_term);
      if (k > 8 && log_term < peak - 46.0 && log_term < std::log(spec_.target_abs) - 7.0) {
        converged = true;
        break;
      }
    }
    if (converged) break;
    log_u -= 0.05;  // pull the split toward larger t
  }
  u_split_ = std::exp(log_u);

  if (levy_) {
    series_rel_err_ = 4.0 * kEps;
  } else {
    double err = 0.0;
    const double at_split = series_sum(u_split_, &err);
    series_rel_err_ = at_split > 0 ? err / at_split : 1.0;
  }
}

double MixingDensity::series_sum(double u, double* abs_err) const {
  double sum = 0.0;
  double abs_sum = 0.0;
  double power = 1.0;
  double last = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double term = coeffs_[i] * power;
    const double aterm = abs_coeffs_[i] * power;
    sum += term;
    abs_sum += aterm;
    last = aterm;
    if (i > 8 && aterm < 1e-22 * abs_sum) break;
    power *= u;
  }
  if (abs_err != nullptr) *abs_err = 4.0 * kEps * abs_sum * (1.0 + std::sqrt(coeffs_.size())) + last;
  return sum;
}

double MixingDensity::series_in_u(double u, double* abs_err) const {
  if (!(u >= 0)) throw DomainError("MixingDensity: u must be >= 0");
  return series_sum(u, abs_err);
}

double MixingDensity::zolotarev_log_a(double theta) const {
  const double a = spec_.alpha;
  return (a * std::log(std::sin(a * theta)) + (1.0 - a) * std::log(std::sin((1.0 - a) * theta)) -
          std::log(std::sin(theta))) /
         (1.0 - a);
}

double MixingDensity::integral_in_u(double u) const {
  if (!(u > 0)) throw DomainError("MixingDensity: u must be > 0");
  const double a = spec_.alpha;
  const double log_w = std::log(u) / (1.0 - a);
  const double w = std::exp(log_w);
  if (!std::isfinite(w)) return 0.0;
  if (std::exp(log_a_min(a)) * w > 745.0) return 0.0;
  const Integrand inner = [this, w](double theta) {
    const double log_a = zolotarev_log_a(theta);
    const double big_a = std::exp(log_a);
    return std::exp(log_a - big_a * w);
  };
  const EvalResult r = integrate_finite(inner, 0.0, kPi, theta_quadrature());
  return std::exp(a * log_w - std::log((1.0 - a) * kPi)) * r.value;
}

double MixingDensity::in_u(double u) const {
  if (!(u >= 0)) throw DomainError("MixingDensity: u must be >= 0");
  if (levy_) return std::exp(-0.25 * u * u) / std::sqrt(kPi);
  if (u <= u_split_) return series_sum(u, nullptr);
  return integral_in_u(u);
}

EvalResult MixingDensity::series(double t) const {
  if (!(t > 0)) throw DomainError("pollard_density: t must be > 0");
  const double a = spec_.alpha;
  const double log_u = -a * std::log(t);
  double err = 0.0;
  const double psi = series_sum(std::exp(log_u), &err);
  // phi(t) = psi(u) alpha u^{1/alpha + 1}
  const double jac = a * std::exp((1.0 / a + 1.0) * log_u);
  const EvalResult out{psi * jac, err * jac, Method::series};
  if (log_u > std::log(u_split_) * (1.0 + 1e-12)) {
    throw SeriesUnconvergedError("pollard_density: t=" + std::to_string(t) +
                                     " is below the series split point " +
                                     std::to_string(std::exp(-std::log(u_split_) / a)),
                                 out);
  }
  return out;
}

EvalResult MixingDensity::integral_representation(double t) const {
  if (!(t > 0)) throw DomainError("mixing density: t must be > 0");
  const double a = spec_.alpha;
  const double log_u = -a * std::log(t);
  const double psi = integral_in_u(std::exp(log_u));
  const double jac = a * std::exp((1.0 / a + 1.0) * log_u);
  const double value = psi * jac;
  return {value, 10.0 * theta_quadrature().rel_tol * value, Method::integral_representation};
}

EvalResult MixingDensity::operator()(double t) const {
  if (!(t > 0)) throw DomainError("mixing density: t must be > 0");
  if (levy_) {
    const double v = levy_density(t);
    return {v, 4.0 * kEps * v, Method::closed_form};
  }
  if (-spec_.alpha * std::log(t) <= std::log(u_split_)) return series(t);
  return integral_representation(t);
}

double MixingDensity::cdf(double t) const {
  if (!(t >= 0)) throw DomainError("mixing cdf: t must be >= 0");
  if (t == 0.0) return 0.0;
  if (!std::isfinite(t)) return 1.0;
  if (levy_) return std::erfc(0.5 / std::sqrt(t));
  const double a = spec_.alpha;
  const double w = std::pow(t, -a / (1.0 - a));
  const Integrand inner = [this, w](double theta) {
    return std::exp(-std::exp(zolotarev_log_a(theta)) * w);
  };
  return integrate_finite(inner, 0.0, kPi, theta_quadrature()).value / kPi;
}

EvalResult MixingDensity::integrate(const std::function<double(double)>& log_weight,
                                    const QuadratureConfig& cfg) const {
  const double a = spec_.alpha;
  auto product = [&log_weight, a](double u, double density) {
    if (density == 0.0) return 0.0;
    const double lw = log_weight(-std::log(u) / a);
    if (density > 0) return std::exp(lw + std::log(density));
    return -std::exp(lw + std::log(-density));
  };
  if (levy_) {
    const Integrand f = [&](double u) {
      if (!(u > 0)) return 0.0;
      return product(u, std::exp(-0.25 * u * u) / std::sqrt(kPi));
    };
    EvalResult r = integrate_semi_infinite(f, 0.0, cfg);
    r.abs_err += series_rel_err_ * std::abs(r.value);
    return r;
  }
  const Integrand near = [&](double u) {
    if (!(u > 0)) return 0.0;
    return product(u, series_sum(u, nullptr));
  };
  const Integrand far = [&](double u) { return product(u, integral_in_u(u)); };
  const EvalResult r1 = integrate_finite(near, 0.0, u_split_, cfg);
  const EvalResult r2 = integrate_semi_infinite(far, u_split_, cfg, 0.5 * u_split_);
  const double value = r1.value + r2.value;
  const double err = r1.abs_err + r2.abs_err + series_rel_err_ * std::abs(r1.value) +
                     10.0 * theta_quadrature().rel_tol * std::abs(r2.value);
  return {value, err, Method::semi_infinite};
}

EvalResult pollard_density(double alpha, double t, const MixtureSpec& spec) {
  require_open_alpha(alpha, "pollard_density");
  MixtureSpec s = spec;
  s.alpha = alpha;
  return MixingDensity(s).series(t);
}

QuadratureConfig default_transform_quadrature() {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  cfg.abs_tol = 1e-14;
  cfg.max_subdivisions = 2000;
  cfg.tail_terms = 6;
  return cfg;
}

EvalResult verify_bernstein(double alpha, double x, const MixtureSpec& spec,
                            const QuadratureConfig& cfg) {
  if (!(x >= 0) || !std::isfinite(x)) throw DomainError("verify_bernstein: x must be finite and >= 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("verify_bernstein: alpha must lie in (0, 1]");
  if (alpha == 1.0) {
    // point mass at t = 1: int exp(-x t) delta_1(dt) = exp(-x)
    return {0.0, 0.0, Method::point_mass};
  }
  MixtureSpec s = spec;
  s.alpha = alpha;
  const MixingDensity density(s);
  const auto log_weight = [x](double log_t) { return x == 0.0 ? 0.0 : -x * std::exp(log_t); };
  const EvalResult laplace = density.integrate(log_weight, cfg);
  const double target = std::exp(-std::pow(x, alpha));
  return {std::abs(target - laplace.value), laplace.abs_err, laplace.method};
}

EvalResult mixture_ft(double s, int d, double r, const MixtureSpec& spec,
                      const QuadratureConfig& cfg) {
  if (!(s > 0.0 && s <= 2.0)) throw DomainError("mixture_ft: s must lie in (0, 2]");
  if (d < 1) throw DomainError("mixture_ft: d must be >= 1");
  if (!(r >= 0) || !std::isfinite(r)) throw DomainError("mixture_ft: r must be finite and >= 0");
  if (s == 2.0) {
    const double v = ft_closed_form(2.0, d, r);
    return {v, 8.0 * kEps * v, Method::point_mass};
  }
  if (r == 0.0) {
    const double v = ft_at_zero(StretchSpec(s, d));
    return {v, 16.0 * kEps * v, Method::closed_form};
  }
  if (std::abs(spec.alpha - 0.5 * s) > 1e-15) {
    throw DomainError("mixture_ft: spec.alpha must equal s/2");
  }
  const MixingDensity density(spec);
  const auto log_weight = [d, r](double log_t) { return log_gaussian_ft(log_t, d, r); };
  return density.integrate(log_weight, cfg);
}

EvalResult mixture_ft(double s, int d, double r) {
  return mixture_ft(s, d, r, MixtureSpec::for_alpha(0.5 * s));
}

}  // namespace stretchft
