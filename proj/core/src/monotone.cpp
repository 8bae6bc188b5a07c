#include "stretchft/monotone.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "stretchft/bell.hpp"
#include "stretchft/errors.hpp"

namespace stretchft {

namespace {

void require_exponent(double s) {
  if (!(s > 0) || !std::isfinite(s)) throw DomainError("stretch exponent must be finite and > 0");
}

void require_point(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw DomainError("evaluation point must be finite and > 0");
}

double to_checked_double(const Extended& v, const char* what) {
  const double d = v.convert_to<double>();
  if (!std::isfinite(d)) throw OverflowError(std::string(what) + ": result overflows double");
  if (d == 0.0 && v != 0) throw UnderflowError(std::string(what) + ": result underflows double");
  return d;
}

template <class T>
std::vector<T> g_derivs_impl(double s, int n, double x) {
  using std::pow;
  require_exponent(s);
  require_point(x);
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  const T ts(s);
  const T tx(x);
  T ff(1);
  for (int k = 1; k <= n; ++k) {
    ff *= ts - (k - 1);
    out.push_back(-ff * pow(tx, ts - k));
  }
  return out;
}

}  // namespace

StretchExponent::StretchExponent(double s) : s_(s) { require_exponent(s); }

double falling_factorial(double s, int n) {
  if (n < 0) throw DomainError("falling_factorial: n must be >= 0");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= s - k;
  return p;
}

Extended falling_factorial(const Extended& s, int n) {
  if (n < 0) throw DomainError("falling_factorial: n must be >= 0");
  Extended p(1);
  for (int k = 0; k < n; ++k) p *= s - k;
  return p;
}

double g_deriv(double s, int n, double x) {
  require_exponent(s);
  require_point(x);
  if (n < 1) throw DomainError("g_deriv: n must be >= 1");
  return -falling_factorial(s, n) * std::pow(x, s - n);
}

std::vector<Extended> g_derivs_extended(double s, int n, double x) {
  return g_derivs_impl<Extended>(s, n, x);
}

std::vector<double> g_derivs(double s, int n, double x) { return g_derivs_impl<double>(s, n, x); }

double f_deriv(double s, int n, double x, Precision precision) {
  require_exponent(s);
  require_point(x);
  if (n < 0) throw DomainError("f_deriv: n must be >= 0");
  if (precision == Precision::fp64) {
    const auto gd = g_derivs(s, n, x);
    const double g0 = -std::pow(x, s);
    if (std::exp(g0) == 0.0) throw UnderflowError("f_deriv: exp(-x^s) underflows double");
    const auto seq = exp_composite_derivs<double>(g0, gd);
    const double v = seq.f_derivs.back();
    if (!std::isfinite(v)) throw OverflowError("f_deriv: result overflows double");
    return v;
  }
  const auto gd = g_derivs_extended(s, n, x);
  const Extended g0 = -pow(Extended(x), Extended(s));
  const auto seq = exp_composite_derivs<Extended>(g0, gd);
  return to_checked_double(seq.f_derivs.back(), "f_deriv");
}

std::string_view to_string(SignClass c) noexcept {
  switch (c) {
    case SignClass::positive: return "positive";
    case SignClass::negative: return "negative";
    case SignClass::indeterminate: return "indeterminate";
  }
  return "unknown";
}

bool CMReport::all_positive() const {
  for (const auto& r : records) {
    if (r.sign != SignClass::positive) return false;
  }
  return true;
}

double default_cm_tolerance(Precision precision) noexcept {
  return precision == Precision::fp64 ? 1e-12 : 1e-30;
}

CMReport cm_check(double s, int n_max, std::span<const double> points, double tol,
                  Precision precision) {
  require_exponent(s);
  if (n_max < 1) throw DomainError("cm_check: n_max must be >= 1");
  if (!(tol >= 0)) throw DomainError("cm_check: tol must be >= 0");
  for (double x : points) require_point(x);
  const bool extended = precision != Precision::fp64 || n_max > 10;

  CMReport report;
  report.s = s;
  report.n_max = n_max;
  report.points.assign(points.begin(), points.end());

  // per point: signed values and magnitude scales for n = 0..n_max
  std::vector<std::vector<double>> values(points.size());
  std::vector<std::vector<double>> scales(points.size());
  std::vector<std::vector<SignClass>> signs(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = points[i];
    if (extended) {
      const auto gd = g_derivs_extended(s, n_max, x);
      std::vector<Extended> gabs;
      gabs.reserve(gd.size());
      for (const auto& g : gd) gabs.push_back(abs(g));
      const Extended f0 = exp(-pow(Extended(x), Extended(s)));
      const auto row = bell_table<Extended>(gd.size(), gd);
      const auto mag = bell_table<Extended>(gabs.size(), gabs);
      for (int n = 0; n <= n_max; ++n) {
        const Extended v = (n % 2 == 0 ? f0 : Extended(-f0)) * row.values[n];
        const Extended sc = f0 * std::max<Extended>(Extended(1), mag.values[n]);
        const Extended cut = sc * Extended(tol);
        values[i].push_back(v.convert_to<double>());
        scales[i].push_back(sc.convert_to<double>());
        signs[i].push_back(v > cut ? SignClass::positive
                                   : (v < -cut ? SignClass::negative : SignClass::indeterminate));
      }
    } else {
      const auto gd = g_derivs(s, n_max, x);
      std::vector<double> gabs;
      for (double g : gd) gabs.push_back(std::abs(g));
      const double f0 = std::exp(-std::pow(x, s));
      const auto row = bell_table<double>(gd.size(), gd);
      const auto mag = bell_table<double>(gabs.size(), gabs);
      for (int n = 0; n <= n_max; ++n) {
        const double v = (n % 2 == 0 ? f0 : -f0) * row.values[n];
        const double sc = f0 * std::max(1.0, mag.values[n]);
        values[i].push_back(v);
        scales[i].push_back(sc);
        signs[i].push_back(v > tol * sc ? SignClass::positive
                                        : (v < -tol * sc ? SignClass::negative
                                                         : SignClass::indeterminate));
      }
    }
  }

  for (int n = 0; n <= n_max; ++n) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const CMRecord rec{n, points[i], values[i][n], scales[i][n], signs[i][n]};
      if (rec.sign == SignClass::negative && !report.first_violation) {
        report.first_violation = CMViolation{n, points[i]};
      }
      report.records.push_back(rec);
    }
  }
  return report;
}

}  // namespace stretchft
