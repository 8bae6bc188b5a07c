#include "stretchft/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "stretchft/errors.hpp"

namespace stretchft {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

// McMahon's large-zero expansion for the m-th zero of J_order.
double mcmahon_guess(double order, int m) {
  const double mu = 4.0 * order * order;
  const double beta = (m + 0.5 * order - 0.25) * kPi;
  const double b8 = 8.0 * beta;
  double z = beta - (mu - 1.0) / b8;
  z -= 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
  return z;
}

double bisect_zero(double order, double lo, double hi) {
  double flo = bessel_j(order, lo);
  for (int i = 0; i < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = bessel_j(order, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Newton from `guess`; returns NaN if it wanders off.
double newton_zero(double order, double guess) {
  double z = guess;
  for (int i = 0; i < 30; ++i) {
    if (!(z > 0)) return std::nan("");
    const double f = bessel_j(order, z);
    const double df = bessel_j_derivative(order, z);
    if (df == 0.0) return std::nan("");
    const double step = f / df;
    z -= step;
    if (std::abs(step) <= 1e-15 * std::abs(z)) return z;
  }
  return z;
}

bool brackets_sign_change(double order, double z, double after) {
  const double h = std::max(1e-9 * z, 1e-12);
  if (z - h <= after) return false;
  const double fl = bessel_j(order, z - h);
  const double fr = bessel_j(order, z + h);
  return (fl <= 0 && fr >= 0) || (fl >= 0 && fr <= 0);
}

}  // namespace

double sin_pi(double x) {
  require_finite(x, "sin_pi");
  // reduce to [-1, 1]
  double r = std::remainder(x, 2.0);
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double gamma_real(double x) {
  require_finite(x, "gamma_real");
  if (x <= 0 && x == std::floor(x)) {
    throw PoleError("gamma_real: pole at non-positive integer " + std::to_string(x));
  }
  double result;
  if (x < 0.5) {
    const double g = std::tgamma(1.0 - x);
    if (!std::isfinite(g)) {
      throw UnderflowError("gamma_real: result below double range");
    }
    result = kPi / (sin_pi(x) * g);
  } else {
    result = std::tgamma(x);
  }
  if (!std::isfinite(result)) {
    throw OverflowError("gamma_real: result exceeds double range at x=" + std::to_string(x));
  }
  if (result == 0.0) {
    throw UnderflowError("gamma_real: result below double range");
  }
  return result;
}

double log_gamma(double x) {
  if (!(x > 0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: requires finite x > 0");
  }
  return boost::math::lgamma(x);
}

double bessel_j(double order, double x) {
  require_finite(order, "bessel_j");
  require_finite(x, "bessel_j");
  if (order < -0.5) throw DomainError("bessel_j: order must be >= -1/2");
  if (x < 0) throw DomainError("bessel_j: x must be >= 0");
  if (x == 0.0) {
    if (order == 0.0) return 1.0;
    if (order > 0.0) return 0.0;
    throw OverflowError("bessel_j: J_order(0) is infinite for negative order");
  }
  if (order == -0.5) {
    // boost routes negative fractional orders through Y; the closed form is exact
    return std::sqrt(2.0 / (kPi * x)) * std::cos(x);
  }
  return boost::math::cyl_bessel_j(order, x);
}

double bessel_j_derivative(double order, double x) {
  if (!(x > 0)) throw DomainError("bessel_j_derivative: x must be > 0");
  return (order / x) * bessel_j(order, x) - bessel_j(order + 1.0, x);
}

BesselZeros::BesselZeros(double order) : order_(order) {
  require_finite(order, "BesselZeros");
  if (order < -0.5) throw DomainError("BesselZeros: order must be >= -1/2");
}

double BesselZeros::next() {
  ++m_;
  const double prev = last_;
  double z = newton_zero(order_, mcmahon_guess(order_, m_));
  bool ok = std::isfinite(z) && z > prev + 1.0 && brackets_sign_change(order_, z, prev);
  if (ok) {
    // no sign change strictly between the previous zero and the candidate
    const double lo = prev + 1e-3;
    const double sign = bessel_j(order_, lo) < 0 ? -1.0 : 1.0;
    const int probes = static_cast<int>(std::ceil((z - lo) / 0.4));
    for (int i = 1; i < probes && ok; ++i) {
      const double x = lo + (z - lo) * i / probes;
      if (bessel_j(order_, x) * sign < 0) ok = false;
    }
  }
  if (!ok) {
    const double step = 0.25;
    double lo = prev + 1e-3;
    double flo = bessel_j(order_, lo);
    bool found = false;
    for (int i = 0; i < 100000 && !found; ++i) {
      const double hi = lo + step;
      const double fhi = bessel_j(order_, hi);
      if ((flo < 0) != (fhi < 0) || fhi == 0.0) {
        z = bisect_zero(order_, lo, hi);
        const double polished = newton_zero(order_, z);
        if (std::isfinite(polished) && std::abs(polished - z) < 1e-6) z = polished;
        found = true;
      } else {
        lo = hi;
        flo = fhi;
      }
    }
    if (!found) {
      throw ConvergenceError("BesselZeros: no sign change found", {prev, 0.0, Method::series});
    }
  }
  last_ = z;
  return z;
}

std::vector<double> bessel_j_zeros(double order, int count) {
  BesselZeros gen(order);
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int m = 0; m < count; ++m) zeros.push_back(gen.next());
  return zeros;
}

}  // namespace stretchft
