#pragma once

#include <vector>

namespace stretchft {

/// Gamma function for real arguments.
///
/// Arguments below 1/2 go through the reflection Gamma(x) Gamma(1-x) = pi / sin(pi x).
/// Throws PoleError at 0, -1, -2, ..., OverflowError / UnderflowError when the
/// result leaves the double range, DomainError for non-finite input.
double gamma_real(double x);

/// log|Gamma(x)| for x > 0. Thread-safe (does not touch signgam).
double log_gamma(double x);

/// sin(pi x) with argument reduction done before the multiplication by pi,
/// so it is exactly zero at integers.
double sin_pi(double x);

/// Bessel function of the first kind J_order(x), order >= -1/2, x >= 0.
///
/// J_{-1/2}(0) is infinite and reported with OverflowError.
double bessel_j(double order, double x);

/// Derivative dJ_order/dx, via J' = (order/x) J - J_{order+1}.
double bessel_j_derivative(double order, double x);

/// Positive zeros of J_order, produced in increasing order.
///
/// McMahon's expansion seeds Newton's method for each zero. A candidate is
/// accepted only if J changes sign across it and not between it and the
/// previous zero; otherwise the root is re-bracketed by marching forward.
class BesselZeros {
 public:
  explicit BesselZeros(double order);

  double next();
  int count() const noexcept { return m_; }

 private:
  double order_;
  int m_ = 0;
  double last_ = 0.0;
};

/// The first `count` positive zeros of J_order.
std::vector<double> bessel_j_zeros(double order, int count);

}  // namespace stretchft
