#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stretchft/precision.hpp"

namespace stretchft {

/// Stretching exponent s > 0 of exp(-x^s).
class StretchExponent {
 public:
  explicit StretchExponent(double s);
  double value() const noexcept { return s_; }

 private:
  double s_;
};

/// s (s-1) ... (s-n+1) as an explicit product; 1 for n = 0.
double falling_factorial(double s, int n);
Extended falling_factorial(const Extended& s, int n);

/// n-th derivative of g(x) = -x^s: -falling_factorial(s, n) x^{s-n}.
/// Throws DomainError for x <= 0 or n < 1.
double g_deriv(double s, int n, double x);

/// g^(1)..g^(n) at x in the requested precision (extended or fp64).
std::vector<Extended> g_derivs_extended(double s, int n, double x);
std::vector<double> g_derivs(double s, int n, double x);

/// n-th derivative of f(x) = exp(-x^s), through the Bell polynomials of the
/// g-derivatives. Throws OverflowError / UnderflowError if the result does not
/// fit a double.
double f_deriv(double s, int n, double x, Precision precision = Precision::extended);

enum class SignClass { positive, negative, indeterminate };

std::string_view to_string(SignClass c) noexcept;

struct CMRecord {
  int n;
  double x;
  double value;  // (-1)^n f^(n)(x)
  double scale;  // exp(-x^s) max(1, B_n(|g'|, ..., |g^(n)|))
  SignClass sign;
};

struct CMViolation {
  int n;
  double x;
};

/// Outcome of a complete-monotonicity scan, records ordered by (n, x).
struct CMReport {
  double s = 0.0;
  int n_max = 0;
  std::vector<double> points;
  std::vector<CMRecord> records;
  std::optional<CMViolation> first_violation;

  bool all_positive() const;
};

/// Classify (-1)^n f^(n)(x) for n = 0..n_max at every point: positive above
/// tol*scale, negative below -tol*scale, indeterminate in between. The first
/// negative record in (n, x) order is the reported violation. Above n = 10
/// the evaluation is always carried out in extended precision.
CMReport cm_check(double s, int n_max, std::span<const double> points, double tol,
                  Precision precision = Precision::extended);

/// Default classification tolerance for a precision.
double default_cm_tolerance(Precision precision) noexcept;

}  // namespace stretchft
