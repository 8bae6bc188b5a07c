#pragma once

#include <functional>
#include <span>

#include "stretchft/eval_result.hpp"

namespace stretchft {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_subdivisions = 2000;
  // lobes summed directly before the epsilon accelerator is consulted
  int tail_terms = 6;

  /// Throws DomainError unless rel_tol, abs_tol > 0, max_subdivisions >= 1 and
  /// tail_terms >= 2.
  void validate() const;
};

using Integrand = std::function<double(double)>;

enum class Endpoint { lower, upper };

/// Declared endpoint singularity: the integral is taken in u with
/// x = a + (b - a) u^power (lower) or x = b - (b - a) u^power (upper).
/// power = 2 removes an x^{-1/2}-type singularity, and so on.
struct EndpointSingularity {
  Endpoint at = Endpoint::lower;
  int power = 2;
};

/// Adaptive 21-point Gauss-Kronrod on [a, b], bisecting the interval with the
/// largest |K21 - G10| until the summed estimate meets
/// max(abs_tol, rel_tol |value|). Segments whose estimate is already at the
/// rounding floor are frozen instead of split, so a result limited by
/// cancellation comes back with an honest (larger) abs_err rather than an
/// exception. Throws ConvergenceError once max_subdivisions is exhausted.
EvalResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadratureConfig& cfg = {});
EvalResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadratureConfig& cfg, EndpointSingularity sing);

/// Integral over [a, inf) through x = a + L t / (1 - t), t in [0, 1).
///
/// The length scale L is picked from where |f(x)| (x - a) peaks on a geometric
/// probe grid unless given explicitly. Throws NonDecayError when the mapped
/// integrand grows toward t = 1 (f decays slower than about x^{-1.75}).
EvalResult integrate_semi_infinite(const Integrand& f, double a,
                                   const QuadratureConfig& cfg = {});
EvalResult integrate_semi_infinite(const Integrand& f, double a,
                                   const QuadratureConfig& cfg, double scale);

/// Integral of g(r) J_order(omega r) over [0, inf) for smooth decaying g.
///
/// The axis is cut at the zeros of J_order(omega r); each lobe is integrated
/// with integrate_finite and the partial sums are accelerated with Wynn's
/// epsilon algorithm. abs_err is the sum of the lobe errors plus the
/// extrapolation error. Throws ConvergenceError (carrying the partial sum) if
/// max_subdivisions lobes pass without convergence.
EvalResult integrate_bessel_oscillatory(const Integrand& g, double order, double omega,
                                        const QuadratureConfig& cfg = {});

struct Extrapolation {
  double value;
  double error;
};

/// Wynn's epsilon algorithm over a sequence of partial sums. Uses at most the
/// last 50 entries. Needs at least 3 sums.
Extrapolation wynn_epsilon(std::span<const double> partial_sums);

}  // namespace stretchft
