#pragma once

#include <functional>
#include <vector>

#include "stretchft/eval_result.hpp"
#include "stretchft/quadrature.hpp"

namespace stretchft {

/// Parameters of the mixing density phi_alpha, the density of the measure g
/// with exp(-x^alpha) = int_0^inf exp(-x t) dg(t).
///
/// alpha = 1 is the point mass at t = 1 and never reaches the series.
struct MixtureSpec {
  double alpha = 0.5;
  int series_terms = 4000;  // cap on the truncation order
  double split_point = 0.1; // series below this t is not trusted
  double target_abs = 1e-12;

  /// Defaults for a given alpha, with split_point placed where the largest
  /// series term is about e^6 times the density scale.
  static MixtureSpec for_alpha(double alpha);

  void validate() const;
};

/// Density of the alpha = 1/2 mixing measure, (1 / (2 sqrt(pi))) t^{-3/2} exp(-1/(4t)).
double levy_density(double t);

/// phi_alpha(t) by the convergent series
///   (1/pi) sum_{k>=1} (-1)^{k+1} / k! Gamma(alpha k + 1) sin(pi alpha k) t^{-alpha k - 1},
/// truncated where its terms drop below working accuracy. abs_err is the first
/// omitted term plus the accumulated rounding. Throws SeriesUnconvergedError
/// for t < spec.split_point. Requires 0 < alpha < 1.
EvalResult pollard_density(double alpha, double t, const MixtureSpec& spec);

/// The mixing density with everything needed to integrate against it.
///
/// Internally the density is carried in the variable u = t^{-alpha}, where it
/// becomes a smooth bounded function with a power series at u = 0 and
/// super-exponential decay as u -> inf. The series covers u <= u_split(); past
/// it the density comes from Zolotarev's integral over theta in (0, pi),
///   phi(t) = alpha / ((1 - alpha) pi) t^{-1/(1-alpha)}
///            int_0^pi A(theta) exp(-A(theta) t^{-alpha/(1-alpha)}) dtheta,
///   A(theta) = [sin(alpha theta)^alpha sin((1-alpha) theta)^{1-alpha} / sin theta]^{1/(1-alpha)},
/// which has no cancellation. At alpha = 1/2 the Levy closed form is used.
class MixingDensity {
 public:
  explicit MixingDensity(const MixtureSpec& spec);

  double alpha() const noexcept { return spec_.alpha; }
  double u_split() const noexcept { return u_split_; }
  const MixtureSpec& spec() const noexcept { return spec_; }

  EvalResult series(double t) const;
  EvalResult integral_representation(double t) const;
  /// Closed form at alpha = 1/2, series for t >= split_point, integral otherwise.
  EvalResult operator()(double t) const;

  /// Density of u = t^{-alpha}; equals phi(t) |dt/du|.
  double in_u(double u) const;
  double series_in_u(double u, double* abs_err = nullptr) const;
  double integral_in_u(double u) const;

  /// g(t) = int_0^t phi, with g(0) = 0 and g(inf) = 1.
  double cdf(double t) const;

  /// int_0^inf w(t) phi(t) dt for a non-negative weight passed as log w(log t),
  /// so that huge weights against tiny densities never overflow. The integral
  /// is taken in u, split at u_split().
  EvalResult integrate(const std::function<double(double log_t)>& log_weight,
                       const QuadratureConfig& cfg) const;

 private:
  double zolotarev_log_a(double theta) const;
  double series_sum(double u, double* abs_err) const;

  MixtureSpec spec_;
  bool levy_ = false;
  double u_split_ = 0.0;
  double series_rel_err_ = 0.0;  // relative rounding of the series at u_split
  std::vector<double> coeffs_;     // coefficient of u^{k-1}, k = 1..K
  std::vector<double> abs_coeffs_;
};

/// Quadrature settings used by the mixture and Hankel routes unless overridden.
QuadratureConfig default_transform_quadrature();

/// Residual |exp(-x^alpha) - int exp(-x t) phi_alpha(t) dt|, with the
/// quadrature error as abs_err. alpha = 1 is exact (point mass).
EvalResult verify_bernstein(double alpha, double x, const MixtureSpec& spec,
                            const QuadratureConfig& cfg = default_transform_quadrature());

/// Fourier transform of exp(-|x|^s) on R^d at radius r as a Gaussian mixture,
///   int_0^inf (pi/t)^{d/2} exp(-pi^2 r^2 / t) phi_{s/2}(t) dt.
/// s = 2 is the point mass; r = 0 returns the normalization constant.
/// spec.alpha must equal s/2.
EvalResult mixture_ft(double s, int d, double r, const MixtureSpec& spec,
                      const QuadratureConfig& cfg = default_transform_quadrature());
EvalResult mixture_ft(double s, int d, double r);

}  // namespace stretchft
