#pragma once

#include <span>
#include <string_view>

#include "stretchft/closed_forms.hpp"
#include "stretchft/eval_result.hpp"
#include "stretchft/mixture.hpp"
#include "stretchft/quadrature.hpp"
#include "stretchft/stretch_spec.hpp"

namespace stretchft {

enum class FtMethod { hankel, mixture, closed_form, normalization };
enum class FtMethodChoice { automatic, hankel, mixture, closed };

std::string_view to_string(FtMethod m) noexcept;
std::string_view to_string(FtMethodChoice m) noexcept;
/// Accepts "auto", "hankel", "mixture", "closed"; throws DomainError otherwise.
FtMethodChoice parse_method_choice(std::string_view name);

/// A transform value at radius r = |xi|.
///
/// log_value and log_abs_err are natural logs of value and abs_err. They stay
/// finite where the double value underflows (the Gaussian at r = 10 is about
/// e^{-987}); routes without an analytic log fill them from the doubles.
struct FtValue {
  double r = 0.0;
  EvalResult result;
  FtMethod method = FtMethod::hankel;
  double log_value = 0.0;
  double log_abs_err = 0.0;

  /// value - abs_err > 0, decided in the log domain when value > 0.
  bool certified_positive() const noexcept;
  /// value + abs_err < 0.
  bool certified_negative() const noexcept;
};

/// f^(r) = 2 pi r^{-nu} int_0^inf exp(-rho^s) rho^{d/2} J_nu(2 pi r rho) d rho,
/// nu = d/2 - 1. r = 0 returns ft_at_zero. When the first Bessel zero lies
/// past the effective support of exp(-rho^s) the integral is taken without
/// lobe splitting.
EvalResult ft_radial_hankel(const StretchSpec& spec, double r,
                            const QuadratureConfig& cfg = default_transform_quadrature());

/// Transform with method selection. automatic uses the closed form at s = 1
/// and s = 2, the mixture for s <= 1.9 and the Hankel integral otherwise.
/// The mixture route needs s <= 2, the closed route s in {1, 2}.
FtValue ft(const StretchSpec& spec, double r, FtMethodChoice method = FtMethodChoice::automatic,
           const QuadratureConfig& cfg = default_transform_quadrature());

/// Same as ft at r = |xi|; xi.size() must equal spec.d().
FtValue ft_at(const StretchSpec& spec, std::span<const double> xi,
              FtMethodChoice method = FtMethodChoice::automatic,
              const QuadratureConfig& cfg = default_transform_quadrature());

}  // namespace stretchft
