#pragma once

#include "stretchft/stretch_spec.hpp"

namespace stretchft {

/// Surface area of the unit sphere in R^d, 2 pi^{d/2} / Gamma(d/2).
double sphere_area(int d);

/// Integral of exp(-|x|^s) over R^d, which is also the transform at the origin:
/// (2 pi^{d/2} / s) Gamma(d/s) / Gamma(d/2).
double ft_at_zero(const StretchSpec& spec);
double log_ft_at_zero(const StretchSpec& spec);

/// Transform of exp(-t |x|^2) at radius r: (pi/t)^{d/2} exp(-pi^2 r^2 / t).
double gaussian_ft(double t, int d, double r);
/// Natural log of gaussian_ft, taking log t so that extreme t stay finite.
double log_gaussian_ft(double log_t, int d, double r);

/// Classical closed forms, s = 2 (Gaussian) and s = 1 (Poisson kernel):
///   s = 2: pi^{d/2} exp(-pi^2 r^2)
///   s = 1: Gamma((d+1)/2) 2^d pi^{(d-1)/2} (1 + 4 pi^2 r^2)^{-(d+1)/2}
/// Throws DomainError for any other s.
double ft_closed_form(double s, int d, double r);
double log_ft_closed_form(double s, int d, double r);

}  // namespace stretchft
