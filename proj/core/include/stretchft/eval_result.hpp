#pragma once

#include <string_view>

namespace stretchft {

/// Which engine produced a value.
enum class Method {
  closed_form,
  gauss_kronrod,
  semi_infinite,
  bessel_lobes,
  series,
  integral_representation,
  point_mass,
};

std::string_view to_string(Method m) noexcept;

/// A computed scalar with an absolute-error estimate.
///
/// abs_err is non-negative and finite whenever value is finite. Engines never
/// hand back a NaN value; failures are raised as exceptions instead.
struct EvalResult {
  double value = 0.0;
  double abs_err = 0.0;
  Method method = Method::closed_form;
};

}  // namespace stretchft
