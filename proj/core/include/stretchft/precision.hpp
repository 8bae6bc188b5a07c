#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace stretchft {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 significant decimal digits, software floating point.
using Extended = boost::multiprecision::cpp_bin_float_50;

/// Arithmetic mode selected per call.
enum class Precision {
  exact,     // rationals; Bell polynomials only
  extended,  // Extended
  fp64,      // double
};

}  // namespace stretchft
