#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "stretchft/errors.hpp"
#include "stretchft/precision.hpp"

namespace stretchft {

/// Binomial coefficient, exact. Throws DomainError outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Row n of Pascal's triangle, exact.
std::vector<BigInt> pascal_row(int n);

template <class T>
constexpr Precision precision_of() {
  if constexpr (std::is_same_v<T, Rational>) {
    return Precision::exact;
  } else if constexpr (std::is_same_v<T, Extended>) {
    return Precision::extended;
  } else {
    static_assert(std::is_same_v<T, double>, "Bell rows support Rational, Extended and double");
    return Precision::fp64;
  }
}

template <class T>
T from_bigint(const BigInt& v) {
  if constexpr (std::is_same_v<T, double>) {
    return v.template convert_to<double>();
  } else {
    return T(v);
  }
}

/// Complete Bell polynomials B_0..B_n at one argument vector.
///
/// Arguments are 1-indexed in the mathematics (x_1 first) and stored 0-indexed:
/// args[k] holds x_{k+1}.
template <class T>
struct BellRow {
  std::size_t n = 0;
  std::vector<T> args;
  std::vector<T> values;  // values[0] == 1
  Precision mode = precision_of<T>();
};

/// B_0..B_n from B_{m+1} = sum_{k=0}^{m} C(m,k) B_{m-k} x_{k+1}, B_0 = 1.
/// Only the first n entries of xs are read; fewer is std::invalid_argument.
template <class T>
BellRow<T> bell_table(std::size_t n, std::span<const T> xs) {
  if (xs.size() < n) {
    throw std::invalid_argument("bell_table: need " + std::to_string(n) + " arguments, got " +
                                std::to_string(xs.size()));
  }
  BellRow<T> row;
  row.n = n;
  row.args.assign(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(n));
  row.values.reserve(n + 1);
  row.values.push_back(T(1));
  for (std::size_t m = 0; m < n; ++m) {
    const auto coeffs = pascal_row(static_cast<int>(m));
    T next(0);
    for (std::size_t k = 0; k <= m; ++k) {
      next += from_bigint<T>(coeffs[k]) * row.values[m - k] * row.args[k];
    }
    row.values.push_back(next);
  }
  return row;
}

template <class T>
BellRow<T> bell_table(std::size_t n, const std::vector<T>& xs) {
  return bell_table<T>(n, std::span<const T>(xs));
}

/// B_n as the sum over all set partitions of {1..n} of prod_blocks x_{|block|}.
/// Independent of the recurrence; n <= 10.
template <class T>
T bell_bruteforce(std::size_t n, std::span<const T> xs) {
  if (n > 10) throw std::invalid_argument("bell_bruteforce: n must be <= 10");
  if (xs.size() < n) throw std::invalid_argument("bell_bruteforce: too few arguments");
  if (n == 0) return T(1);
  // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> block_size(n, 0);
  T total(0);
  while (true) {
    std::fill(block_size.begin(), block_size.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++block_size[a[i]];
    T term(1);
    for (std::size_t b = 0; b < n && block_size[b] > 0; ++b) term *= xs[block_size[b] - 1];
    total += term;

    // advance to the next restricted growth string
    std::size_t i = n - 1;
    while (i > 0) {
      std::size_t prefix_max = 0;
      for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
      if (a[i] <= prefix_max) {
        ++a[i];
        for (std::size_t j = i + 1; j < n; ++j) a[j] = 0;
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  return total;
}

template <class T>
T bell_bruteforce(std::size_t n, const std::vector<T>& xs) {
  return bell_bruteforce<T>(n, std::span<const T>(xs));
}

/// Derivatives of f = exp(g) at a point from those of g.
template <class T>
struct BasicDerivSeq {
  std::size_t n_max = 0;
  T g_value{};
  std::vector<T> g_derivs;  // g^(1)..g^(n)
  std::vector<T> f_derivs;  // f^(0)..f^(n)
};
using DerivSeq = BasicDerivSeq<double>;

/// f^(m) = exp(g) B_m(g', ..., g^(m)) for m = 0..g_derivs.size().
/// Throws OverflowError if exp(g_value) is not representable.
template <class T>
BasicDerivSeq<T> exp_composite_derivs(const T& g_value, std::span<const T> g_derivs) {
  using std::exp;
  using std::isfinite;
  for (const auto& d : g_derivs) {
    if (!isfinite(d)) throw DomainError("exp_composite_derivs: non-finite derivative");
  }
  const T f0 = exp(g_value);
  if (!isfinite(f0)) throw OverflowError("exp_composite_derivs: exp(g) overflows");
  const auto row = bell_table<T>(g_derivs.size(), g_derivs);
  BasicDerivSeq<T> out;
  out.n_max = g_derivs.size();
  out.g_value = g_value;
  out.g_derivs.assign(g_derivs.begin(), g_derivs.end());
  out.f_derivs.reserve(row.values.size());
  for (const auto& b : row.values) out.f_derivs.push_back(f0 * b);
  return out;
}

inline DerivSeq exp_composite_derivs(double g_value, const std::vector<double>& g_derivs) {
  return exp_composite_derivs<double>(g_value, std::span<const double>(g_derivs));
}

/// Parse "p/q", an integer, or a finite decimal ("0.25", "-1.5e-3") exactly.
Rational parse_rational(const std::string& text);

}  // namespace stretchft
