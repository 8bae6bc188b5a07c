#pragma once

#include <functional>
#include <vector>

#include "stretchft/bell.hpp"
#include "stretchft/precision.hpp"

namespace stretchft::testing {

/// n-th derivative by centered differences with step halving and Richardson
/// extrapolation, all in extended precision. Independent of the Bell machinery
/// except for the binomial weights.
inline Extended fd_derivative(const std::function<Extended(const Extended&)>& f, int n,
                              const Extended& x, const Extended& h0, int levels = 8) {
  auto central = [&](const Extended& h) {
    // sum_k (-1)^k C(n,k) f(x + (n/2 - k) h) / h^n has O(h^2) error
    Extended acc = 0;
    for (int k = 0; k <= n; ++k) {
      const Extended w = from_bigint<Extended>(binomial(n, k));
      const Extended node = x + (Extended(n) / 2 - k) * h;
      acc += (k % 2 == 0 ? w : Extended(-w)) * f(node);
    }
    return acc / pow(h, n);
  };
  std::vector<std::vector<Extended>> table;
  Extended h = h0;
  for (int i = 0; i < levels; ++i, h /= 2) {
    std::vector<Extended> row{central(h)};
    Extended factor = 4;
    for (int j = 1; j <= i; ++j, factor *= 4) {
      row.push_back(row[j - 1] + (row[j - 1] - table[i - 1][j - 1]) / (factor - 1));
    }
    table.push_back(row);
  }
  return table.back().back();
}

/// Derivatives of exp(-x^s), the function the monotone module differentiates.
inline Extended fd_stretched(double s, int n, double x) {
  const Extended se(s);
  const auto f = [&se](const Extended& t) { return exp(-pow(t, se)); };
  // stay inside x > 0: n/2 steps of size h must not reach the origin
  const Extended h0 = Extended(x) / (4 * (n + 1));
  return n == 0 ? f(Extended(x)) : fd_derivative(f, n, Extended(x), h0);
}

}  // namespace stretchft::testing
