#include "stretchft/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "stretchft/errors.hpp"
#include "stretchft/special_functions.hpp"

namespace stretchft {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::gauss_kronrod: return "gauss_kronrod";
    case Method::semi_infinite: return "semi_infinite";
    case Method::bessel_lobes: return "bessel_lobes";
    case Method::series: return "series";
    case Method::integral_representation: return "integral_representation";
    case Method::point_mass: return "point_mass";
  }
  return "unknown";
}

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0) || !(abs_tol > 0)) {
    throw DomainError("QuadratureConfig: rel_tol and abs_tol must be > 0");
  }
  if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
  if (tail_terms < 2) throw DomainError("QuadratureConfig: tail_terms must be >= 2");
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod abscissae (positive half) and weights, with the embedded
// 10-point Gauss weights for xgk[1], xgk[3], ..., xgk[9].
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077382343038073, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double err;    // |K21 - G10|
  double floor;  // rounding floor
  double reported() const { return std::max(err, floor); }
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw DomainError("integrand returned a non-finite value at x=" + std::to_string(x));
  }
  return y;
}

Segment gk21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center);
  double kronrod = wgk[10] * fc;
  double gauss = 0.0;
  double absolute = wgk[10] * std::abs(fc);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * xgk[j];
    const double f1 = checked(f, center - dx);
    const double f2 = checked(f, center + dx);
    kronrod += wgk[j] * (f1 + f2);
    absolute += wgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
  }
  const double scale = std::abs(half);
  return {a, b, kronrod * half, std::abs(kronrod - gauss) * scale, 50.0 * kEps * absolute * scale};
}

bool splittable(const Segment& s) {
  if (s.err <= s.floor) return false;
  const double mid = 0.5 * (s.a + s.b);
  const double width = std::abs(s.b - s.a);
  return width > 1e3 * kEps * std::max({std::abs(s.a), std::abs(s.b), std::abs(mid)}) &&
         width > std::numeric_limits<double>::min() * 1e3;
}

EvalResult sum_segments(std::vector<Segment>& segs, Method method) {
  std::sort(segs.begin(), segs.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
  double value = 0.0;
  double err = 0.0;
  for (const auto& s : segs) {
    value += s.value;
    err += s.reported();
  }
  return {value, err, method};
}

EvalResult adaptive_gk(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                       Method method) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("integrate_finite: requires finite a < b");
  }
  auto by_err = [](const Segment& l, const Segment& r) { return l.reported() < r.reported(); };
  std::vector<Segment> heap{gk21(f, a, b)};
  std::vector<Segment> frozen;
  double value = heap.front().value;
  double err = heap.front().reported();

  while (true) {
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    if (err <= tol) break;
    if (heap.empty()) break;  // everything at the rounding floor
    if (static_cast<int>(heap.size() + frozen.size()) >= cfg.max_subdivisions) {
      std::vector<Segment> all = heap;
      all.insert(all.end(), frozen.begin(), frozen.end());
      throw ConvergenceError("integrate_finite: max_subdivisions exhausted",
                             sum_segments(all, method));
    }
    std::pop_heap(heap.begin(), heap.end(), by_err);
    Segment worst = heap.back();
    heap.pop_back();
    if (!splittable(worst)) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gk21(f, worst.a, mid);
    Segment right = gk21(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    err += left.reported() + right.reported() - worst.reported();
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_err);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_err);
  }
  heap.insert(heap.end(), frozen.begin(), frozen.end());
  return sum_segments(heap, method);
}

double epsilon_estimate(std::span<const double> s) {
  const std::size_t n = s.size();
  if (n < 3) return s.back();
  std::vector<double> prev(n, 0.0);  // column k-1
  std::vector<double> cur(s.begin(), s.end());
  double best = s.back();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<double> next(n - k);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0 || !std::isfinite(diff)) {
        // converged (or broken down) at this depth
        return (k % 2 == 1) ? cur.back() : best;
      }
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    if (k % 2 == 0) {
      if (!std::isfinite(next.back())) return best;
      best = next.back();
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return best;
}

}  // namespace

EvalResult integrate_finite(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  return adaptive_gk(f, a, b, cfg, Method::gauss_kronrod);
}

EvalResult integrate_finite(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                            EndpointSingularity sing) {
  if (sing.power < 1) throw DomainError("EndpointSingularity: power must be >= 1");
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("integrate_finite: requires finite a < b");
  }
  const double width = b - a;
  const int m = sing.power;
  Integrand mapped;
  if (sing.at == Endpoint::lower) {
    mapped = [&f, a, width, m](double u) {
      const double um1 = std::pow(u, m - 1);
      return f(a + width * um1 * u) * m * width * um1;
    };
  } else {
    mapped = [&f, b, width, m](double u) {
      const double um1 = std::pow(u, m - 1);
      return f(b - width * um1 * u) * m * width * um1;
    };
  }
  return adaptive_gk(mapped, 0.0, 1.0, cfg, Method::gauss_kronrod);
}

EvalResult integrate_semi_infinite(const Integrand& f, double a, const QuadratureConfig& cfg) {
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: a must be finite");
  // scale from the peak of |f(x)| (x - a) on a geometric grid
  constexpr int kLo = -30;
  constexpr int kHi = 40;
  double best = 0.0;
  int best_k = 0;
  for (int k = kLo; k <= kHi; ++k) {
    const double dx = std::ldexp(1.0, k);
    const double y = f(a + dx);
    if (!std::isfinite(y)) continue;
    const double w = std::abs(y) * dx;
    if (w > best) {
      best = w;
      best_k = k;
    }
  }
  if (best > 0.0 && best_k == kHi) {
    throw NonDecayError("integrate_semi_infinite: integrand mass still growing at x=2^40",
                        {std::numeric_limits<double>::infinity(), 0.0, Method::semi_infinite});
  }
  return integrate_semi_infinite(f, a, cfg, best > 0.0 ? std::ldexp(1.0, best_k) : 1.0);
}

EvalResult integrate_semi_infinite(const Integrand& f, double a, const QuadratureConfig& cfg,
                                   double scale) {
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: a must be finite");
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw DomainError("integrate_semi_infinite: scale must be finite and > 0");
  }
  const Integrand mapped = [&f, a, scale](double t) {
    const double one_minus = 1.0 - t;
    const double y = f(a + scale * t / one_minus);
    if (y == 0.0) return 0.0;
    return y * (scale / (one_minus * one_minus));
  };
  const double h_near = std::abs(mapped(1.0 - 1e-4));
  const double h_far = std::abs(mapped(1.0 - 1e-8));
  if (!std::isfinite(h_far) || (h_far > 10.0 * h_near && h_far > cfg.abs_tol)) {
    throw NonDecayError("integrate_semi_infinite: integrand does not decay at the transform boundary",
                        {std::numeric_limits<double>::infinity(), 0.0, Method::semi_infinite});
  }
  EvalResult r = adaptive_gk(mapped, 0.0, 1.0, cfg, Method::semi_infinite);
  return r;
}

Extrapolation wynn_epsilon(std::span<const double> partial_sums) {
  if (partial_sums.size() < 3) {
    throw DomainError("wynn_epsilon: needs at least 3 partial sums");
  }
  constexpr std::size_t kWindow = 50;
  const std::size_t n = partial_sums.size();
  const std::size_t w = std::min(n, kWindow);
  auto tail = [&](std::size_t drop) {
    const std::size_t end = n - drop;
    const std::size_t len = std::min(w, end);
    return partial_sums.subspan(end - len, len);
  };
  const double e0 = epsilon_estimate(tail(0));
  const double e1 = epsilon_estimate(tail(1));
  const double e2 = epsilon_estimate(tail(2));
  const double error = std::abs(e0 - e1) + std::abs(e0 - e2);
  return {e0, std::max(error, 10.0 * kEps * std::abs(e0))};
}

EvalResult integrate_bessel_oscillatory(const Integrand& g, double order, double omega,
                                        const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(omega > 0) || !std::isfinite(omega)) {
    throw DomainError("integrate_bessel_oscillatory: omega must be finite and > 0");
  }
  const Integrand lobe_integrand = [&g, order, omega](double r) {
    return g(r) * bessel_j(order, omega * r);
  };
  QuadratureConfig lobe_cfg = cfg;
  lobe_cfg.abs_tol = cfg.abs_tol / 10.0;

  BesselZeros zeros(order);
  std::vector<double> sums;
  double running = 0.0;
  double quad_err = 0.0;
  double prev_abs = std::numeric_limits<double>::infinity();
  double prev_ext = std::numeric_limits<double>::quiet_NaN();
  std::ptrdiff_t accel_from = -1;
  double left = 0.0;

  for (int lobe = 0; lobe < cfg.max_subdivisions; ++lobe) {
    const double right = zeros.next() / omega;
    const EvalResult piece = integrate_finite(lobe_integrand, left, right, lobe_cfg);
    left = right;
    running += piece.value;
    quad_err += piece.abs_err;
    sums.push_back(running);

    const double mag = std::abs(piece.value);
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(running));
    const bool decreasing = mag < prev_abs;
    prev_abs = mag;

    // alternating tail with shrinking lobes is bounded by the last lobe
    if (lobe >= 1 && decreasing && mag <= 0.5 * tol) {
      return {running, quad_err + mag, Method::bessel_lobes};
    }
    if (accel_from < 0 && lobe + 1 >= cfg.tail_terms && decreasing) {
      accel_from = static_cast<std::ptrdiff_t>(sums.size()) - 1;
    }
    if (accel_from >= 0 && static_cast<std::ptrdiff_t>(sums.size()) - accel_from >= 4) {
      const auto window = std::span<const double>(sums).subspan(static_cast<std::size_t>(accel_from));
      const Extrapolation ext = wynn_epsilon(window);
      const double drift = std::abs(ext.value - prev_ext);
      if (ext.error <= tol && drift <= tol) {
        return {ext.value, quad_err + ext.error + drift, Method::bessel_lobes};
      }
      prev_ext = ext.value;
    }
  }
  throw ConvergenceError("integrate_bessel_oscillatory: lobe budget exhausted",
                         {running, quad_err + prev_abs, Method::bessel_lobes});
}

}  // namespace stretchft
