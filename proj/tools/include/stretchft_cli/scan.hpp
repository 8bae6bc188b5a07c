#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "stretchft/quadrature.hpp"
#include "stretchft/transform.hpp"

namespace stretchft::cli {

struct ScanRequest {
  std::vector<double> s_values;
  std::vector<int> d_values;
  double r_max = 10.0;
  int r_steps = 101;
  // overrides r_max / r_steps when non-empty
  std::vector<double> radii;
  FtMethodChoice method = FtMethodChoice::automatic;
  QuadratureConfig cfg = default_transform_quadrature();
  int threads = 1;

  /// Throws DomainError on empty lists, s <= 0, d < 1, r_max <= 0, r_steps < 2
  /// or a negative radius.
  void validate() const;
  /// r_i = r_max i / (r_steps - 1), so both 0 and r_max are on the grid.
  std::vector<double> grid() const;
};

enum class Verdict { positive_on_grid, violation_found, inconclusive };
std::string_view to_string(Verdict v) noexcept;

struct ScanRow {
  double s;
  int d;
  FtValue value;
};

/// Lower bound value - abs_err at one grid point. When it is positive but
/// below the double range, log_bound carries it.
struct LowerBound {
  double bound = 0.0;
  double log_bound = 0.0;
  bool positive = false;
};

/// Smallest lower bound over the r grid for one (s, d).
struct SpecMinimum {
  double s;
  int d;
  double r;
  LowerBound lower;
};

struct Witness {
  double s;
  int d;
  double r;
  double value;
  double abs_err;
};

struct CertificateReport {
  std::vector<ScanRow> rows;  // ordered by (s, d, r) as requested
  std::vector<SpecMinimum> minima;
  Verdict verdict = Verdict::positive_on_grid;
  std::optional<Witness> witness;  // most negative certified point
  // some certified negative point has s <= 2
  bool contradicts_theorem = false;

  /// 0 positive or violation only for s > 2, 4 inconclusive, 5 violation at s <= 2.
  int exit_code() const noexcept;
};

LowerBound lower_bound(const FtValue& v);
/// a < b for lower bounds, comparing in the log domain when both are positive.
bool lower_bound_less(const LowerBound& a, const LowerBound& b);

/// Evaluates the grid on req.threads workers. Results do not depend on the
/// thread count. A failed point rethrows its exception after all workers stop.
CertificateReport run_scan_grid(const ScanRequest& req);

}  // namespace stretchft::cli
