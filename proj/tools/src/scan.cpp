#include "stretchft_cli/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>
#include <utility>

#include "stretchft/errors.hpp"

namespace stretchft::cli {

void ScanRequest::validate() const {
  if (s_values.empty()) throw DomainError("scan: no s values");
  if (d_values.empty()) throw DomainError("scan: no d values");
  for (const double s : s_values) {
    if (!(s > 0) || !std::isfinite(s)) throw DomainError("scan: s must be finite and > 0");
  }
  for (const int d : d_values) {
    if (d < 1) throw DomainError("scan: d must be >= 1");
  }
  if (radii.empty()) {
    if (!(r_max > 0) || !std::isfinite(r_max)) throw DomainError("scan: r-max must be finite and > 0");
    if (r_steps < 2) throw DomainError("scan: r-steps must be >= 2");
  }
  for (const double r : radii) {
    if (!(r >= 0) || !std::isfinite(r)) throw DomainError("scan: radii must be finite and >= 0");
  }
  if (threads < 1) throw DomainError("scan: threads must be >= 1");
  cfg.validate();
}

std::vector<double> ScanRequest::grid() const {
  if (!radii.empty()) return radii;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(r_steps));
  for (int i = 0; i < r_steps; ++i) out.push_back(r_max * i / (r_steps - 1));
  return out;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::positive_on_grid: return "POSITIVE_ON_GRID";
    case Verdict::violation_found: return "VIOLATION_FOUND";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

int CertificateReport::exit_code() const noexcept {
  switch (verdict) {
    case Verdict::positive_on_grid: return 0;
    case Verdict::inconclusive: return 4;
    case Verdict::violation_found: return contradicts_theorem ? 5 : 0;
  }
  return 3;
}

LowerBound lower_bound(const FtValue& v) {
  LowerBound out;
  out.bound = v.result.value - v.result.abs_err;
  out.positive = v.certified_positive();
  if (out.positive) {
    // log(value - err) = log value + log1p(-err/value)
    out.log_bound = v.log_value + std::log1p(-std::exp(v.log_abs_err - v.log_value));
  } else {
    out.log_bound = -HUGE_VAL;
  }
  return out;
}

bool lower_bound_less(const LowerBound& a, const LowerBound& b) {
  if (a.positive && b.positive) return a.log_bound < b.log_bound;
  if (a.positive != b.positive) return b.positive;
  return a.bound < b.bound;
}

CertificateReport run_scan_grid(const ScanRequest& req) {
  req.validate();
  const std::vector<double> radii = req.grid();

  struct Job {
    double s;
    int d;
    double r;
  };
  std::vector<Job> jobs;
  for (const double s : req.s_values) {
    for (const int d : req.d_values) {
      for (const double r : radii) jobs.push_back({s, d, r});
    }
  }

  std::vector<FtValue> values(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
      try {
        values[i] = ft(StretchSpec(jobs[i].s, jobs[i].d), jobs[i].r, req.method, req.cfg);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  {
    const auto n = static_cast<std::size_t>(req.threads);
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < std::min(n, jobs.size()); ++t) pool.emplace_back(work);
    work();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  CertificateReport report;
  report.rows.reserve(jobs.size());
  bool inconclusive = false;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const FtValue& v = values[i];
    report.rows.push_back({jobs[i].s, jobs[i].d, v});
    if (v.certified_negative()) {
      // a point with s <= 2 outranks any other; then the largest certified margin
      const Witness w{jobs[i].s, jobs[i].d, v.r, v.result.value, v.result.abs_err};
      const auto rank = [](const Witness& x) {
        return std::pair{x.s > 2.0, x.value + x.abs_err};
      };
      if (!report.witness || rank(w) < rank(*report.witness)) report.witness = w;
      if (jobs[i].s <= 2.0) report.contradicts_theorem = true;
    } else if (!v.certified_positive()) {
      inconclusive = true;
    }
    const LowerBound lb = lower_bound(v);
    if (report.minima.empty() || report.minima.back().s != jobs[i].s ||
        report.minima.back().d != jobs[i].d) {
      report.minima.push_back({jobs[i].s, jobs[i].d, v.r, lb});
    } else if (lower_bound_less(lb, report.minima.back().lower)) {
      report.minima.back().r = v.r;
      report.minima.back().lower = lb;
    }
  }
  if (report.witness) {
    report.verdict = Verdict::violation_found;
  } else if (inconclusive) {
    report.verdict = Verdict::inconclusive;
  }
  return report;
}

}  // namespace stretchft::cli
