#include "stretchft_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "stretchft/bell.hpp"
#include "stretchft/errors.hpp"
#include "stretchft/mixture.hpp"
#include "stretchft/monotone.hpp"
#include "stretchft/transform.hpp"
#include "stretchft_cli/format.hpp"
#include "stretchft_cli/scan.hpp"

namespace stretchft::cli {

namespace {

// bad flag values, as opposed to failures of the computation itself
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto as_usage(F&& check) {
  try {
    return check();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct Options {
  std::string format = "lines";
  std::string out_path;
  bool timing = false;
  double rel_tol = default_transform_quadrature().rel_tol;
  double abs_tol = default_transform_quadrature().abs_tol;
  std::string method = "auto";
  std::string precision;

  std::vector<double> s;
  std::vector<int> d;
  double r = 0.0;
  std::vector<double> radii;
  double r_max = 10.0;
  int r_steps = 101;
  int threads = 1;

  int n = 0;
  bool ones = false;
  std::vector<std::string> x_text;

  int n_max = 20;
  std::vector<double> points;
  double tol = -1.0;

  double alpha = 0.5;
  std::vector<double> t;
  bool cdf = false;
  std::vector<double> x = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
};

class Writer {
 public:
  explicit Writer(OutputFormat fmt) : fmt_(fmt) {}

  void row(const Record& rec) {
    if (fmt_ == OutputFormat::csv && !header_written_) {
      buf_ << csv_header(rec) << '\n';
      header_written_ = true;
    }
    buf_ << render(rec, fmt_) << '\n';
  }

  // records outside the main table; CSV keeps them as comments
  void summary(const Record& rec) {
    if (fmt_ == OutputFormat::csv) {
      buf_ << "# " << render(rec, OutputFormat::lines) << '\n';
    } else {
      buf_ << render(rec, fmt_) << '\n';
    }
  }

  OutputFormat format() const { return fmt_; }
  std::string str() const { return buf_.str(); }

 private:
  OutputFormat fmt_;
  bool header_written_ = false;
  std::ostringstream buf_;
};

Field num(std::string key, double v) { return {std::move(key), format_double(v)}; }
Field integer(std::string key, long long v) { return {std::move(key), std::to_string(v)}; }
Field text(std::string key, std::string_view v) { return {std::move(key), std::string(v), true}; }

QuadratureConfig quadrature_from(const Options& o) {
  QuadratureConfig cfg = default_transform_quadrature();
  cfg.rel_tol = o.rel_tol;
  cfg.abs_tol = o.abs_tol;
  as_usage([&] {
    cfg.validate();
    return 0;
  });
  return cfg;
}

double single(const std::vector<double>& v, const char* flag) {
  if (v.size() != 1) throw UsageError(std::string(flag) + " takes exactly one value here");
  return v.front();
}

int single(const std::vector<int>& v, const char* flag) {
  if (v.size() != 1) throw UsageError(std::string(flag) + " takes exactly one value here");
  return v.front();
}

Record ft_record(double s, int d, const FtValue& v) {
  return {num("s", s),
          integer("d", d),
          num("r", v.r),
          {"value", format_ft_value(v)},
          {"abs_err", format_ft_error(v)},
          text("method", to_string(v.method))};
}

int run_ft(const Options& o, Writer& w) {
  const double s = single(o.s, "--s");
  const int d = single(o.d, "--d");
  const auto method = as_usage([&] { return parse_method_choice(o.method); });
  const auto spec = as_usage([&] { return StretchSpec(s, d); });
  if (!(o.r >= 0) || !std::isfinite(o.r)) throw UsageError("--r must be finite and >= 0");
  if (method == FtMethodChoice::closed && s != 1.0 && s != 2.0) {
    throw UsageError("--method closed needs s = 1 or s = 2");
  }
  if (method == FtMethodChoice::mixture && s > 2.0) throw UsageError("--method mixture needs s <= 2");
  const FtValue v = ft(spec, o.r, method, quadrature_from(o));
  w.row(ft_record(s, d, v));
  return kExitOk;
}

std::string format_lower(const LowerBound& lb) {
  if (lb.positive && !(lb.bound > 0)) return format_from_log(lb.log_bound);
  return format_double(lb.bound);
}

int run_scan(const Options& o, Writer& w) {
  ScanRequest req;
  req.s_values = o.s;
  req.d_values = o.d;
  req.r_max = o.r_max;
  req.r_steps = o.r_steps;
  req.radii = o.radii;
  req.threads = o.threads;
  req.method = as_usage([&] { return parse_method_choice(o.method); });
  req.cfg = quadrature_from(o);
  as_usage([&] {
    req.validate();
    return 0;
  });
  for (const double s : req.s_values) {
    if (req.method == FtMethodChoice::closed && s != 1.0 && s != 2.0) {
      throw UsageError("--method closed needs s = 1 or s = 2");
    }
    if (req.method == FtMethodChoice::mixture && s > 2.0) {
      throw UsageError("--method mixture needs s <= 2");
    }
  }

  const CertificateReport report = run_scan_grid(req);
  for (const auto& row : report.rows) w.row(ft_record(row.s, row.d, row.value));
  for (const auto& m : report.minima) {
    w.summary({text("kind", "minimum"), num("s", m.s), integer("d", m.d), num("r", m.r),
               {"lower", format_lower(m.lower)}});
  }
  Record verdict = {text("kind", "verdict"), text("verdict", to_string(report.verdict)),
                    integer("points", static_cast<long long>(report.rows.size()))};
  if (report.witness) {
    const Witness& wt = *report.witness;
    verdict.push_back(num("witness_s", wt.s));
    verdict.push_back(integer("witness_d", wt.d));
    verdict.push_back(num("witness_r", wt.r));
    verdict.push_back(num("witness_value", wt.value));
    verdict.push_back(num("witness_abs_err", wt.abs_err));
  }
  w.summary(verdict);
  return report.exit_code();
}

int run_norm(const Options& o, Writer& w) {
  const double s = single(o.s, "--s");
  const int d = single(o.d, "--d");
  const auto spec = as_usage([&] { return StretchSpec(s, d); });
  w.row({num("s", s), integer("d", d), num("value", ft_at_zero(spec))});
  return kExitOk;
}

template <class T>
void emit_bell(const BellRow<T>& row, std::string_view mode,
               const std::function<std::string(const T&)>& show, bool json_strings, Writer& w) {
  if (w.format() == OutputFormat::csv) {
    for (std::size_t k = 0; k < row.values.size(); ++k) {
      w.row({integer("k", static_cast<long long>(k)), {"value", show(row.values[k])}});
    }
    return;
  }
  std::string joined;
  for (std::size_t k = 0; k < row.values.size(); ++k) {
    if (k > 0) joined += ',';
    joined += json_strings && w.format() == OutputFormat::json ? json_quote(show(row.values[k]))
                                                               : show(row.values[k]);
  }
  Field values{"values", joined};
  if (w.format() == OutputFormat::json) {
    values.value = "[" + joined + "]";
    values.raw = true;
  }
  w.row({integer("n", static_cast<long long>(row.n)), text("mode", mode), values});
}

int run_bell(const Options& o, Writer& w) {
  if (o.n < 0) throw UsageError("--n must be >= 0");
  if (o.ones == !o.x_text.empty()) throw UsageError("give exactly one of --ones and --x");
  const std::string mode = o.precision.empty() ? "exact" : o.precision;
  if (mode != "exact" && mode != "extended" && mode != "double") {
    throw UsageError("--precision for bell is exact, extended or double");
  }
  const auto n = static_cast<std::size_t>(o.n);
  std::vector<Rational> xs;
  if (o.ones) {
    xs.assign(n, Rational(1));
  } else {
    for (const auto& t : o.x_text) xs.push_back(as_usage([&] { return parse_rational(t); }));
    if (xs.size() < n) {
      throw UsageError("--x needs at least n = " + std::to_string(n) + " arguments");
    }
  }
  if (mode == "exact") {
    emit_bell<Rational>(bell_table<Rational>(n, xs), mode, format_rational, true, w);
  } else if (mode == "extended") {
    std::vector<Extended> ext;
    for (const auto& q : xs) {
      ext.push_back(Extended(boost::multiprecision::numerator(q)) /
                    Extended(boost::multiprecision::denominator(q)));
    }
    emit_bell<Extended>(bell_table<Extended>(n, ext), mode, format_extended, false, w);
  } else {
    std::vector<double> dbl;
    for (const auto& q : xs) dbl.push_back(q.convert_to<double>());
    emit_bell<double>(bell_table<double>(n, dbl), mode, format_double, false, w);
  }
  return kExitOk;
}

Precision parse_precision(const std::string& name, Precision fallback) {
  if (name.empty()) return fallback;
  if (name == "extended") return Precision::extended;
  if (name == "double") return Precision::fp64;
  throw UsageError("--precision must be double or extended");
}

int run_cm_check(const Options& o, Writer& w) {
  const double s = single(o.s, "--s");
  as_usage([&] { return StretchExponent(s); });
  if (o.n_max < 1) throw UsageError("--nmax must be >= 1");
  if (o.points.empty()) throw UsageError("--points is required");
  for (const double x : o.points) {
    if (!(x > 0) || !std::isfinite(x)) throw UsageError("--points must be finite and > 0");
  }
  const Precision precision = parse_precision(o.precision, Precision::extended);
  const double tol = o.tol < 0 ? default_cm_tolerance(precision) : o.tol;

  const CMReport report = cm_check(s, o.n_max, o.points, tol, precision);
  for (const auto& rec : report.records) {
    w.row({integer("n", rec.n), num("x", rec.x), num("value", rec.value), num("scale", rec.scale),
           text("sign", to_string(rec.sign))});
  }
  Record summary = {text("kind", "summary"), num("s", s), integer("n_max", o.n_max)};
  int code = kExitOk;
  if (report.first_violation) {
    summary.push_back(text("verdict", "violation"));
    summary.push_back(integer("n", report.first_violation->n));
    summary.push_back(num("x", report.first_violation->x));
    // exp(-x^s) is completely monotone for s <= 1, so a violation there is a defect
    if (s <= 1.0) code = kExitViolation;
  } else if (report.all_positive()) {
    summary.push_back(text("verdict", "completely_monotone_on_grid"));
  } else {
    summary.push_back(text("verdict", "indeterminate"));
    code = kExitInconclusive;
  }
  w.summary(summary);
  return code;
}

int run_mixture(const Options& o, Writer& w) {
  if (!(o.alpha > 0 && o.alpha < 1)) throw UsageError("--alpha must lie in (0, 1)");
  if (o.t.empty()) throw UsageError("--t is required");
  for (const double t : o.t) {
    if (!(t > 0) || !std::isfinite(t)) throw UsageError("--t values must be finite and > 0");
  }
  const MixingDensity density(MixtureSpec::for_alpha(o.alpha));
  for (const double t : o.t) {
    const EvalResult v = density(t);
    Record rec = {num("alpha", o.alpha), num("t", t), num("value", v.value),
                  num("abs_err", v.abs_err), text("method", to_string(v.method))};
    if (o.cdf) rec.push_back(num("cdf", density.cdf(t)));
    w.row(rec);
  }
  return kExitOk;
}

int run_verify_bernstein(const Options& o, Writer& w) {
  if (!(o.alpha > 0 && o.alpha <= 1)) throw UsageError("--alpha must lie in (0, 1]");
  for (const double x : o.x) {
    if (!(x >= 0) || !std::isfinite(x)) throw UsageError("--x values must be finite and >= 0");
  }
  const QuadratureConfig cfg = quadrature_from(o);
  const MixtureSpec spec = MixtureSpec::for_alpha(o.alpha);
  for (const double x : o.x) {
    const EvalResult v = verify_bernstein(o.alpha, x, spec, cfg);
    w.row({num("alpha", o.alpha), num("x", x), num("residual", v.value), num("abs_err", v.abs_err),
           text("method", to_string(v.method))});
  }
  return kExitOk;
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "lines, csv or json")->check(CLI::IsMember({"lines", "csv", "json"}));
  sub->add_option("--out", o.out_path, "write records to this file instead of stdout");
  sub->add_flag("--timing", o.timing, "report wall time on stderr");
}

void add_tolerance_flags(CLI::App* sub, Options& o) {
  sub->add_option("--rel-tol", o.rel_tol, "relative quadrature tolerance");
  sub->add_option("--abs-tol", o.abs_tol, "absolute quadrature tolerance");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fourier transforms of exp(-|x|^s) and related tools", "stretchft"};
  app.require_subcommand(1);

  auto* ft_cmd = app.add_subcommand("ft", "transform at one radius");
  ft_cmd->add_option("--s", o.s, "exponent s > 0")->required()->delimiter(',');
  ft_cmd->add_option("--d", o.d, "dimension d >= 1")->required()->delimiter(',');
  ft_cmd->add_option("--r", o.r, "radius |xi|");
  ft_cmd->add_option("--method", o.method, "auto, hankel, mixture or closed");
  add_tolerance_flags(ft_cmd, o);
  add_output_flags(ft_cmd, o);

  auto* scan_cmd = app.add_subcommand("scan", "certify positivity on an (s, d, r) grid");
  scan_cmd->add_option("--s", o.s, "exponents, comma separated")->required()->delimiter(',');
  scan_cmd->add_option("--d", o.d, "dimensions, comma separated")->required()->delimiter(',');
  scan_cmd->add_option("--r-max", o.r_max, "largest radius");
  scan_cmd->add_option("--r-steps", o.r_steps, "number of radii from 0 to r-max");
  scan_cmd->add_option("--r", o.radii, "explicit radii instead of the uniform grid")->delimiter(',');
  scan_cmd->add_option("--method", o.method, "auto, hankel, mixture or closed");
  scan_cmd->add_option("--threads", o.threads, "worker threads");
  add_tolerance_flags(scan_cmd, o);
  add_output_flags(scan_cmd, o);

  auto* norm_cmd = app.add_subcommand("norm", "integral of exp(-|x|^s) over R^d");
  norm_cmd->add_option("--s", o.s, "exponent s > 0")->required()->delimiter(',');
  norm_cmd->add_option("--d", o.d, "dimension d >= 1")->required()->delimiter(',');
  add_output_flags(norm_cmd, o);

  auto* bell_cmd = app.add_subcommand("bell", "complete Bell polynomials B_0..B_n");
  bell_cmd->add_option("--n", o.n, "highest order")->required();
  bell_cmd->add_flag("--ones", o.ones, "all arguments equal to 1 (Bell numbers)");
  bell_cmd->add_option("--x", o.x_text, "arguments x_1..x_n as integers, decimals or p/q")->delimiter(',');
  bell_cmd->add_option("--precision", o.precision, "exact (default), extended or double");
  add_output_flags(bell_cmd, o);

  auto* cm_cmd = app.add_subcommand("cm-check", "sign pattern of (-1)^n f^(n) for f = exp(-x^s)");
  cm_cmd->add_option("--s", o.s, "exponent s > 0")->required()->delimiter(',');
  cm_cmd->add_option("--nmax", o.n_max, "highest derivative order");
  cm_cmd->add_option("--points", o.points, "points x > 0, comma separated")->required()->delimiter(',');
  cm_cmd->add_option("--tol", o.tol, "relative classification tolerance");
  cm_cmd->add_option("--precision", o.precision, "extended (default) or double");
  add_output_flags(cm_cmd, o);

  auto* mix_cmd = app.add_subcommand("mixture", "mixing density phi_alpha(t)");
  mix_cmd->add_option("--alpha", o.alpha, "alpha in (0, 1)");
  mix_cmd->add_option("--t", o.t, "points t > 0, comma separated")->required()->delimiter(',');
  mix_cmd->add_flag("--cdf", o.cdf, "also print the distribution function");
  add_output_flags(mix_cmd, o);

  auto* vb_cmd = app.add_subcommand("verify-bernstein", "residual of exp(-x^alpha) against its mixture");
  vb_cmd->add_option("--alpha", o.alpha, "alpha in (0, 1]");
  vb_cmd->add_option("--x", o.x, "points x >= 0, comma separated")->delimiter(',');
  add_tolerance_flags(vb_cmd, o);
  add_output_flags(vb_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  std::string records;
  try {
    Writer w(parse_format(o.format));
    if (ft_cmd->parsed()) {
      code = run_ft(o, w);
    } else if (scan_cmd->parsed()) {
      code = run_scan(o, w);
    } else if (norm_cmd->parsed()) {
      code = run_norm(o, w);
    } else if (bell_cmd->parsed()) {
      code = run_bell(o, w);
    } else if (cm_cmd->parsed()) {
      code = run_cm_check(o, w);
    } else if (mix_cmd->parsed()) {
      code = run_mixture(o, w);
    } else {
      code = run_verify_bernstein(o, w);
    }
    records = w.str();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << '\n';
    return kExitFailure;
  }

  if (o.out_path.empty()) {
    out << records;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << '\n';
      return kExitUsage;
    }
    file << records;
  }
  if (o.timing) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    err << "elapsed_s=" << format_double(elapsed.count()) << '\n';
  }
  return code;
}

}  // namespace stretchft::cli
