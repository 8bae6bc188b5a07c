#include "stretchft_cli/format.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "stretchft/errors.hpp"

namespace stretchft::cli {

OutputFormat parse_format(std::string_view name) {
  if (name == "lines") return OutputFormat::lines;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_from_log(double log_value) {
  if (!std::isfinite(log_value)) return log_value > 0 ? "inf" : "0";
  const double log10_v = log_value / std::log(10.0);
  double exponent = std::floor(log10_v);
  double mantissa = std::pow(10.0, log10_v - exponent);
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16fe%+.0f", mantissa, exponent);
  return buf;
}

std::string format_ft_value(const FtValue& v) {
  if (v.result.value == 0.0 && std::isfinite(v.log_value)) return format_from_log(v.log_value);
  return format_double(v.result.value);
}

std::string format_ft_error(const FtValue& v) {
  if (v.result.abs_err == 0.0 && std::isfinite(v.log_abs_err)) return format_from_log(v.log_abs_err);
  return format_double(v.result.abs_err);
}

std::string format_rational(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_extended(const Extended& v) {
  return v.str(17, std::ios_base::fmtflags(0));
}

std::string json_quote(std::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

namespace {

// nan and inf are not JSON numbers
std::string json_number(const std::string& text) {
  if (text == "nan" || text == "inf" || text == "-inf") return json_quote(text);
  return text;
}

}  // namespace

std::string render(const Record& rec, OutputFormat fmt) {
  std::string out;
  switch (fmt) {
    case OutputFormat::lines:
      for (std::size_t i = 0; i < rec.size(); ++i) {
        if (i > 0) out += ' ';
        out += rec[i].key + "=" + rec[i].value;
      }
      break;
    case OutputFormat::csv:
      for (std::size_t i = 0; i < rec.size(); ++i) {
        if (i > 0) out += ',';
        out += rec[i].value;
      }
      break;
    case OutputFormat::json:
      out = "{";
      for (std::size_t i = 0; i < rec.size(); ++i) {
        if (i > 0) out += ',';
        out += json_quote(rec[i].key) + ":";
        if (rec[i].raw) {
          out += rec[i].value;
        } else {
          out += rec[i].quoted ? json_quote(rec[i].value) : json_number(rec[i].value);
        }
      }
      out += "}";
      break;
  }
  return out;
}

std::string csv_header(const Record& rec) {
  std::string out;
  for (std::size_t i = 0; i < rec.size(); ++i) {
    if (i > 0) out += ',';
    out += rec[i].key;
  }
  return out;
}

}  // namespace stretchft::cli
