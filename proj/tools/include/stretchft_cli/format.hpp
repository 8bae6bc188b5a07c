#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stretchft/precision.hpp"
#include "stretchft/transform.hpp"

namespace stretchft::cli {

enum class OutputFormat { lines, csv, json };

OutputFormat parse_format(std::string_view name);

/// 17 significant digits, round-trippable.
std::string format_double(double v);

/// Decimal rendering of exp(log_value) with 17 significant digits, for
/// values that underflow a double.
std::string format_from_log(double log_value);

/// The value of a transform, falling back to the log fields when the double
/// underflowed to zero.
std::string format_ft_value(const FtValue& v);
std::string format_ft_error(const FtValue& v);

std::string format_rational(const Rational& q);
std::string format_extended(const Extended& v);

/// JSON string literal with the necessary escapes.
std::string json_quote(std::string_view text);

/// One output record: an ordered list of key/value pairs. Numeric values are
/// stored preformatted; quoted marks values that are strings in JSON, raw
/// values (arrays) are copied into JSON verbatim.
struct Field {
  std::string key;
  std::string value;
  bool quoted = false;
  bool raw = false;
};
using Record = std::vector<Field>;

/// key=value pairs separated by spaces, the CSV row (no header), or a JSON object.
std::string render(const Record& rec, OutputFormat fmt);
std::string csv_header(const Record& rec);

}  // namespace stretchft::cli
