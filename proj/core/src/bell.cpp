#include "stretchft/bell.hpp"

#include <cctype>

namespace stretchft {

std::vector<BigInt> pascal_row(int n) {
  if (n < 0) throw DomainError("pascal_row: n must be >= 0");
  std::vector<BigInt> row{BigInt(1)};
  row.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    // C(n, i) = C(n, i-1) (n - i + 1) / i, exact at every step
    row.push_back(row.back() * (n - i + 1) / i);
  }
  return row;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binomial: requires 0 <= k <= n (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  k = std::min(k, n - k);
  BigInt c(1);
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

namespace {

BigInt parse_integer(const std::string& digits, const std::string& original) {
  if (digits.empty()) throw std::invalid_argument("parse_rational: bad number '" + original + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("parse_rational: bad number '" + original + "'");
    }
  }
  // cpp_int reads a leading 0 as an octal prefix
  const auto first = digits.find_first_not_of('0');
  return first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
}

BigInt pow10(long e) {
  BigInt p(1);
  for (long i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("parse_rational: empty input");
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  Rational value;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = parse_integer(s.substr(0, slash), text);
    const BigInt den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
      exponent = std::stol(s.substr(e + 1));
      s.resize(e);
    }
    std::string digits = s;
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      digits = s.substr(0, dot) + s.substr(dot + 1);
      exponent -= static_cast<long>(s.size() - dot - 1);
      if (digits.empty()) throw std::invalid_argument("parse_rational: bad number '" + text + "'");
    }
    const BigInt mantissa = parse_integer(digits, text);
    value = exponent >= 0 ? Rational(mantissa * pow10(exponent))
                          : Rational(mantissa, pow10(-exponent));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace stretchft
