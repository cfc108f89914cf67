#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubered {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. The backend keeps every value canonically reduced
/// with a positive denominator, so equality is plain field-wise comparison.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline std::string to_string(const Integer& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

/// Parses "p", "-p" or "p/q" with q > 0. Throws std::invalid_argument with
/// the offending token in the message.
inline Rational parse_rational(std::string_view text) {
  const std::string token(text);
  const auto bad = [&token](const char* why) {
    throw std::invalid_argument("cannot parse rational '" + token + "': " + why);
  };
  if (token.empty()) bad("empty token");
  const auto slash = token.find('/');
  const auto digits_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (const char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(token)) bad("not an integer or p/q fraction");
    return Rational(Integer(token));
  }
  const std::string num = token.substr(0, slash);
  const std::string den = token.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) bad("not an integer or p/q fraction");
  const Integer d(den);
  if (d <= 0) bad("denominator must be positive");
  return Rational(Integer(num), d);
}

inline Integer int_pow(const Integer& base, unsigned exponent) {
  if (exponent == 0) return 1;  // 0^0 == 1 by the usual summation convention
  return boost::multiprecision::pow(base, exponent);
}

inline Rational rational_pow(const Rational& base, unsigned exponent) {
  return Rational(int_pow(numerator(base), exponent), int_pow(denominator(base), exponent));
}

}  // namespace cubered
