#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubered/combinatorics.hpp"
#include "cubered/rational.hpp"

namespace cubered {

/// High-precision float for rendering exact results numerically. 256 decimal
/// digits: the alternating closed forms below suffer massive cancellation for
/// large n (individual terms near 1e110 combine to order 1), and the result
/// must still carry 50 clean digits.
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256>>;

/// Exact value of the form  constant + c_pi*log(pi) + sum_p c_p*log(p)
/// with all coefficients rational and p running over primes. log(pi) and the
/// log(p) are linearly independent over the rationals, so two values are
/// equal iff they match coefficient-wise; composite and zero log entries are
/// never stored.
struct ClosedFormValue {
  Rational constant{};
  Rational pi_log_coeff{};
  std::map<std::uint64_t, Rational> prime_log_coeffs{};

  void prune() {
    for (auto it = prime_log_coeffs.begin(); it != prime_log_coeffs.end();)
      it = (it->second == 0) ? prime_log_coeffs.erase(it) : std::next(it);
  }

  ClosedFormValue& operator+=(const ClosedFormValue& o) {
    constant += o.constant;
    pi_log_coeff += o.pi_log_coeff;
    for (const auto& [p, c] : o.prime_log_coeffs) prime_log_coeffs[p] += c;
    prune();
    return *this;
  }
  ClosedFormValue& operator-=(const ClosedFormValue& o) {
    constant -= o.constant;
    pi_log_coeff -= o.pi_log_coeff;
    for (const auto& [p, c] : o.prime_log_coeffs) prime_log_coeffs[p] -= c;
    prune();
    return *this;
  }
  ClosedFormValue& operator*=(const Rational& s) {
    constant *= s;
    pi_log_coeff *= s;
    for (auto& [p, c] : prime_log_coeffs) c *= s;
    prune();
    return *this;
  }

  friend ClosedFormValue operator+(ClosedFormValue a, const ClosedFormValue& b) { return a += b; }
  friend ClosedFormValue operator-(ClosedFormValue a, const ClosedFormValue& b) { return a -= b; }
  friend ClosedFormValue operator*(ClosedFormValue a, const Rational& s) { return a *= s; }
  friend ClosedFormValue operator*(const Rational& s, ClosedFormValue a) { return a *= s; }
  friend bool operator==(const ClosedFormValue& a, const ClosedFormValue& b) {
    return a.constant == b.constant && a.pi_log_coeff == b.pi_log_coeff &&
           a.prime_log_coeffs == b.prime_log_coeffs;
  }
};

inline std::vector<std::pair<std::uint64_t, unsigned>> prime_factorization(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("prime_factorization: argument must be >= 1");
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  for (std::uint64_t p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (k > 1) factors.emplace_back(k, 1);
  return factors;
}

/// log(k) for integer k >= 1, decomposed over the prime basis.
inline ClosedFormValue log_of_integer(std::uint64_t k) {
  ClosedFormValue v;
  for (const auto& [p, e] : prime_factorization(k)) v.prime_log_coeffs[p] = static_cast<int>(e);
  return v;
}

inline ClosedFormValue from_rational(Rational c) {
  ClosedFormValue v;
  v.constant = std::move(c);
  return v;
}

/// (1/2) * log(2*pi) in the canonical basis.
inline ClosedFormValue half_log_two_pi() {
  ClosedFormValue v;
  v.pi_log_coeff = Rational(1, 2);
  v.prime_log_coeffs[2] = Rational(1, 2);
  return v;
}

/// Exact n-cube integral of log(Gamma(x_1 + ... + x_n)):
///   1/2 log(2 pi) - (n-1)/2 H_n
///     + sum_{k=2..n-1} (-1)^(n+k+1) k^n / n! * C(n-1, k) * log k.
inline ClosedFormValue log_gamma_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("log_gamma_closed_form: n must be >= 1");
  ClosedFormValue v = half_log_two_pi();
  v.constant -= Rational(n - 1, 2) * harmonic_number(n);
  const Integer nfact = factorial(n);
  for (int k = 2; k <= n - 1; ++k) {
    Rational c(int_pow(k, static_cast<unsigned>(n)) * binomial(n - 1, k), nfact);
    if ((n + k + 1) % 2 != 0) c = -c;
    v += c * log_of_integer(static_cast<std::uint64_t>(k));
  }
  v.prune();
  return v;
}

inline BigFloat to_bigfloat(const Rational& r) {
  return BigFloat(numerator(r)) / BigFloat(denominator(r));
}

inline BigFloat to_bigfloat(const ClosedFormValue& v) {
  BigFloat x = to_bigfloat(v.constant);
  if (v.pi_log_coeff != 0)
    x += to_bigfloat(v.pi_log_coeff) * log(boost::math::constants::pi<BigFloat>());
  for (const auto& [p, c] : v.prime_log_coeffs) x += to_bigfloat(c) * log(BigFloat(p));
  return x;
}

inline double to_double(const ClosedFormValue& v) { return static_cast<double>(to_bigfloat(v)); }

/// Fixed-point rendering with exactly `digits` digits after the point,
/// correctly rounded at the working precision. digits in [1, 50].
inline std::string decimal_value(const ClosedFormValue& v, int digits) {
  if (digits < 1 || digits > 50)
    throw std::invalid_argument("decimal_value: digits must be in [1, 50]");
  return to_bigfloat(v).str(digits, std::ios_base::fixed);
}

/// Readable form, e.g. "-3/4 + 1/2·logπ + 1/2·log2".
inline std::string to_string(const ClosedFormValue& v) {
  std::string out;
  const auto append = [&out](const Rational& c, const std::string& unit) {
    if (c == 0) return;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (unit.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "·";
      out += unit;
    }
  };
  append(v.constant, "");
  append(v.pi_log_coeff, "logπ");
  for (const auto& [p, c] : v.prime_log_coeffs) append(c, "log" + std::to_string(p));
  return out.empty() ? "0" : out;
}

}  // namespace cubered
