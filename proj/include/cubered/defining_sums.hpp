#pragma once

#include <stdexcept>

#include "cubered/closed_form.hpp"
#include "cubered/combinatorics.hpp"
#include "cubered/rational.hpp"

namespace cubered {

// Brute-force evaluation of the sums the derivation route simplifies away.
// Everything here is written straight off the defining expressions, on
// purpose: these are the oracles the closed forms in derivation.hpp are
// tested against, so they must not share any simplification with them.

namespace detail {

inline void check_sum_n(int n, const char* where) {
  if (n < 2) throw std::invalid_argument(std::string(where) + ": n must be >= 2");
}

inline Integer signed_pow(int base, int exponent) {
  return int_pow(Integer(base), static_cast<unsigned>(exponent));
}

}  // namespace detail

/// Boundary term of shell-prefix k, straight from its defining double sum:
///   sum_{m=0..k-1} C(n-1,m)(-1)^m [ ((k-m)^n - (-m)^n)/n log k
///                                  - ((k-m-1)^n - (-m)^n)/n log(k-1) ].
/// The k = 1 term is zero (its log 0 coefficient vanishes identically).
inline ClosedFormValue log_boundary_term_direct(int n, int k) {
  detail::check_sum_n(n, "log_boundary_term_direct");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("log_boundary_term_direct: k must be in [1, n-1]");
  ClosedFormValue v;
  if (k == 1) return v;
  for (int m = 0; m <= k - 1; ++m) {
    const Integer sign = (m % 2 == 0) ? 1 : -1;
    const Integer binom = binomial(n - 1, m) * sign;
    const Integer minus_m_pow = detail::signed_pow(-m, n);
    const Rational logk_coeff(binom * (detail::signed_pow(k - m, n) - minus_m_pow), Integer(n));
    const Rational logk1_coeff(binom * (detail::signed_pow(k - m - 1, n) - minus_m_pow),
                               Integer(n));
    v += logk_coeff * log_of_integer(static_cast<std::uint64_t>(k));
    v -= logk1_coeff * log_of_integer(static_cast<std::uint64_t>(k - 1));
  }
  v.prune();
  return v;
}

/// Rational remainder of shell-prefix k, from its defining double sum:
///   (1/n) sum_{m=0..k-1} C(n-1,m)(-1)^m
///         sum_{r=1..n} (k^r - (k-1)^r)/r C(n,r) (-m)^(n-r).
inline Rational rational_remainder_term_direct(int n, int k) {
  detail::check_sum_n(n, "rational_remainder_term_direct");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("rational_remainder_term_direct: k must be in [1, n-1]");
  Rational total = 0;
  for (int m = 0; m <= k - 1; ++m) {
    Rational inner = 0;
    for (int r = 1; r <= n; ++r) {
      inner += Rational(detail::signed_pow(k, r) - detail::signed_pow(k - 1, r), Integer(r)) *
               Rational(binomial(n, r) * detail::signed_pow(-m, n - r));
    }
    total += (m % 2 == 0) ? inner * Rational(binomial(n - 1, m))
                          : -inner * Rational(binomial(n - 1, m));
  }
  return total / Rational(n);
}

inline ClosedFormValue log_boundary_total_direct(int n) {
  detail::check_sum_n(n, "log_boundary_total_direct");
  ClosedFormValue v;
  for (int k = 1; k <= n - 1; ++k) v += log_boundary_term_direct(n, k);
  v.prune();
  return v;
}

inline Rational rational_remainder_total_direct(int n) {
  detail::check_sum_n(n, "rational_remainder_total_direct");
  Rational total = 0;
  for (int k = 1; k <= n - 1; ++k) total += rational_remainder_term_direct(n, k);
  return total;
}

/// Lower-endpoint remainder component, from its defining double sum:
///   -(1/n) sum_{k=1..n-2} C(n-1,k)(-1)^k(-k)^n sum_{r=1..n} C(n,r)(-1)^r/r.
inline Rational remainder_lower_part_direct(int n) {
  detail::check_sum_n(n, "remainder_lower_part_direct");
  Rational outer = 0;
  for (int k = 1; k <= n - 2; ++k) {
    const Integer sign = (k % 2 == 0) ? 1 : -1;
    outer += Rational(binomial(n - 1, k) * sign * detail::signed_pow(-k, n));
  }
  Rational inner = 0;
  for (int r = 1; r <= n; ++r) {
    const Rational term = Rational(binomial(n, r), Integer(r));
    inner += (r % 2 == 0) ? term : -term;
  }
  return -outer * inner / Rational(n);
}

/// Upper-endpoint remainder component, from its defining double sum:
///   (1/n) sum_{m=0..n-2} C(n-1,m)(-1)^m sum_{r=1..n} C(n,r)(-m)^(n-r)(n-1)^r/r.
inline Rational remainder_upper_part_direct(int n) {
  detail::check_sum_n(n, "remainder_upper_part_direct");
  Rational total = 0;
  for (int m = 0; m <= n - 2; ++m) {
    Rational inner = 0;
    for (int r = 1; r <= n; ++r) {
      inner += Rational(binomial(n, r) * detail::signed_pow(-m, n - r) *
                            detail::signed_pow(n - 1, r),
                        Integer(r));
    }
    total += (m % 2 == 0) ? inner * Rational(binomial(n - 1, m))
                          : -inner * Rational(binomial(n - 1, m));
  }
  return total / Rational(n);
}

/// sum_{m=0..n-2} C(n-1,m)(-1)^m(-m)^n; closed form (n-1)^n - (n-1)/2 n!.
inline Rational alternating_power_sum(int n) {
  detail::check_sum_n(n, "alternating_power_sum");
  Rational total = 0;
  for (int m = 0; m <= n - 2; ++m) {
    const Integer sign = (m % 2 == 0) ? 1 : -1;
    total += Rational(binomial(n - 1, m) * sign * detail::signed_pow(-m, n));
  }
  return total;
}

/// sum_{m=0..n-2} C(n-1,m)(-1)^(m+n) sum_{k=1..n} (m-n+1)^k m^(n-k)/k;
/// closed form n!(n-1) - (n-1)/2 n! H_n.
inline Rational telescoped_power_double_sum(int n) {
  detail::check_sum_n(n, "telescoped_power_double_sum");
  Rational total = 0;
  for (int m = 0; m <= n - 2; ++m) {
    Rational inner = 0;
    for (int k = 1; k <= n; ++k) {
      inner += Rational(detail::signed_pow(m - n + 1, k) * detail::signed_pow(m, n - k),
                        Integer(k));
    }
    const bool negative = (m + n) % 2 != 0;
    total += negative ? -inner * Rational(binomial(n - 1, m))
                      : inner * Rational(binomial(n - 1, m));
  }
  return total;
}

}  // namespace cubered
