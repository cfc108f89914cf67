#pragma once

#include <stdexcept>

#include "cubered/closed_form.hpp"
#include "cubered/combinatorics.hpp"
#include "cubered/rational.hpp"

namespace cubered {

// Second, independent route to the log-gamma cube integral. Instead of the
// final alternating formula, assemble the value the long way: split
// log Gamma(t+m-1) against the weight prefix sums, integrate each
// prefix-times-log term by parts, and total the boundary and remainder
// pieces separately. Agreement with log_gamma_closed_form is a strong
// end-to-end check on every symbolic layer below.

namespace detail {
inline void check_derivation_n(int n, const char* where) {
  if (n < 2) throw std::invalid_argument(std::string(where) + ": n must be >= 2");
}
}  // namespace detail

/// Log-bearing boundary half of the by-parts totals:
///   (1/n) sum_{k=2..n-2} C(n-1,k)(-1)^k(-k)^n log k
///   + (log(n-1)/n) [n!(n-1) - (n-1)^n].
inline ClosedFormValue log_boundary_total(int n) {
  detail::check_derivation_n(n, "log_boundary_total");
  ClosedFormValue v;
  for (int k = 2; k <= n - 2; ++k) {
    const Rational c(binomial(n - 1, k) * int_pow(Integer(-k), static_cast<unsigned>(n)) *
                         (k % 2 == 0 ? 1 : -1),
                     Integer(n));
    v += c * log_of_integer(static_cast<std::uint64_t>(k));
  }
  const Rational top((factorial(n) * (n - 1) - int_pow(Integer(n - 1), static_cast<unsigned>(n))),
                     Integer(n));
  v += top * log_of_integer(static_cast<std::uint64_t>(n - 1));
  v.prune();
  return v;
}

/// Rational remainder half: (n-1)!(n-1) - (n-1)/2 * H_n * (n-1)!.
inline Rational rational_remainder_total(int n) {
  detail::check_derivation_n(n, "rational_remainder_total");
  const Rational nm1fact(factorial(n - 1));
  return nm1fact * Rational(n - 1) - Rational(n - 1, 2) * harmonic_number(n) * nm1fact;
}

/// Component of the remainder total collected from the lower telescope
/// endpoints; carries the harmonic factor: (H_n/n) [(n-1)^n - (n-1)/2 n!].
inline Rational remainder_lower_part(int n) {
  detail::check_derivation_n(n, "remainder_lower_part");
  const Rational bracket = Rational(int_pow(Integer(n - 1), static_cast<unsigned>(n))) -
                           Rational(n - 1, 2) * Rational(factorial(n));
  return harmonic_number(n) / Rational(n) * bracket;
}

/// Component from the upper endpoints: (n-1)!(n-1) - (H_n/n)(n-1)^n.
inline Rational remainder_upper_part(int n) {
  detail::check_derivation_n(n, "remainder_upper_part");
  return Rational(factorial(n - 1)) * Rational(n - 1) -
         harmonic_number(n) / Rational(n) *
             Rational(int_pow(Integer(n - 1), static_cast<unsigned>(n)));
}

struct DerivationTrace {
  int n = 0;
  ClosedFormValue log_boundary;        // boundary half (carries the log k terms)
  Rational rational_remainder;         // remainder half (pure rational)
  Rational remainder_lower;            // harmonic component of the remainder
  Rational remainder_upper;            // endpoint component; lower + upper = remainder
  ClosedFormValue prefix_log_integral; // boundary - remainder
  ClosedFormValue final;               // assembled integral value
};

/// Assembles the integral along the derivation route:
///   1/2 log(2 pi) + (n-1) log(n-1) - (n-1)
///     - 1/(n-1)! * (boundary - remainder).
inline DerivationTrace log_gamma_by_parts(int n) {
  detail::check_derivation_n(n, "log_gamma_by_parts");
  DerivationTrace trace;
  trace.n = n;
  trace.log_boundary = log_boundary_total(n);
  trace.rational_remainder = rational_remainder_total(n);
  trace.remainder_lower = remainder_lower_part(n);
  trace.remainder_upper = remainder_upper_part(n);
  trace.prefix_log_integral = trace.log_boundary - from_rational(trace.rational_remainder);

  ClosedFormValue value = half_log_two_pi();
  value += Rational(n - 1) * log_of_integer(static_cast<std::uint64_t>(n - 1));
  value.constant -= Rational(n - 1);
  value -= Rational(1, factorial(n - 1)) * trace.prefix_log_integral;
  value.prune();
  trace.final = value;
  return trace;
}

}  // namespace cubered
