#include <catch2/catch_amalgamated.hpp>

#include "cubered/defining_sums.hpp"
#include "cubered/derivation.hpp"

using namespace cubered;

// The closed form is assembled in stages (boundary logs, rational remainder,
// two remainder halves). Each stage has a slow, deliberately unsimplified
// companion in defining_sums.hpp; these tests pin the two against each other
// so every algebraic step stays auditable.

TEST_CASE("boundary log totals match their defining sums") {
  // hand-checked small case: n = 3 gives 4/3 * log 2
  const ClosedFormValue s1 = log_boundary_total(3);
  CHECK(s1.constant == 0);
  CHECK(s1.pi_log_coeff == 0);
  CHECK(s1.prime_log_coeffs.at(2) == Rational(4, 3));
  for (int n = 2; n <= 10; ++n) {
    INFO("n=" << n);
    CHECK(log_boundary_total(n) == log_boundary_total_direct(n));
  }
}

TEST_CASE("rational remainder totals match their defining sums") {
  CHECK(rational_remainder_total(3) == Rational(1, 3));
  for (int n = 2; n <= 10; ++n) {
    INFO("n=" << n);
    CHECK(rational_remainder_total(n) == rational_remainder_total_direct(n));
  }
}

TEST_CASE("remainder halves match and recombine") {
  CHECK(remainder_lower_part(3) == Rational(11, 9));
  CHECK(remainder_upper_part(3) == Rational(-8, 9));
  for (int n = 2; n <= 10; ++n) {
    INFO("n=" << n);
    CHECK(remainder_lower_part(n) == remainder_lower_part_direct(n));
    CHECK(remainder_upper_part(n) == remainder_upper_part_direct(n));
  }
}

TEST_CASE("per-index defining sums accumulate to the totals") {
  for (int n = 2; n <= 8; ++n) {
    ClosedFormValue s1;
    Rational s2 = 0;
    for (int k = 1; k <= n - 1; ++k) {
      s1 += log_boundary_term_direct(n, k);
      s2 += rational_remainder_term_direct(n, k);
    }
    INFO("n=" << n);
    CHECK(s1 == log_boundary_total_direct(n));
    CHECK(s2 == rational_remainder_total_direct(n));
  }
}

TEST_CASE("alternating power sum collapses") {
  // sum_{m=0}^{n-2} C(n-1,m) (-1)^m (-m)^n  ==  (n-1)^n - (n-1)/2 * n!
  for (int n = 2; n <= 12; ++n) {
    const Rational expect =
        Rational(int_pow(Integer(n - 1), static_cast<unsigned>(n))) -
        Rational(n - 1, 2) * Rational(factorial(n));
    INFO("n=" << n);
    CHECK(alternating_power_sum(n) == expect);
  }
}

TEST_CASE("telescoped double sum collapses") {
  // the inner geometric-style sum telescopes against the binomial weights
  for (int n = 2; n <= 12; ++n) {
    const Rational expect = Rational(factorial(n)) * Rational(n - 1) -
                            Rational(n - 1, 2) * Rational(factorial(n)) * harmonic_number(n);
    INFO("n=" << n);
    CHECK(telescoped_power_double_sum(n) == expect);
  }
}

TEST_CASE("the staged derivation lands on the closed form") {
  for (int n = 2; n <= 30; ++n) {
    const DerivationTrace trace = log_gamma_by_parts(n);
    INFO("n=" << n);
    CHECK(trace.final == log_gamma_closed_form(n));
  }
  // the assembly is exact, so it holds far beyond the numeric range too
  CHECK(log_gamma_by_parts(200).final == log_gamma_closed_form(200));
}

TEST_CASE("trace components are internally consistent") {
  for (int n = 2; n <= 20; ++n) {
    const DerivationTrace t = log_gamma_by_parts(n);
    INFO("n=" << n);
    CHECK(t.n == n);
    CHECK(t.remainder_lower + t.remainder_upper == t.rational_remainder);
    CHECK(t.prefix_log_integral ==
          t.log_boundary - from_rational(t.rational_remainder));
  }
  CHECK_THROWS_AS(log_gamma_by_parts(1), std::invalid_argument);
}
