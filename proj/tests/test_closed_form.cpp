#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cubered/closed_form.hpp"

using namespace cubered;

TEST_CASE("symbolic values for the first dimensions") {
  const ClosedFormValue i1 = log_gamma_closed_form(1);
  CHECK(i1.constant == Rational(0));
  CHECK(i1.pi_log_coeff == Rational(1, 2));
  REQUIRE(i1.prime_log_coeffs.count(2) == 1);
  CHECK(i1.prime_log_coeffs.at(2) == Rational(1, 2));
  CHECK(to_string(i1) == "1/2·logπ + 1/2·log2");

  CHECK(to_string(log_gamma_closed_form(2)) == "-3/4 + 1/2·logπ + 1/2·log2");
  CHECK(to_string(log_gamma_closed_form(3)) == "-11/6 + 1/2·logπ + 11/6·log2");
  CHECK(to_string(log_gamma_closed_form(4)) ==
        "-25/8 + 1/2·logπ - 3/2·log2 + 27/8·log3");
}

TEST_CASE("decimal rendering at requested precision") {
  CHECK(decimal_value(log_gamma_closed_form(1), 10) == "0.9189385332");
  CHECK(decimal_value(log_gamma_closed_form(2), 10) == "0.1689385332");
  CHECK(decimal_value(log_gamma_closed_form(2), 4) == "0.1689");
  CHECK_THROWS_AS(decimal_value(log_gamma_closed_form(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(decimal_value(log_gamma_closed_form(2), 51), std::invalid_argument);
}

TEST_CASE("value arithmetic mirrors the symbols") {
  ClosedFormValue a = log_gamma_closed_form(2);
  const ClosedFormValue b = log_gamma_closed_form(3);
  ClosedFormValue sum = a;
  sum += b;
  const double expect = to_double(a) + to_double(b);
  CHECK(to_double(sum) == Catch::Approx(expect).epsilon(1e-15));
  sum -= b;
  CHECK(sum == a);
  a *= Rational(0);
  CHECK(a == ClosedFormValue{});
}

TEST_CASE("log coefficients live on primes only") {
  for (int n : {5, 9, 16, 25, 60}) {
    const ClosedFormValue v = log_gamma_closed_form(n);
    for (const auto& [p, coeff] : v.prime_log_coeffs) {
      INFO("n=" << n << " p=" << p);
      CHECK(coeff != 0);
      bool prime = p >= 2;
      for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      CHECK(prime);
    }
  }
}

TEST_CASE("composite logs split into prime parts") {
  // log 12 = 2 log 2 + log 3
  const ClosedFormValue v = log_of_integer(12);
  CHECK(v.constant == 0);
  CHECK(v.pi_log_coeff == 0);
  CHECK(v.prime_log_coeffs.at(2) == Rational(2));
  CHECK(v.prime_log_coeffs.at(3) == Rational(1));
  CHECK_THROWS_AS(log_of_integer(0), std::invalid_argument);
}

TEST_CASE("big-float evaluation agrees with double math") {
  for (int n = 1; n <= 20; ++n) {
    const double v = to_double(log_gamma_closed_form(n));
    CHECK(std::isfinite(v));
  }
  // half_log_two_pi is the n=1 value
  CHECK(to_double(half_log_two_pi()) == Catch::Approx(0.5 * std::log(2 * 3.14159265358979323846)));
}

TEST_CASE("large n stays exact through the alternating sum") {
  // The summands reach ~1e180 at n = 200 while the result is ~360; exactness
  // of the rational bookkeeping is what makes the decimal printable at all.
  const ClosedFormValue v = log_gamma_closed_form(200);
  const std::string rendered = decimal_value(v, 12);
  CHECK(rendered.substr(0, 6) == "359.21");
  const double numeric = to_double(v);
  CHECK(numeric == Catch::Approx(359.218027347905).epsilon(1e-12));
}
