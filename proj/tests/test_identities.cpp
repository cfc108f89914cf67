#include <catch2/catch_amalgamated.hpp>

#include "cubered/identities.hpp"

using namespace cubered;

// Small hand-checked instances first, then the systematic sweeps the library
// itself provides.

TEST_CASE("alternating prefix collapses to a single binomial") {
  // n = 4, m = 2: 1 - 4 + 6 = 3 = C(3,2).
  CHECK(check_identity(IdentityId::alternating_prefix, 4, Rational(2)).pass);
  Rational lhs = 0;
  for (int i = 0; i <= 2; ++i) lhs += Rational((i % 2 ? -1 : 1) * binomial(4, i));
  CHECK(lhs == Rational(3));
}

TEST_CASE("n-th difference of an n-th power is n factorial") {
  // n = 2 at x = 0: (x+2)^2 - 2(x+1)^2 + x^2 = 2.
  CHECK(check_identity(IdentityId::difference_power_factorial, 2, Rational(0)).pass);
  CHECK(check_identity(IdentityId::difference_power_factorial, 7, Rational(-3, 2)).pass);
}

TEST_CASE("difference of degree n+1 leaves a linear factor") {
  CHECK(check_identity(IdentityId::difference_power_linear, 3, Rational(5)).pass);
  CHECK(check_identity(IdentityId::difference_power_linear, 6).pass);  // sweeps defaults
}

TEST_CASE("alternating binomial over k gives the harmonic number") {
  // n = 3: 3 - 3/2 + 1/3 = 11/6 = H_3.
  Rational lhs = 0;
  for (int k = 1; k <= 3; ++k) {
    Rational term(binomial(3, k), k);
    if (k % 2 == 0) term = -term;
    lhs += term;
  }
  CHECK(lhs == harmonic_number(3));
  CHECK(check_identity(IdentityId::alternating_harmonic, 3).pass);
  CHECK(check_identity(IdentityId::alternating_harmonic, 25).pass);
}

TEST_CASE("truncated log series identity at rational points") {
  CHECK(check_identity(IdentityId::truncated_log_series, 5, Rational(1, 3)).pass);
  CHECK(check_identity(IdentityId::truncated_log_series, 9).pass);
}

TEST_CASE("differences annihilate low-degree polynomials") {
  const Poly low({Rational(4), Rational(-7, 3), Rational(1)});  // degree 2
  CHECK(check_identity(IdentityId::difference_annihilation, 3, low).pass);
  CHECK(check_identity(IdentityId::difference_annihilation, 5, low).pass);
  // degree must stay below n
  CHECK_THROWS_AS(check_identity(IdentityId::difference_annihilation, 2, low),
                  std::invalid_argument);
  // and the scalar-argument overload refuses this identity outright
  CHECK_THROWS_AS(check_identity(IdentityId::difference_annihilation, 4),
                  std::invalid_argument);
}

TEST_CASE("identity names round trip") {
  for (IdentityId id : kAllIdentities) {
    CHECK(identity_from_name(identity_name(id)) == id);
  }
  CHECK(identity_name(IdentityId::alternating_harmonic) == "alternating-harmonic");
  CHECK_FALSE(identity_from_name("no-such-identity").has_value());
}

TEST_CASE("full suite sweeps cleanly to n = 30") {
  const auto reports = identity_suite(30);
  REQUIRE(reports.size() == kAllIdentities.size());
  for (const IdentityReport& report : reports) {
    INFO(identity_name(report.id));
    CHECK(report.pass);
    CHECK(report.n_hi == 30);
  }
}

TEST_CASE("out-of-range arguments are rejected") {
  CHECK_THROWS_AS(check_identity(IdentityId::alternating_prefix, 4, Rational(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_identity(IdentityId::alternating_prefix, 0, Rational(0)),
                  std::invalid_argument);
}
