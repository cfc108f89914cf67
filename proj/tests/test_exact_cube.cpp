#include <catch2/catch_amalgamated.hpp>

#include "cubered/exact_cube.hpp"
#include "cubered/rng.hpp"

using namespace cubered;

TEST_CASE("iterated antiderivative route on fixtures") {
  // f(s) = s over the unit square: mean of x+y is 1
  CHECK(poly_cube_integral(2, Poly({Rational(0), Rational(1)})) == Rational(1));
  // f(s) = s^2 over the unit square: 7/6
  CHECK(poly_cube_integral(2, Poly({Rational(0), Rational(0), Rational(1)})) == Rational(7, 6));
  // constants are untouched by the dimension
  CHECK(poly_cube_integral(9, Poly({Rational(5, 3)})) == Rational(5, 3));
  // linearity sanity: f(s) = 3s - 1 in dimension 4
  CHECK(poly_cube_integral(4, Poly({Rational(-1), Rational(3)})) == Rational(5));
}

TEST_CASE("independent moments of the coordinate sum") {
  // E[(x1+..+xn)^2] = n/12 + n^2/4 by direct expansion
  const Poly square({Rational(0), Rational(0), Rational(1)});
  for (int n = 1; n <= 12; ++n) {
    const Rational expect = Rational(n, 12) + Rational(n * n, 4);
    INFO("n=" << n);
    CHECK(poly_cube_integral(n, square) == expect);
  }
}

TEST_CASE("reduction plan route equals the iterated route") {
  // fixed fixtures
  CHECK(poly_cube_via_plan(2, Poly({Rational(0), Rational(0), Rational(1)})) == Rational(7, 6));
  // randomized sweep: degrees up to 6, dimensions up to 9
  std::uint64_t counter = 0x90ULL << 32;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(mix_u64(counter++) % 9);
    const int degree = static_cast<int>(mix_u64(counter++) % 7);
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
    for (auto& c : coeffs) {
      const std::uint64_t bits = mix_u64(counter++);
      c = Rational(static_cast<int>(bits % 41) - 20, static_cast<int>((bits >> 16) % 7) + 1);
    }
    const Poly p(std::move(coeffs));
    INFO("trial=" << trial << " n=" << n << " p=" << to_string(p));
    CHECK(poly_cube_integral(n, p) == poly_cube_via_plan(n, p));
  }
}

TEST_CASE("zero polynomial integrates to zero everywhere") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(poly_cube_integral(n, Poly()) == Rational(0));
    CHECK(poly_cube_via_plan(n, Poly()) == Rational(0));
  }
}

TEST_CASE("dimension validation") {
  CHECK_THROWS_AS(poly_cube_integral(0, Poly({Rational(1)})), std::invalid_argument);
  CHECK_THROWS_AS(poly_cube_via_plan(0, Poly({Rational(1)})), std::invalid_argument);
}
