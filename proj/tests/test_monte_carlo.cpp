#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cubered/closed_form.hpp"
#include "cubered/exact_cube.hpp"
#include "cubered/monte_carlo.hpp"

using namespace cubered;

TEST_CASE("constant integrand is reproduced exactly") {
  const NumericReport r = mc_cube(3, Integrand::polynomial(Poly({Rational(1)})), 100000, 1);
  CHECK(r.value == 1.0);
  CHECK(r.error_estimate == 0.0);
  CHECK(r.method == "monte-carlo");
  CHECK(r.effort == 100000);
  REQUIRE(r.seed.has_value());
  CHECK(*r.seed == 1);
}

TEST_CASE("sample mean lands within four standard errors") {
  // f(s) = s in dimension 5: exact mean 5/2
  const NumericReport r =
      mc_cube(5, Integrand::polynomial(Poly({Rational(0), Rational(1)})), 1000000, 7);
  CHECK(std::abs(r.value - 2.5) <= 4.0 * r.error_estimate);
  CHECK(r.error_estimate > 0.0);

  // log-gamma in dimension 2 against the symbolic value
  const NumericReport g = mc_cube(2, Integrand::log_gamma_fn(), 1000000, 42);
  const double expect = to_double(log_gamma_closed_form(2));
  CHECK(std::abs(g.value - expect) <= 4.0 * g.error_estimate);
}

TEST_CASE("estimates are a pure function of seed and sample count") {
  const Integrand f = Integrand::log_gamma_fn();
  const NumericReport a = mc_cube(3, f, 200000, 9);
  const NumericReport b = mc_cube(3, f, 200000, 9);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
  // a different seed must actually change the stream
  const NumericReport c = mc_cube(3, f, 200000, 10);
  CHECK(a.value != c.value);
}

TEST_CASE("thread count never changes the result") {
  // an awkward sample count: several full blocks plus a partial one
  const std::int64_t samples = 3 * 65536 + 12345;
  const Integrand f = Integrand::log_gamma_fn();
  const NumericReport serial = mc_cube(4, f, samples, 1234, 1);
  for (int threads : {2, 3, 4, 8}) {
    const NumericReport parallel = mc_cube(4, f, samples, 1234, threads);
    INFO("threads=" << threads);
    CHECK(parallel.value == serial.value);
    CHECK(parallel.error_estimate == serial.error_estimate);
  }
  // auto thread selection included
  const NumericReport auto_threads = mc_cube(4, f, samples, 1234, 0);
  CHECK(auto_threads.value == serial.value);
}

TEST_CASE("polynomial sampling agrees with the exact integral") {
  const Poly p({Rational(1), Rational(-2), Rational(0), Rational(1, 2)});
  const double exact = static_cast<double>(poly_cube_integral(3, p));
  const NumericReport r = mc_cube(3, Integrand::polynomial(p), 500000, 5);
  CHECK(std::abs(r.value - exact) <= 4.0 * r.error_estimate);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(mc_cube(0, Integrand::sine(), 100, 0), std::invalid_argument);
  CHECK_THROWS_AS(mc_cube(2, Integrand::sine(), 1, 0), std::invalid_argument);
}

TEST_CASE("open-interval sampling never hits the edges") {
  // the smallest achievable uniform is strictly positive: the log-gamma
  // integrand would blow up at exactly zero, so the first few thousand
  // draws are checked directly
  for (std::uint64_t k = 0; k < 5000; ++k) {
    const double u = uniform_open01(k);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}
