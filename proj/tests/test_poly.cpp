#include <catch2/catch_amalgamated.hpp>

#include "cubered/poly.hpp"

using namespace cubered;

TEST_CASE("polynomial arithmetic basics") {
  const Poly p({Rational(1), Rational(-2), Rational(1)});  // 1 - 2t + t^2
  const Poly q({Rational(0), Rational(1)});                // t
  CHECK(p.degree() == 2);
  CHECK(q.degree() == 1);
  CHECK((p + q).coeff(1) == Rational(-1));
  CHECK((p * q).degree() == 3);
  CHECK(p(Rational(1)) == Rational(0));
  CHECK(p(Rational(3)) == Rational(4));
}

TEST_CASE("zero polynomial conventions") {
  const Poly zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.coeff(0) == Rational(0));
  CHECK(zero(Rational(5)) == Rational(0));
  const Poly cancelled = Poly({Rational(1)}) - Poly({Rational(1)});
  CHECK(cancelled.degree() == -1);
}

TEST_CASE("argument shift expands binomially") {
  const Poly p({Rational(0), Rational(0), Rational(1)});  // t^2
  const Poly shifted = p.shifted_argument(Rational(1));   // (t+1)^2
  CHECK(shifted.coeff(0) == Rational(1));
  CHECK(shifted.coeff(1) == Rational(2));
  CHECK(shifted.coeff(2) == Rational(1));
  // shift by -1 undoes shift by +1
  CHECK(shifted.shifted_argument(Rational(-1)) == p);
}

TEST_CASE("shifted_power matches manual expansion") {
  const Poly cube = shifted_power(Rational(2), 3);  // (t+2)^3
  CHECK(cube.coeff(0) == Rational(8));
  CHECK(cube.coeff(1) == Rational(12));
  CHECK(cube.coeff(2) == Rational(6));
  CHECK(cube.coeff(3) == Rational(1));
}

TEST_CASE("derivative and antiderivative invert") {
  const Poly p({Rational(3), Rational(-1, 2), Rational(0), Rational(5, 7)});
  CHECK(p.antiderivative().derivative() == p);
  CHECK(p.antiderivative().coeff(0) == Rational(0));
}

TEST_CASE("unit interval integration") {
  const Poly p({Rational(1), Rational(2), Rational(-2)});  // 1 + 2t - 2t^2
  CHECK(integrate_01(p) == Rational(4, 3));
  CHECK(integrate_01(Poly()) == Rational(0));
  CHECK(integrate_01(Poly({Rational(0), Rational(1)})) == Rational(1, 2));
}

TEST_CASE("rendering in ascending powers") {
  CHECK(to_string(Poly({Rational(1), Rational(-2), Rational(1)})) == "1 - 2*t + t^2");
  CHECK(to_string(Poly({Rational(0), Rational(1)})) == "t");
  CHECK(to_string(Poly({Rational(0), Rational(-1)})) == "-t");
  CHECK(to_string(Poly({Rational(1), Rational(-1)})) == "1 - t");
  CHECK(to_string(Poly({Rational(-1, 2), Rational(0), Rational(3, 4)})) == "-1/2 + 3/4*t^2");
  CHECK(to_string(Poly()) == "0");
}

TEST_CASE("parse_poly round trips rendering") {
  for (const std::string text :
       {"1 - 2*t + t^2", "t", "-t", "1 - t", "-1/2 + 3/4*t^2", "0", "5/3"}) {
    CHECK(to_string(parse_poly(text)) == text);
  }
  CHECK(parse_poly("t^2 + 1") == parse_poly("1 + t^2"));
  CHECK_THROWS_AS(parse_poly("1 + q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t^"), std::invalid_argument);
}
