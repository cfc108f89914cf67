#pragma once

#include <stdexcept>

#include "cubered/poly.hpp"
#include "cubered/rational.hpp"
#include "cubered/reduction.hpp"

namespace cubered {

/// Exact integral of p(x_1 + ... + x_n) over the unit cube, computed WITHOUT
/// any reduction machinery: integrate out one variable at a time,
///   int_0^1 q(s + x) dx = Q(s + 1) - Q(s)  with Q' = q,
/// and read off the constant that remains after n passes. Serves as the
/// independent oracle the reduction is checked against.
inline Rational poly_cube_integral(int n, const Poly& p) {
  if (n < 1) throw std::invalid_argument("poly_cube_integral: n must be >= 1");
  Poly q = p;
  for (int i = 0; i < n; ++i) {
    const Poly antider = q.antiderivative();
    q = antider.shifted_argument(1) - antider;
  }
  return q(Rational(0));
}

/// The same integral through the reduction plan, entirely in exact
/// arithmetic: prefactor * sum_m int_0^1 w_m(t) p(t + m - 1) dt.
inline Rational poly_cube_via_plan(int n, const Poly& p) {
  if (n < 1) throw std::invalid_argument("poly_cube_via_plan: n must be >= 1");
  const ReductionPlan plan = reduction_plan(n);
  Rational sum = 0;
  for (const Shell& shell : plan.shells)
    sum += integrate_01(shell.weight * p.shifted_argument(Rational(shell.shift)));
  return plan.prefactor * sum;
}

}  // namespace cubered
