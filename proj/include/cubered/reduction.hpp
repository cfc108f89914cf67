#pragma once

#include <stdexcept>
#include <vector>

#include "cubered/combinatorics.hpp"
#include "cubered/poly.hpp"
#include "cubered/rational.hpp"

namespace cubered {

// The integral of f(x_1 + ... + x_n) over the unit cube [0,1]^n collapses to
// one dimension: slicing by the integer part of the coordinate sum gives
//
//   integral = 1/(n-1)! * sum_{m=1..n} int_0^1 w_{n,m}(t) f(t + m - 1) dt,
//
// where w_{n,m} is a degree-(n-1) polynomial weight for the slab
// m-1 <= x_1+...+x_n <= m. This header computes those weights exactly.

namespace detail {
inline void check_n(int n, const char* where) {
  if (n < 1) throw std::invalid_argument(std::string(where) + ": n must be >= 1");
}
inline void check_shell(int n, int m, const char* where) {
  check_n(n, where);
  if (m < 1 || m > n)
    throw std::invalid_argument(std::string(where) + ": shell index must be in [1, n]");
}
}  // namespace detail

/// Weight of shell m in n dimensions, by the closed alternating-binomial sum
///   w_{n,m}(t) = sum_{i=1..m} (-1)^(i-1) C(n, i-1) (t + m - i)^(n-1).
inline Poly weight_poly(int n, int m) {
  detail::check_shell(n, m, "weight_poly");
  Poly w;
  for (int i = 1; i <= m; ++i) {
    Poly term = Rational(binomial(n, i - 1)) * shifted_power(m - i, n - 1);
    if (i % 2 == 0)
      w -= term;
    else
      w += term;
  }
  return w;
}

/// Same weights built the other way about: peel lower shells off the plain
/// power (t + m - 1)^(n-1),
///   w_{n,m} = (t + m - 1)^(n-1) - sum_{i<m} C(n + m - i - 1, n - 1) w_{n,i}.
/// Kept as an independent construction for cross-checking.
inline std::vector<Poly> weight_polys_recursive(int n) {
  detail::check_n(n, "weight_polys_recursive");
  std::vector<Poly> w;
  w.reserve(static_cast<size_t>(n));
  for (int m = 1; m <= n; ++m) {
    Poly g = shifted_power(m - 1, n - 1);
    for (int i = 1; i < m; ++i)
      g -= Rational(binomial(n + m - i - 1, n - 1)) * w[static_cast<size_t>(i - 1)];
    w.push_back(std::move(g));
  }
  return w;
}

inline Poly weight_poly_recursive(int n, int m) {
  detail::check_shell(n, m, "weight_poly_recursive");
  return weight_polys_recursive(n)[static_cast<size_t>(m - 1)];
}

/// One slab of the reduced integral: weight(t) * f(t + shift) on t in [0,1].
struct Shell {
  int index = 0;  // 1-based shell number m
  int shift = 0;  // m - 1
  Poly weight;
};

struct ReductionPlan {
  int n = 0;
  Rational prefactor;  // 1/(n-1)!
  std::vector<Shell> shells;
};

inline ReductionPlan reduction_plan(int n) {
  detail::check_n(n, "reduction_plan");
  ReductionPlan plan;
  plan.n = n;
  plan.prefactor = Rational(1, factorial(n - 1));
  plan.shells.reserve(static_cast<size_t>(n));
  for (int m = 1; m <= n; ++m) plan.shells.push_back({m, m - 1, weight_poly(n, m)});
  return plan;
}

/// Fraction of the cube volume carried by shell m; these sum to 1.
inline Rational shell_volume(int n, int m) {
  detail::check_shell(n, m, "shell_volume");
  return integrate_01(weight_poly(n, m)) / Rational(factorial(n - 1));
}

/// sum_{m=1..k} w_{n,m} collapsed into a single binomial sum:
///   sum_{m=1..k} C(n-1, k-m) (-1)^(k-m) (t + m - 1)^(n-1).
inline Poly weight_prefix_sum(int n, int k) {
  detail::check_shell(n, k, "weight_prefix_sum");
  Poly s;
  for (int m = 1; m <= k; ++m) {
    Poly term = Rational(binomial(n - 1, k - m)) * shifted_power(m - 1, n - 1);
    if ((k - m) % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

/// sum_{m=k..n} w_{n,m} = (n-1)! - weight_prefix_sum(n, k-1).
inline Poly weight_suffix_sum(int n, int k) {
  detail::check_shell(n, k, "weight_suffix_sum");
  Poly s = Poly::constant(Rational(factorial(n - 1)));
  if (k > 1) s -= weight_prefix_sum(n, k - 1);
  return s;
}

}  // namespace cubered
