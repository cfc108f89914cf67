#pragma once

#include <stdexcept>
#include <vector>

#include "cubered/rational.hpp"

namespace cubered {

inline Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// C(n, k) for integer n >= 0; zero outside 0 <= k <= n.
inline Integer binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;  // exact: c is a binomial coefficient after every step
  }
  return c;
}

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
inline Rational harmonic_number(int n) {
  if (n < 0) throw std::invalid_argument("harmonic_number: n must be >= 0");
  Rational h = 0;
  for (int i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

/// Eulerian number <n, k>: permutations of {1..n} with exactly k descents.
/// Standard triangle recurrence.
inline Integer eulerian_number(int n, int k) {
  if (n < 0) throw std::invalid_argument("eulerian_number: n must be >= 0");
  if (n == 0) return k == 0 ? Integer(1) : Integer(0);
  if (k < 0 || k >= n) return 0;
  std::vector<Integer> row{1};  // row for n = 1
  for (int m = 2; m <= n; ++m) {
    std::vector<Integer> next(m, 0);
    for (int j = 0; j < m; ++j) {
      const Integer left = (j > 0 && j - 1 < m - 1) ? row[j - 1] : Integer(0);
      const Integer same = (j < m - 1) ? row[j] : Integer(0);
      next[j] = (j + 1) * same + (m - j) * left;
    }
    row = std::move(next);
  }
  return row[k];
}

/// Number of ways to write `total` as an ordered sum of `parts` integers,
/// each in [1, max_part]. Plain recursion; used as an independent counting
/// oracle, so it intentionally avoids any binomial shortcut.
inline Integer bounded_composition_count(int parts, long long total, long long max_part) {
  if (parts < 0) throw std::invalid_argument("bounded_composition_count: parts must be >= 0");
  if (parts == 0) return total == 0 ? Integer(1) : Integer(0);
  if (total < parts || total > parts * max_part) return 0;
  Integer count = 0;
  for (long long first = 1; first <= max_part; ++first)
    count += bounded_composition_count(parts - 1, total - first, max_part);
  return count;
}

}  // namespace cubered
