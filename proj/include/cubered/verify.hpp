#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cubered/closed_form.hpp"
#include "cubered/defining_sums.hpp"
#include "cubered/derivation.hpp"
#include "cubered/exact_cube.hpp"
#include "cubered/identities.hpp"
#include "cubered/monte_carlo.hpp"
#include "cubered/quadrature.hpp"
#include "cubered/reduction.hpp"

namespace cubered {

struct VerifyCheck {
  std::string name;
  bool pass = true;
  std::string detail;  // witness on failure, short summary on success
};

namespace detail {

inline void record(std::vector<VerifyCheck>& checks, std::string name, bool pass,
                   std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

inline std::string range_label(int lo, int hi) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace detail

/// The six exact combinatorial identities, swept over n in [1, n_max].
inline std::vector<VerifyCheck> verify_identities(int n_max, std::uint64_t seed = 0x5eed) {
  std::vector<VerifyCheck> checks;
  for (const IdentityId id : kAllIdentities) {
    const IdentityReport report = check_identity_range(id, 1, n_max, seed);
    detail::record(checks, std::string(identity_name(id)), report.pass,
                   report.pass ? detail::range_label(1, n_max) : report.first_failure);
  }
  return checks;
}

/// Structural properties of the weight polynomials, swept over n in [1, n_max].
inline std::vector<VerifyCheck> verify_reduction(int n_max) {
  std::vector<VerifyCheck> checks;
  const std::string swept = detail::range_label(1, n_max);

  {  // the closed alternating sum and the peeling recursion build equal weights
    bool pass = true;
    std::string witness = swept;
    for (int n = 1; n <= n_max && pass; ++n) {
      const std::vector<Poly> recursive = weight_polys_recursive(n);
      for (int m = 1; m <= n && pass; ++m) {
        if (weight_poly(n, m) != recursive[static_cast<size_t>(m - 1)]) {
          pass = false;
          witness = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        }
      }
    }
    detail::record(checks, "closed-vs-recursive", pass, witness);
  }

  {  // shell weights partition (n-1)! exactly
    bool pass = true;
    std::string witness = swept;
    for (int n = 1; n <= n_max && pass; ++n) {
      Poly sum;
      for (int m = 1; m <= n; ++m) sum += weight_poly(n, m);
      if (sum != Poly::constant(Rational(factorial(n - 1)))) {
        pass = false;
        witness = "n=" + std::to_string(n) + ": sum = " + to_string(sum);
      }
    }
    detail::record(checks, "weight-partition", pass, witness);
  }

  {  // reversing the shell order is the reflection t -> 1-t
    bool pass = true;
    std::string witness = swept;
    for (int n = 1; n <= n_max && pass; ++n) {
      for (int m = 1; m <= n && pass; ++m) {
        // w_{n,n+1-m}(1-t), expanded exactly
        Poly reflected;
        const Poly& opposite = weight_poly(n, n + 1 - m);
        for (int i = 0; i <= opposite.degree(); ++i) {
          reflected += opposite.coeff(i) * shifted_power(Rational(-1), i) *
                       Rational((i % 2 == 0) ? 1 : -1);
        }
        if (reflected != weight_poly(n, m)) {
          pass = false;
          witness = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        }
      }
    }
    detail::record(checks, "reflection-symmetry", pass, witness);
  }

  {  // weights are nonnegative on a 1/256-spaced grid of [0,1]
    bool pass = true;
    std::string witness = swept;
    for (int n = 1; n <= n_max && pass; ++n) {
      for (int m = 1; m <= n && pass; ++m) {
        const Poly w = weight_poly(n, m);
        for (int g = 0; g <= 256; ++g) {
          if (w(Rational(g, 256)) < 0) {
            pass = false;
            witness = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " t=" +
                      std::to_string(g) + "/256";
            break;
          }
        }
      }
    }
    detail::record(checks, "weight-nonnegativity", pass, witness);
  }

  {  // shell volumes are Eulerian numbers over n!
    bool pass = true;
    std::string witness = swept;
    for (int n = 1; n <= n_max && pass; ++n) {
      for (int m = 1; m <= n && pass; ++m) {
        if (shell_volume(n, m) != Rational(eulerian_number(n, m - 1), factorial(n))) {
          pass = false;
          witness = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        }
      }
    }
    detail::record(checks, "eulerian-volumes", pass, witness);
  }

  {  // recursion coefficients count bounded compositions (checked for n+m small)
    bool pass = true;
    std::string witness = "n+m<=" + std::to_string(std::min(n_max + 1, 12));
    for (int n = 1; n <= n_max && pass; ++n) {
      for (int m = 1; n + m <= 12 && m <= n && pass; ++m) {
        for (int s = 1; s <= m && pass; ++s) {
          const long long total = m + n - s;
          if (binomial(m + n - s - 1, n - 1) !=
              bounded_composition_count(n, total, total - n + 1)) {
            pass = false;
            witness = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " s=" + std::to_string(s);
          }
        }
      }
    }
    detail::record(checks, "composition-coefficients", pass, witness);
  }

  return checks;
}

/// Exact and numeric checks of the log-gamma closed form, swept over n.
inline std::vector<VerifyCheck> verify_loggamma(int n_max, std::uint64_t seed = 0x5eed) {
  std::vector<VerifyCheck> checks;

  {  // final formula == by-parts assembly, exactly
    bool pass = true;
    std::string witness = detail::range_label(2, n_max);
    for (int n = 2; n <= n_max && pass; ++n) {
      if (!(log_gamma_by_parts(n).final == log_gamma_closed_form(n))) {
        pass = false;
        witness = "n=" + std::to_string(n);
      }
    }
    detail::record(checks, "two-path-agreement", pass, witness);
  }

  const int oracle_hi = std::min(n_max, 10);
  {  // closed forms of the by-parts pieces vs their defining sums
    bool pass = true;
    std::string witness = detail::range_label(2, oracle_hi);
    for (int n = 2; n <= oracle_hi && pass; ++n) {
      if (!(log_boundary_total(n) == log_boundary_total_direct(n)) ||
          rational_remainder_total(n) != rational_remainder_total_direct(n) ||
          remainder_lower_part(n) != remainder_lower_part_direct(n) ||
          remainder_upper_part(n) != remainder_upper_part_direct(n)) {
        pass = false;
        witness = "n=" + std::to_string(n);
      }
    }
    detail::record(checks, "defining-sum-oracles", pass, witness);
  }

  {  // the two remainder components recombine exactly
    bool pass = true;
    std::string witness = detail::range_label(2, n_max);
    for (int n = 2; n <= n_max && pass; ++n) {
      if (remainder_lower_part(n) + remainder_upper_part(n) != rational_remainder_total(n)) {
        pass = false;
        witness = "n=" + std::to_string(n);
      }
    }
    detail::record(checks, "remainder-split", pass, witness);
  }

  {  // alternating power sum identity
    bool pass = true;
    std::string witness = detail::range_label(2, n_max);
    for (int n = 2; n <= n_max && pass; ++n) {
      const Rational rhs = Rational(int_pow(Integer(n - 1), static_cast<unsigned>(n))) -
                           Rational(n - 1, 2) * Rational(factorial(n));
      if (alternating_power_sum(n) != rhs) {
        pass = false;
        witness = "n=" + std::to_string(n);
      }
    }
    detail::record(checks, "power-sum-identity", pass, witness);
  }

  {  // telescoped double sum identity
    bool pass = true;
    std::string witness = detail::range_label(2, std::min(n_max, 12));
    for (int n = 2; n <= std::min(n_max, 12) && pass; ++n) {
      const Rational rhs = Rational(factorial(n)) * Rational(n - 1) -
                           Rational(n - 1, 2) * Rational(factorial(n)) * harmonic_number(n);
      if (telescoped_power_double_sum(n) != rhs) {
        pass = false;
        witness = "n=" + std::to_string(n);
      }
    }
    detail::record(checks, "double-sum-identity", pass, witness);
  }

  {  // quadrature of the reduced form lands on the symbolic value
    bool pass = true;
    std::string witness = detail::range_label(1, oracle_hi) + " within 1e-10";
    for (int n = 1; n <= oracle_hi && pass; ++n) {
      const double target = to_double(log_gamma_closed_form(n));
      const NumericReport numeric = integrate_reduced(n, Integrand::log_gamma_fn());
      const double gap = std::abs(numeric.value - target);
      if (!(gap <= 1e-10)) {
        pass = false;
        witness = "n=" + std::to_string(n) + " gap=" + std::to_string(gap);
      }
    }
    detail::record(checks, "closed-vs-quadrature", pass, witness);
  }

  {  // Monte Carlo lands within 4 standard errors of the symbolic value
    bool pass = true;
    const int mc_hi = std::min(n_max, 6);
    std::string witness = detail::range_label(1, mc_hi) + " within 4 standard errors";
    for (int n = 1; n <= mc_hi && pass; ++n) {
      const double target = to_double(log_gamma_closed_form(n));
      const NumericReport mc =
          mc_cube(n, Integrand::log_gamma_fn(), 1000000, seed);
      const double gap = std::abs(mc.value - target);
      if (!(gap <= 4.0 * mc.error_estimate)) {
        pass = false;
        witness = "n=" + std::to_string(n) + " gap=" + std::to_string(gap) + " stderr=" +
                  std::to_string(mc.error_estimate);
      }
    }
    detail::record(checks, "closed-vs-montecarlo", pass, witness);
  }

  return checks;
}

}  // namespace cubered
