#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubered/combinatorics.hpp"
#include "cubered/poly.hpp"
#include "cubered/rational.hpp"
#include "cubered/rng.hpp"

namespace cubered {

// The combinatorial identities the closed-form evaluation leans on. Each is
// checked in exact arithmetic; the suite exists so a change to the
// combinatorics layer cannot silently break the symbolic results.
enum class IdentityId {
  alternating_prefix,           // sum_{i=0..m} (-1)^i C(n,i) = (-1)^m C(n-1,m)
  difference_power_factorial,   // sum_{k=0..n} (-1)^k C(n,k) (x+n-k)^n = n!
  difference_power_linear,      // sum_{k=0..n} (-1)^k C(n,k) (x-k)^(n+1) = (x - n/2) (n+1)!
  alternating_harmonic,         // sum_{k=1..n} (-1)^(k+1)/k C(n,k) = H_n
  truncated_log_series,         // sum_{k=1..n} (-1)^(k+1)/k C(n,k) [1-(1-x)^k] = sum x^k/k
  difference_annihilation,      // sum_{k=0..n} (-1)^k C(n,k) P(k) = 0 when deg P < n
};

inline constexpr std::array<IdentityId, 6> kAllIdentities = {
    IdentityId::alternating_prefix,         IdentityId::difference_power_factorial,
    IdentityId::difference_power_linear,    IdentityId::alternating_harmonic,
    IdentityId::truncated_log_series,       IdentityId::difference_annihilation,
};

inline std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::alternating_prefix: return "alternating-prefix";
    case IdentityId::difference_power_factorial: return "difference-power-factorial";
    case IdentityId::difference_power_linear: return "difference-power-linear";
    case IdentityId::alternating_harmonic: return "alternating-harmonic";
    case IdentityId::truncated_log_series: return "truncated-log-series";
    case IdentityId::difference_annihilation: return "difference-annihilation";
  }
  throw std::invalid_argument("identity_name: unknown identity id");
}

inline std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (const IdentityId id : kAllIdentities)
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

struct IdentityOutcome {
  bool pass = true;
  std::string witness;  // empty on pass; "n=.. m=.. lhs=.. rhs=.." on failure
};

/// Rational x values used when the caller does not supply one. Five distinct
/// points; every identity with a free x is degree <= n in x and is,
/// additionally, exercised across many n, so a coincidental root at all five
/// points is not a live risk.
inline const std::vector<Rational>& default_sample_points() {
  static const std::vector<Rational> kPoints = {Rational(-2), Rational(-1, 2), Rational(0),
                                                Rational(1, 3), Rational(5)};
  return kPoints;
}

namespace detail {

inline IdentityOutcome fail_witness(int n, const std::string& params, const Rational& lhs,
                                    const Rational& rhs) {
  return {false, "n=" + std::to_string(n) + (params.empty() ? "" : " " + params) +
                     ": lhs=" + to_string(lhs) + " rhs=" + to_string(rhs)};
}

inline IdentityOutcome check_alternating_prefix(int n, int m) {
  Rational lhs = 0;
  for (int i = 0; i <= m; ++i) {
    const Rational term(binomial(n, i));
    lhs += (i % 2 == 0) ? term : -term;
  }
  Rational rhs(binomial(n - 1, m));
  if (m % 2 != 0) rhs = -rhs;
  if (lhs == rhs) return {};
  return fail_witness(n, "m=" + std::to_string(m), lhs, rhs);
}

inline IdentityOutcome check_difference_power_factorial(int n, const Rational& x) {
  Rational lhs = 0;
  for (int k = 0; k <= n; ++k) {
    const Rational term = Rational(binomial(n, k)) *
                          rational_pow(x + Rational(n - k), static_cast<unsigned>(n));
    lhs += (k % 2 == 0) ? term : -term;
  }
  const Rational rhs(factorial(n));
  if (lhs == rhs) return {};
  return fail_witness(n, "x=" + to_string(x), lhs, rhs);
}

inline IdentityOutcome check_difference_power_linear(int n, const Rational& x) {
  Rational lhs = 0;
  for (int k = 0; k <= n; ++k) {
    const Rational term =
        Rational(binomial(n, k)) * rational_pow(x - Rational(k), static_cast<unsigned>(n) + 1);
    lhs += (k % 2 == 0) ? term : -term;
  }
  const Rational rhs = (x - Rational(n, 2)) * Rational(factorial(n + 1));
  if (lhs == rhs) return {};
  return fail_witness(n, "x=" + to_string(x), lhs, rhs);
}

inline IdentityOutcome check_alternating_harmonic(int n) {
  Rational lhs = 0;
  for (int k = 1; k <= n; ++k) {
    const Rational term = Rational(binomial(n, k)) / Rational(k);
    lhs += (k % 2 != 0) ? term : -term;
  }
  const Rational rhs = harmonic_number(n);
  if (lhs == rhs) return {};
  return fail_witness(n, "", lhs, rhs);
}

inline IdentityOutcome check_truncated_log_series(int n, const Rational& x) {
  Rational lhs = 0;
  for (int k = 1; k <= n; ++k) {
    const Rational term = Rational(binomial(n, k)) / Rational(k) *
                          (Rational(1) - rational_pow(Rational(1) - x, static_cast<unsigned>(k)));
    lhs += (k % 2 != 0) ? term : -term;
  }
  Rational rhs = 0;
  for (int k = 1; k <= n; ++k) rhs += rational_pow(x, static_cast<unsigned>(k)) / Rational(k);
  if (lhs == rhs) return {};
  return fail_witness(n, "x=" + to_string(x), lhs, rhs);
}

}  // namespace detail

/// Exact check of one identity instance. `aux` is the free parameter where
/// the identity has one: the prefix length m for alternating-prefix (must be
/// an integer in [0, n]; all m are checked when absent) and the sample point
/// x for the two power-difference identities and the log-series transform
/// (the default sample set is swept when absent).
inline IdentityOutcome check_identity(IdentityId id, int n,
                                      const std::optional<Rational>& aux = std::nullopt) {
  if (n < 1) throw std::invalid_argument("check_identity: n must be >= 1");
  switch (id) {
    case IdentityId::alternating_prefix: {
      if (aux) {
        if (denominator(*aux) != 1 || *aux < 0 || *aux > n)
          throw std::invalid_argument(
              "check_identity: alternating-prefix needs an integer prefix length in [0, n]");
        return detail::check_alternating_prefix(n, static_cast<int>(numerator(*aux)));
      }
      for (int m = 0; m <= n; ++m)
        if (auto r = detail::check_alternating_prefix(n, m); !r.pass) return r;
      return {};
    }
    case IdentityId::difference_power_factorial:
    case IdentityId::difference_power_linear:
    case IdentityId::truncated_log_series: {
      const auto check_at = [id, n](const Rational& x) {
        switch (id) {
          case IdentityId::difference_power_factorial:
            return detail::check_difference_power_factorial(n, x);
          case IdentityId::difference_power_linear:
            return detail::check_difference_power_linear(n, x);
          default:
            return detail::check_truncated_log_series(n, x);
        }
      };
      if (aux) return check_at(*aux);
      for (const Rational& x : default_sample_points())
        if (auto r = check_at(x); !r.pass) return r;
      return {};
    }
    case IdentityId::alternating_harmonic:
      return detail::check_alternating_harmonic(n);
    case IdentityId::difference_annihilation:
      throw std::invalid_argument(
          "check_identity: difference-annihilation needs a polynomial argument");
  }
  throw std::invalid_argument("check_identity: unknown identity id");
}

/// Exact check of sum_{k=0..n} (-1)^k C(n,k) p(k) = 0. Rejects deg p >= n,
/// where the sum is genuinely nonzero rather than the identity failing.
inline IdentityOutcome check_identity(IdentityId id, int n, const Poly& p) {
  if (id != IdentityId::difference_annihilation)
    throw std::invalid_argument("check_identity: only difference-annihilation takes a polynomial");
  if (n < 1) throw std::invalid_argument("check_identity: n must be >= 1");
  if (p.degree() >= n)
    throw std::invalid_argument("check_identity: polynomial degree must be < n");
  Rational lhs = 0;
  for (int k = 0; k <= n; ++k) {
    const Rational term = Rational(binomial(n, k)) * p(Rational(k));
    lhs += (k % 2 == 0) ? term : -term;
  }
  if (lhs == 0) return {};
  return detail::fail_witness(n, "p=" + to_string(p), lhs, Rational(0));
}

struct IdentityReport {
  IdentityId id{};
  int n_lo = 1;
  int n_hi = 1;
  bool pass = true;
  std::string first_failure;  // empty when pass
};

/// Checks one identity across n in [n_lo, n_hi]; parameterized identities
/// sweep the default sample set, and difference-annihilation draws three
/// seeded random polynomials of degree n-1 per n.
inline IdentityReport check_identity_range(IdentityId id, int n_lo, int n_hi,
                                           std::uint64_t seed = 0x5eed) {
  if (n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("check_identity_range: need 1 <= n_lo <= n_hi");
  IdentityReport report{id, n_lo, n_hi, true, ""};
  std::uint64_t counter = seed;
  for (int n = n_lo; n <= n_hi && report.pass; ++n) {
    IdentityOutcome outcome;
    if (id == IdentityId::difference_annihilation) {
      for (int trial = 0; trial < 3 && outcome.pass; ++trial) {
        std::vector<Rational> coeffs(static_cast<size_t>(n));
        for (auto& c : coeffs) {
          const std::uint64_t bits = mix_u64(counter++);
          const int num = static_cast<int>(bits % 19) - 9;
          const int den = static_cast<int>((bits >> 8) % 3) + 1;
          c = Rational(num, den);
        }
        outcome = check_identity(id, n, Poly(std::move(coeffs)));
      }
    } else {
      outcome = check_identity(id, n);
    }
    if (!outcome.pass) {
      report.pass = false;
      report.first_failure = outcome.witness;
    }
  }
  return report;
}

inline std::vector<IdentityReport> identity_suite(int n_max, std::uint64_t seed = 0x5eed) {
  std::vector<IdentityReport> reports;
  reports.reserve(kAllIdentities.size());
  for (const IdentityId id : kAllIdentities)
    reports.push_back(check_identity_range(id, 1, n_max, seed));
  return reports;
}

}  // namespace cubered
