#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubered/integrand.hpp"
#include "cubered/poly.hpp"
#include "cubered/rational.hpp"
#include "cubered/reduction.hpp"

namespace cubered {

enum class QuadMethod { gauss_legendre, tanh_sinh };

inline std::string_view quad_method_name(QuadMethod m) {
  return m == QuadMethod::gauss_legendre ? "gauss-legendre" : "tanh-sinh";
}

struct QuadPolicy {
  QuadMethod method = QuadMethod::gauss_legendre;
  double target_abs_tol = 1e-12;
  int max_refinement_level = 10;  // each level doubles the effective node count
};

struct NumericReport {
  double value = 0.0;
  double error_estimate = 0.0;  // |last level - previous level|, or MC standard error
  std::string method;
  long long effort = 0;  // function evaluations (quadrature) or samples (MC)
  std::optional<std::uint64_t> seed;
  bool converged = true;
};

namespace detail {

/// Nodes and weights of the N-point Gauss-Legendre rule on [-1, 1], upper
/// half only (x_i >= 0); the rule is symmetric. Newton iteration on the
/// Legendre recurrence; results are cached per N.
struct GaussRule {
  std::vector<double> nodes;    // ascending, nonnegative half
  std::vector<double> weights;  // matching weights
  int size = 0;                 // full rule size N
};

inline const GaussRule& gauss_rule(int n_points) {
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n_points);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.size = n_points;
  const int half = (n_points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th root of P_n counted from the upper end; standard asymptotic seed.
    double x = std::cos(M_PI * (i + 0.75) / (n_points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n_points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n_points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return cache.emplace(n_points, std::move(rule)).first->second;
}

/// One pass of the N-point rule over [0,1] for h(t).
template <typename F>
double gauss_pass(const F& h, int n_points) {
  const GaussRule& rule = gauss_rule(n_points);
  double sum = 0.0;
  const bool odd_center = (rule.size % 2 != 0);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double w = rule.weights[i];
    if (odd_center && i == 0 && x < 1e-14) {
      sum += w * h(0.5);
      continue;
    }
    sum += w * (h(0.5 + 0.5 * x) + h(0.5 - 0.5 * x));
  }
  return 0.5 * sum;
}

/// One tanh-sinh node: t = sigmoid(pi sinh u) in a form accurate near both
/// endpoints, with dt/du = pi cosh(u) t (1-t).
struct TanhSinhNode {
  double t = 0.0;
  double jacobian = 0.0;
  bool usable = false;
};

inline TanhSinhNode tanh_sinh_node(double u) {
  const double z = M_PI * std::sinh(u);
  double t, one_minus_t;
  if (z < 0.0) {
    const double e = std::exp(z);
    t = e / (1.0 + e);
    one_minus_t = 1.0 / (1.0 + e);
  } else {
    const double e = std::exp(-z);
    t = 1.0 / (1.0 + e);
    one_minus_t = e / (1.0 + e);
  }
  TanhSinhNode node;
  node.t = t;
  node.jacobian = M_PI * std::cosh(u) * t * one_minus_t;
  node.usable = t > 0.0 && t < 1.0 && node.jacobian > 0.0;
  return node;
}

// Truncation horizon: |u| <= 6.5 puts the node weight below anything a
// double integrand value (including log-gamma's mild singularity growth,
// |log t| <= ~745) can lift above 1e-300.
inline constexpr double kTanhSinhHorizon = 6.5;

template <typename F>
double tanh_sinh_level_sum(const F& h, double step, bool odd_indices_only,
                           long long& evaluations) {
  double sum = 0.0;
  const int start = odd_indices_only ? 1 : 0;
  const int stride = odd_indices_only ? 2 : 1;
  for (int j = start;; j += stride) {
    const double u = j * step;
    if (u > kTanhSinhHorizon) break;
    const TanhSinhNode plus = tanh_sinh_node(u);
    if (plus.usable) {
      sum += plus.jacobian * h(plus.t);
      ++evaluations;
    }
    if (j > 0) {
      const TanhSinhNode minus = tanh_sinh_node(-u);
      if (minus.usable) {
        sum += minus.jacobian * h(minus.t);
        ++evaluations;
      }
    }
  }
  return sum;
}

template <typename F>
NumericReport refine_gauss(const F& h, const QuadPolicy& policy) {
  NumericReport report;
  report.method = "gauss-legendre";
  int n_points = 16;
  double previous = gauss_pass(h, n_points);
  report.effort += n_points;
  report.value = previous;
  report.error_estimate = std::abs(previous);
  report.converged = false;
  for (int level = 1; level <= policy.max_refinement_level; ++level) {
    n_points *= 2;
    const double current = gauss_pass(h, n_points);
    report.effort += n_points;
    report.value = current;
    report.error_estimate = std::abs(current - previous);
    previous = current;
    if (report.error_estimate <= policy.target_abs_tol) {
      report.converged = true;
      break;
    }
  }
  return report;
}

template <typename F>
NumericReport refine_tanh_sinh(const F& h, const QuadPolicy& policy) {
  NumericReport report;
  report.method = "tanh-sinh";
  double step = 1.0;
  double raw_sum = tanh_sinh_level_sum(h, step, false, report.effort);
  double previous = step * raw_sum;
  report.value = previous;
  report.error_estimate = std::abs(previous);
  report.converged = false;
  for (int level = 1; level <= policy.max_refinement_level; ++level) {
    step *= 0.5;
    // only the new odd-multiple nodes; prior nodes are reused in raw_sum
    raw_sum += tanh_sinh_level_sum(h, step, true, report.effort);
    const double current = step * raw_sum;
    report.value = current;
    report.error_estimate = std::abs(current - previous);
    previous = current;
    if (report.error_estimate <= policy.target_abs_tol) {
      report.converged = true;
      break;
    }
  }
  return report;
}

template <typename F>
NumericReport refine(const F& h, const QuadPolicy& policy) {
  return policy.method == QuadMethod::gauss_legendre ? refine_gauss(h, policy)
                                                     : refine_tanh_sinh(h, policy);
}

}  // namespace detail

/// Approximates int_0^1 weight(t) f(t + shift) dt under the given policy.
/// Polynomial integrands are composed with the weight exactly first, so the
/// only rounding is one per node evaluation.
inline NumericReport integrate_1d(const Integrand& f, const Rational& shift, const Poly& weight,
                                  QuadPolicy policy = {}) {
  if (shift < 0) throw std::invalid_argument("integrate_1d: shift must be >= 0");
  if (policy.target_abs_tol <= 0)
    throw std::invalid_argument("integrate_1d: target tolerance must be > 0");
  if (f.kind() == IntegrandKind::polynomial) {
    const Poly combined = weight * f.poly().shifted_argument(shift);
    const auto h = [&combined](double t) { return static_cast<double>(combined(Rational(t))); };
    return detail::refine(h, policy);
  }
  std::vector<double> coeffs(weight.coefficients().size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = static_cast<double>(weight.coefficients()[i]);
  const double shift_d = static_cast<double>(shift);
  const auto h = [&coeffs, shift_d, &f](double t) {
    double w = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) w = w * t + *it;
    return w * f(t + shift_d);
  };
  return detail::refine(h, policy);
}

/// Numeric evaluation of the full reduced form: the exact prefactor is folded
/// into each weight before quadrature so every shell integrand stays O(1)
/// regardless of n, keeping an absolute tolerance meaningful. Shells are
/// evaluated and summed in ascending order; log-gamma's singular first shell
/// is forced onto tanh-sinh.
inline NumericReport integrate_reduced(int n, const Integrand& f, QuadPolicy policy = {},
                                       std::vector<std::string>* diagnostics = nullptr) {
  if (n < 1) throw std::invalid_argument("integrate_reduced: n must be >= 1");
  const ReductionPlan plan = reduction_plan(n);
  NumericReport total;
  total.method = std::string("reduced[") + std::string(quad_method_name(policy.method)) + "]";
  bool used_tanh_sinh_override = false;
  for (const Shell& shell : plan.shells) {
    QuadPolicy shell_policy = policy;
    if (shell.shift == 0 && f.singular_at_zero() &&
        shell_policy.method != QuadMethod::tanh_sinh) {
      shell_policy.method = QuadMethod::tanh_sinh;
      used_tanh_sinh_override = true;
    }
    const Poly scaled = shell.weight * plan.prefactor;
    const NumericReport part = integrate_1d(f, Rational(shell.shift), scaled, shell_policy);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.effort += part.effort;
    if (!part.converged) {
      total.converged = false;
      if (diagnostics)
        diagnostics->push_back("shell m=" + std::to_string(shell.index) +
                               " did not reach the target tolerance (error estimate " +
                               std::to_string(part.error_estimate) + ")");
    }
  }
  if (used_tanh_sinh_override && policy.method != QuadMethod::tanh_sinh)
    total.method = "reduced[gauss-legendre+tanh-sinh]";
  return total;
}

}  // namespace cubered
