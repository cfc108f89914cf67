#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "cubered/loggamma.hpp"
#include "cubered/poly.hpp"
#include "cubered/rational.hpp"

namespace cubered {

enum class IntegrandKind { log_gamma, polynomial, exp_fn, sin_fn, reciprocal_shift };

/// The function f applied to the coordinate sum. Polynomial integrands carry
/// exact coefficients and are evaluated by rational Horner with a single
/// final rounding, so a polynomial f introduces no evaluation noise beyond
/// the one unavoidable rounding of the result.
class Integrand {
 public:
  static Integrand log_gamma_fn() { return Integrand(IntegrandKind::log_gamma); }
  static Integrand exponential() { return Integrand(IntegrandKind::exp_fn); }
  static Integrand sine() { return Integrand(IntegrandKind::sin_fn); }
  /// f(u) = 1/(1+u); smooth on [0, n] for any n >= 0.
  static Integrand reciprocal() { return Integrand(IntegrandKind::reciprocal_shift); }
  static Integrand polynomial(Poly p) {
    Integrand f(IntegrandKind::polynomial);
    f.poly_ = std::move(p);
    return f;
  }

  IntegrandKind kind() const { return kind_; }

  const Poly& poly() const {
    if (kind_ != IntegrandKind::polynomial)
      throw std::logic_error("Integrand: not a polynomial integrand");
    return poly_;
  }

  /// True when f blows up as the argument approaches 0 from above; such
  /// integrands need endpoint-robust quadrature on the first shell.
  bool singular_at_zero() const { return kind_ == IntegrandKind::log_gamma; }

  double operator()(double u) const {
    switch (kind_) {
      case IntegrandKind::log_gamma:
        return cubered::log_gamma(u);
      case IntegrandKind::polynomial:
        return static_cast<double>(poly_(Rational(u)));
      case IntegrandKind::exp_fn:
        return std::exp(u);
      case IntegrandKind::sin_fn:
        return std::sin(u);
      case IntegrandKind::reciprocal_shift:
        return 1.0 / (1.0 + u);
    }
    throw std::logic_error("Integrand: unknown kind");
  }

  std::string_view name() const {
    switch (kind_) {
      case IntegrandKind::log_gamma: return "loggamma";
      case IntegrandKind::polynomial: return "poly";
      case IntegrandKind::exp_fn: return "exp";
      case IntegrandKind::sin_fn: return "sin";
      case IntegrandKind::reciprocal_shift: return "recip";
    }
    throw std::logic_error("Integrand: unknown kind");
  }

 private:
  explicit Integrand(IntegrandKind kind) : kind_(kind) {}

  IntegrandKind kind_;
  Poly poly_;
};

}  // namespace cubered
