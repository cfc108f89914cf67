#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubered/combinatorics.hpp"
#include "cubered/rational.hpp"

namespace cubered {

/// Dense univariate polynomial over Rational, coefficients stored by
/// ascending power. All arithmetic is exact. The zero polynomial has an
/// empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly constant(Rational c) { return Poly({std::move(c)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^i; zero beyond the stored degree.
  const Rational& coeff(int i) const {
    static const Rational kZero = 0;
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(i)]
                                                            : kZero;
  }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(prod));
  }

  /// p(t + a), computed exactly.
  Poly shifted_argument(const Rational& a) const {
    std::vector<Rational> out(coeffs_.size(), Rational(0));
    for (int i = 0; i <= degree(); ++i) {
      Rational apow = 1;
      for (int j = i; j >= 0; --j) {
        out[static_cast<size_t>(j)] += coeffs_[static_cast<size_t>(i)] * Rational(binomial(i, j)) * apow;
        apow *= a;
      }
    }
    return Poly(std::move(out));
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<int>(i);
    return Poly(std::move(d));
  }

  /// Antiderivative with zero constant term.
  Poly antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<Rational> a(coeffs_.size() + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
      a[i + 1] = coeffs_[i] / Rational(static_cast<int>(i) + 1);
    return Poly(std::move(a));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// (t + c)^e expanded exactly.
inline Poly shifted_power(const Rational& c, int e) {
  if (e < 0) throw std::invalid_argument("shifted_power: exponent must be >= 0");
  std::vector<Rational> coeffs(static_cast<size_t>(e) + 1);
  Rational cpow = 1;
  for (int j = e; j >= 0; --j) {
    coeffs[static_cast<size_t>(j)] = Rational(binomial(e, j)) * cpow;
    cpow *= c;
  }
  return Poly(std::move(coeffs));
}

/// Exact value of the integral of p over [0, 1].
inline Rational integrate_01(const Poly& p) {
  Rational sum = 0;
  for (int i = 0; i <= p.degree(); ++i) sum += p.coeff(i) / Rational(i + 1);
  return sum;
}

/// Renders by ascending power, e.g. "1 - 2*t + t^2" or "1/2 + 3/2*t".
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

/// Parses expressions such as "t^2", "1 - 2*t + t^2", "3/2*t^3 - t", "5".
/// Grammar: sum of terms; term = rational ['*' 't' ['^' int]] | 't' ['^' int].
inline Poly parse_poly(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const auto bad = [&text](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) bad("empty expression");

  std::vector<Rational> coeffs;
  const auto add_term = [&coeffs](const Rational& c, int power) {
    if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(static_cast<size_t>(power) + 1, Rational(0));
    coeffs[static_cast<size_t>(power)] += c;
  };

  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    if (pos >= s.size()) bad("dangling sign");

    // Longest run of digits and '/' forms the coefficient, if present.
    size_t num_end = pos;
    while (num_end < s.size() && (std::isdigit(static_cast<unsigned char>(s[num_end])) || s[num_end] == '/'))
      ++num_end;
    Rational coef = 1;
    bool have_coef = false;
    if (num_end > pos) {
      coef = parse_rational(s.substr(pos, num_end - pos));
      have_coef = true;
      pos = num_end;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    int power = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t exp_end = pos;
        while (exp_end < s.size() && std::isdigit(static_cast<unsigned char>(s[exp_end]))) ++exp_end;
        if (exp_end == pos) bad("missing exponent after '^'");
        power = std::stoi(s.substr(pos, exp_end - pos));
        pos = exp_end;
      }
    } else if (!have_coef) {
      bad("expected a coefficient or 't' at '" + s.substr(pos) + "'");
    }
    add_term(Rational(sign) * coef, power);
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      bad("unexpected character '" + std::string(1, s[pos]) + "'");
  }
  return Poly(std::move(coeffs));
}

}  // namespace cubered
