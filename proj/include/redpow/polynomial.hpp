#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "redpow/epset.hpp"

namespace redpow {

using Rational = mpq_class;

/// Parses "3", "-7/3". Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/**
 * Dense univariate polynomial with exact rational coefficients, stored from
 * the constant term upwards. The zero polynomial has no coefficients.
 */
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// coeff * l^degree
  static Polynomial monomial(std::size_t degree, const Rational& coeff = 1);
  static Polynomial identity() { return monomial(1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Zero for the zero polynomial.
  Rational leading() const;

  Rational eval(const Rational& x) const;
  Rational eval(Index n) const;
  int sign_at(Index n) const;

  /// Every n >= sign_bound() has sign(p(n)) == sign(leading()).
  Index sign_bound() const;

  /// Non-negative integer roots in increasing order. Must not be called on
  /// the zero polynomial.
  std::vector<Index> natural_roots() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  /// DSL syntax in the variable `l`, lowest degree first, e.g. `3 - 1/2*l + l^2`.
  std::string to_string() const;

private:
  void normalize();

  std::vector<Rational> coeffs_;
  // coeffs_ scaled by denom_ to integers; used for fast evaluation at naturals.
  std::vector<mpz_class> scaled_;
  mpz_class denom_ = 1;
};

} // namespace redpow
