#pragma once

#include "lclab/rational.hpp"

#include <span>
#include <vector>

namespace lclab {

/// Dense univariate polynomial with ascending Rational coefficients.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero past the degree.
  Rational operator[](std::size_t i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Poly& operator+=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& scalar, Poly a);

/// Horner evaluation.
Rational evaluate(const Poly& p, const Rational& x);

/// q(x) = p(x + a).
Poly taylor_shift(const Poly& p, const Rational& a);

}  // namespace lclab
