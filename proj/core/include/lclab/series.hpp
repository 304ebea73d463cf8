#pragma once

#include "lclab/arith_fn.hpp"
#include "lclab/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lclab {

/// Power series c_0 + c_1 T + ... + c_N T^N truncated at order N (inclusive).
class Series {
 public:
  explicit Series(std::size_t order) : coeffs_(order + 1) {}
  /// Zero-pads to order N. Throws std::invalid_argument if coeffs is longer than N + 1.
  Series(std::size_t order, std::vector<Rational> coeffs);

  static Series constant(std::size_t order, const Rational& value);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Rational& scalar);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(Series a);
Series operator*(const Rational& scalar, Series a);

/// Truncated Cauchy product. Throws std::invalid_argument on order mismatch.
Series mul(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);

/// exp(a) for c_0 = 0, from n E_n = sum_{k=1}^{n} k a_k E_{n-k}.
/// Throws std::domain_error if c_0 != 0.
Series exp(const Series& a);

/// 1/a. Throws std::domain_error if c_0 == 0.
Series inverse(const Series& a);

/// Formal derivative, order N - 1 (order 0 stays order 0 with value 0).
Series derivative(const Series& a);

Series truncate(const Series& a, std::size_t order);

/// sum_{n=1}^{N} g(n) T^n / n.
Series eichler_integral(const ArithFn& g, std::size_t order);

/// sum_{n=1}^{N} g(n) T^n.
Series generating_series(const ArithFn& g, std::size_t order);

/// a^m by binary exponentiation; a^0 = 1.
Series pow_int(const Series& a, unsigned m);

/// prod_{n=1}^{N} (1 - T^n)^{e_n} with exponents[n - 1] = e_n, expanded as
/// exp(sum_n e_n ln(1 - T^n)). Missing exponents count as 0.
Series euler_product(std::span<const Rational> exponents, std::size_t order);

}  // namespace lclab
