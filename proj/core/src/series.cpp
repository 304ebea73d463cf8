#include "lclab/series.hpp"

#include <stdexcept>
#include <utility>

namespace lclab {

Series::Series(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order + 1) {
    throw std::invalid_argument("series has more coefficients than its order allows");
  }
  coeffs_.resize(order + 1);
}

Series Series::constant(std::size_t order, const Rational& value) {
  Series s(order);
  s[0] = value;
  return s;
}

Series& Series::operator+=(const Series& other) {
  if (other.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  if (other.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator-(Series a) { return a *= Rational(-1); }
Series operator*(const Rational& scalar, Series a) { return a *= scalar; }

Series mul(const Series& a, const Series& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  const std::size_t n = a.order();
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series operator*(const Series& a, const Series& b) { return mul(a, b); }

Series exp(const Series& a) {
  if (a[0] != 0) throw std::domain_error("exp needs a series with zero constant term");
  const std::size_t n = a.order();
  Series e(n);
  e[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= i; ++k) {
      if (a[k] != 0) acc += Rational(Integer(static_cast<unsigned long>(k))) * a[k] * e[i - k];
    }
    e[i] = acc / Rational(Integer(static_cast<unsigned long>(i)));
  }
  return e;
}

Series inverse(const Series& a) {
  if (a[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  const std::size_t n = a.order();
  const Rational lead_inv = 1 / a[0];
  Series b(n);
  b[0] = lead_inv;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= i; ++k) {
      if (a[k] != 0) acc += a[k] * b[i - k];
    }
    b[i] = -acc * lead_inv;
  }
  return b;
}

Series derivative(const Series& a) {
  const std::size_t n = a.order();
  if (n == 0) return Series(0);
  Series d(n - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    d[i - 1] = Rational(Integer(static_cast<unsigned long>(i))) * a[i];
  }
  return d;
}

Series truncate(const Series& a, std::size_t order) {
  if (order > a.order()) throw std::invalid_argument("cannot truncate to a higher order");
  Series out(order);
  for (std::size_t i = 0; i <= order; ++i) out[i] = a[i];
  return out;
}

Series eichler_integral(const ArithFn& g, std::size_t order) {
  Series s(order);
  for (std::size_t n = 1; n <= order; ++n) {
    s[n] = g.eval(n) / Rational(Integer(static_cast<unsigned long>(n)));
  }
  return s;
}

Series generating_series(const ArithFn& g, std::size_t order) {
  Series s(order);
  for (std::size_t n = 1; n <= order; ++n) s[n] = g.eval(n);
  return s;
}

Series pow_int(const Series& a, unsigned m) {
  Series result = Series::constant(a.order(), 1);
  Series base = a;
  while (m > 0) {
    if (m & 1u) result = mul(result, base);
    m >>= 1u;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

Series euler_product(std::span<const Rational> exponents, std::size_t order) {
  // ln(1 - T^n) = -sum_{j >= 1} T^{n j} / j
  Series log_sum(order);
  for (std::size_t n = 1; n <= order && n <= exponents.size(); ++n) {
    const Rational& e = exponents[n - 1];
    if (e == 0) continue;
    for (std::size_t j = 1; n * j <= order; ++j) {
      log_sum[n * j] -= e / Rational(Integer(static_cast<unsigned long>(j)));
    }
  }
  return exp(log_sum);
}

}  // namespace lclab
