#include "lclab/poly.hpp"

#include <algorithm>
#include <utility>

namespace lclab {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator*(const Rational& scalar, Poly a) { return a *= scalar; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  std::vector<Rational> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return Poly(std::move(out));
}

Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly taylor_shift(const Poly& p, const Rational& a) {
  // Horner in the ring Q[x]: q <- q * (x + a) + c_i, highest coefficient first.
  const auto c = p.coefficients();
  std::vector<Rational> q;
  q.reserve(c.size());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    q.insert(q.begin(), Rational(0));
    for (std::size_t i = 0; i + 1 < q.size(); ++i) q[i] += a * q[i + 1];
    q[0] += *it;
  }
  return Poly(std::move(q));
}

}  // namespace lclab
