#include "lclab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lclab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  const std::string_view den_text = s.substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  }
  const Integer num = parse_integer(s.substr(0, slash));
  const Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const Integer& value) { return value.get_str(10); }

int sign(const Rational& value) { return sgn(value); }
int sign(const Integer& value) { return sgn(value); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer factorial(std::uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(static_cast<long>(n)).get_mpz_t(),
             static_cast<unsigned long>(k));
  return r;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rational(num, den);
}

Integer floor(const Rational& value) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

}  // namespace lclab
