#include "lclab/arith_fn.hpp"

#include <utility>

namespace lclab {
namespace {

Integer power_of(std::uint64_t base, unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, k);
  return r;
}

Integer sigma_direct(std::uint64_t n, unsigned k) {
  Integer sum = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += power_of(d, k);
    if (d != n / d) sum += power_of(n / d, k);
  }
  return sum;
}

}  // namespace

ArithFn ArithFn::one() { return ArithFn(FnKind::kOne, "one"); }
ArithFn ArithFn::id() { return ArithFn(FnKind::kId, "id"); }
ArithFn ArithFn::square() { return ArithFn(FnKind::kSquare, "square"); }
ArithFn ArithFn::sigma() { return ArithFn(FnKind::kSigma, "sigma"); }

ArithFn ArithFn::sigma_k(unsigned k) {
  ArithFn fn(FnKind::kSigmaK, "sigma_k=" + std::to_string(k));
  fn.power_ = k;
  return fn;
}

ArithFn ArithFn::from_table(std::vector<Rational> values, std::string label) {
  if (values.empty() || values.front() != 1) {
    throw NormalizationError("arithmetic function '" + label + "' must satisfy g(1) = 1");
  }
  ArithFn fn(FnKind::kTable, std::move(label));
  fn.table_ = std::make_shared<const std::vector<Rational>>(std::move(values));
  return fn;
}

std::optional<std::uint64_t> ArithFn::domain_limit() const {
  switch (kind_) {
    case FnKind::kTable:
      return table_->size();
    case FnKind::kTilde:
      return base_->domain_limit();
    default:
      return std::nullopt;
  }
}

Rational ArithFn::eval(std::uint64_t n) const {
  if (n == 0) throw std::domain_error("arithmetic functions are defined for n >= 1");
  if (n <= memo_.size()) return memo_[n - 1];
  return compute(n);
}

Rational ArithFn::compute(std::uint64_t n) const {
  switch (kind_) {
    case FnKind::kOne:
      return 1;
    case FnKind::kId:
      return Rational(Integer(static_cast<unsigned long>(n)));
    case FnKind::kSquare: {
      const Integer v(static_cast<unsigned long>(n));
      return Rational(v * v);
    }
    case FnKind::kSigma:
      return Rational(sigma_direct(n, 1));
    case FnKind::kSigmaK:
      return Rational(sigma_direct(n, power_));
    case FnKind::kTable:
      if (n > table_->size()) {
        throw std::out_of_range("'" + label_ + "' is tabulated only for n <= " +
                                std::to_string(table_->size()));
      }
      return (*table_)[n - 1];
    case FnKind::kTilde:
      return base_->eval(n) / Rational(Integer(static_cast<unsigned long>(n)));
  }
  throw std::logic_error("unknown arithmetic function kind");
}

void ArithFn::fill(std::uint64_t n) {
  if (n <= memo_.size()) return;
  if (auto limit = domain_limit(); limit && n > *limit) {
    throw std::out_of_range("'" + label_ + "' is tabulated only for n <= " + std::to_string(*limit));
  }
  std::vector<Rational> values;
  values.reserve(n);
  if (kind_ == FnKind::kSigma || kind_ == FnKind::kSigmaK) {
    const auto sieve = divisor_sigma_sieve(n, kind_ == FnKind::kSigma ? 1 : power_);
    for (std::uint64_t i = 1; i <= n; ++i) values.emplace_back(sieve[i]);
  } else if (kind_ == FnKind::kTilde) {
    ArithFn base = *base_;
    base.fill(n);
    for (std::uint64_t i = 1; i <= n; ++i) {
      values.push_back(base.eval(i) / Rational(Integer(static_cast<unsigned long>(i))));
    }
    base_ = std::make_shared<const ArithFn>(std::move(base));
  } else {
    for (std::uint64_t i = 1; i <= n; ++i) values.push_back(compute(i));
  }
  memo_ = std::move(values);
}

bool ArithFn::integral_on(std::uint64_t n) const {
  switch (kind_) {
    case FnKind::kOne:
    case FnKind::kId:
    case FnKind::kSquare:
    case FnKind::kSigma:
    case FnKind::kSigmaK:
      return true;
    default:
      for (std::uint64_t i = 1; i <= n; ++i) {
        if (!is_integer(eval(i))) return false;
      }
      return true;
  }
}

ArithFn tilde(const ArithFn& fn) {
  ArithFn out(FnKind::kTilde, fn.label() + "~");
  out.base_ = std::make_shared<const ArithFn>(fn);
  if (!fn.memo_.empty()) {
    out.memo_.reserve(fn.memo_.size());
    for (std::size_t i = 0; i < fn.memo_.size(); ++i) {
      out.memo_.push_back(fn.memo_[i] / Rational(Integer(static_cast<unsigned long>(i + 1))));
    }
  }
  return out;
}

ArithFn moebius_convolve(const ArithFn& fn, std::uint64_t n_max) {
  if (n_max == 0) throw std::invalid_argument("moebius_convolve needs n_max >= 1");
  const auto mu = moebius_sieve(n_max);
  std::vector<Rational> g(n_max + 1);
  for (std::uint64_t n = 1; n <= n_max; ++n) g[n] = fn.eval(n);
  std::vector<Rational> f(n_max);
  for (std::uint64_t d = 1; d <= n_max; ++d) {
    if (mu[d] == 0) continue;
    for (std::uint64_t k = 1; d * k <= n_max; ++k) {
      if (mu[d] > 0) {
        f[d * k - 1] += g[k];
      } else {
        f[d * k - 1] -= g[k];
      }
    }
  }
  return ArithFn::from_table(std::move(f), "mu*" + fn.label());
}

Rational harmonic(std::uint64_t n) {
  Rational h = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    h += Rational(1, static_cast<unsigned long>(k));
  }
  return h;
}

std::vector<int> moebius_sieve(std::uint64_t n) {
  std::vector<int> mu(n + 1, 0);
  if (n == 0) return mu;
  std::vector<std::uint64_t> primes;
  std::vector<bool> composite(n + 1, false);
  mu[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::uint64_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

std::vector<Integer> divisor_sigma_sieve(std::uint64_t n, unsigned k) {
  // For each i, with p its smallest prime and p^e || i:
  //   head[i] = 1 + p^k + ... + p^(e k),  rest[i] = i / p^e,
  //   sigma_k(i) = head[i] * sigma_k(rest[i]).
  std::vector<Integer> sigma(n + 1, 0);
  if (n == 0) return sigma;
  std::vector<Integer> head(n + 1, 0);
  std::vector<std::uint64_t> rest(n + 1, 1);
  std::vector<std::uint64_t> primes;
  std::vector<Integer> prime_power;  // p^k for each recorded prime
  std::vector<bool> composite(n + 1, false);
  sigma[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      prime_power.push_back(power_of(i, k));
      head[i] = 1 + prime_power.back();
      rest[i] = 1;
      sigma[i] = head[i];
    }
    for (std::size_t j = 0; j < primes.size(); ++j) {
      const std::uint64_t p = primes[j];
      if (i * p > n) break;
      const std::uint64_t ip = i * p;
      composite[ip] = true;
      if (i % p == 0) {
        head[ip] = head[i] * prime_power[j] + 1;
        rest[ip] = rest[i];
        sigma[ip] = head[ip] * sigma[rest[ip]];
        break;
      }
      head[ip] = 1 + prime_power[j];
      rest[ip] = i;
      sigma[ip] = sigma[i] * head[ip];
    }
  }
  return sigma;
}

}  // namespace lclab
