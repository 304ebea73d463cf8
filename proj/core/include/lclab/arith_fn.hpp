#pragma once

#include "lclab/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lclab {

/// Thrown when a table-backed arithmetic function does not satisfy g(1) = 1.
class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FnKind { kOne, kId, kSquare, kSigma, kSigmaK, kTable, kTilde };

/// A normalized arithmetic function g with g(1) = 1.
///
/// Built-in kinds are evaluated on demand; fill(n) memoizes the window 1..n,
/// using linear sieves for the divisor sums. After the fill phase the object
/// is only read, so one filled instance may be shared by concurrent readers.
class ArithFn {
 public:
  static ArithFn one();
  static ArithFn id();
  static ArithFn square();
  static ArithFn sigma();
  /// sigma_k(n) = sum of d^k over the divisors d of n.
  static ArithFn sigma_k(unsigned k);
  /// values[i] = g(i + 1). Throws NormalizationError unless values[0] == 1.
  static ArithFn from_table(std::vector<Rational> values, std::string label);

  /// g(n). Throws std::domain_error for n == 0 and std::out_of_range past the
  /// end of a table.
  Rational eval(std::uint64_t n) const;

  /// Memoizes g(1..n).
  void fill(std::uint64_t n);

  /// True when g(1..n) are all integers.
  bool integral_on(std::uint64_t n) const;

  /// Largest n where g is defined, if bounded.
  std::optional<std::uint64_t> domain_limit() const;

  FnKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  unsigned sigma_power() const { return power_; }

 private:
  ArithFn(FnKind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

  Rational compute(std::uint64_t n) const;

  FnKind kind_;
  std::string label_;
  unsigned power_ = 0;
  std::shared_ptr<const std::vector<Rational>> table_;
  std::shared_ptr<const ArithFn> base_;
  std::vector<Rational> memo_;  // memo_[n - 1] = g(n)

  friend ArithFn tilde(const ArithFn& fn);
};

/// n -> g(n)/n, labelled "<label>~".
ArithFn tilde(const ArithFn& fn);

/// f(n) = sum over d | n of mu(d) g(n/d), tabulated on 1..n_max.
ArithFn moebius_convolve(const ArithFn& fn, std::uint64_t n_max);

/// H(n) = 1 + 1/2 + ... + 1/n, H(0) = 0.
Rational harmonic(std::uint64_t n);

/// mu[0..n] by a linear sieve (mu[0] is unused and set to 0).
std::vector<int> moebius_sieve(std::uint64_t n);

/// sigma_k[0..n] by a linear sieve (entry 0 is unused and set to 0).
std::vector<Integer> divisor_sigma_sieve(std::uint64_t n, unsigned k);

}  // namespace lclab
