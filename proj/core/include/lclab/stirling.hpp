#pragma once

#include "lclab/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lclab {

class Triangle;

/// Unsigned Stirling number of the first kind S(n, m), from
/// S(n,m) = (n-1) S(n-1,m) + S(n-1,m-1), S(0,0) = 1.
Integer stirling_first(std::size_t n, std::size_t m);

/// S(n, 0..n).
std::vector<Integer> stirling_row(std::size_t n);

/// S(n, m) for 0 <= n <= n_max and 0 <= m <= m_max.
class StirlingColumnTable {
 public:
  StirlingColumnTable(std::size_t n_max, std::size_t m_max);

  /// Zero for m > n; throws std::out_of_range past the stored bounds.
  const Integer& operator()(std::size_t n, std::size_t m) const;
  std::size_t n_max() const { return rows_.size() - 1; }
  std::size_t m_max() const { return m_max_; }

 private:
  std::size_t m_max_;
  std::vector<std::vector<Integer>> rows_;
};

/// True iff m S(n,m)^2 > (m+1) S(n,m+1) S(n,m-1) for every 2 <= m <= n-1.
/// Requires n >= 3.
bool sibuya_strict_check(std::size_t n);

/// Checks S(n,1) = (n-1)!, S(n,2) = (n-1)! H(n-1) and A^{1~,1}_{n,2} = (2/n) H(n-1).
/// The last identity is read from `tilde_one_one` when given (it must reach
/// row n); otherwise a two-column triangle is built. Requires n >= 2.
bool harmonic_column_identity(std::size_t n, const Triangle* tilde_one_one = nullptr);

/// Delta(n) = (n^2-1) H(n-1)^2 - n^2 H(n) H(n-2), cross-checked against
/// n/(n-1) (H(n-1) + 1) - H(n-1)^2. Requires n >= 2; throws std::logic_error if
/// the two forms disagree.
Rational delta(std::size_t n);

/// Delta(2..n_to), computed incrementally (entry i is Delta(i + 2)), with the
/// same two-form cross-check as delta().
std::vector<Rational> delta_sequence(std::size_t n_to);

/// For each m in 1..m_max, the smallest n <= n_limit with
///   (S(n,m)/n!)^2 < S(n-1,m) S(n+1,m) / ((n-1)! (n+1)!),
/// compared as S(n,m)^2 (n+1) < S(n-1,m) S(n+1,m) n. Streams the columns, so
/// memory stays at three rows of m_max integers.
std::vector<std::optional<std::size_t>> stirling_vertical_first_failures(std::size_t m_max,
                                                                        std::size_t n_limit);

}  // namespace lclab
