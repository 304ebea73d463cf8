#pragma once

#include "lclab/rational.hpp"
#include "lclab/report.hpp"
#include "lclab/triangle.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lclab {

enum class ConcavityMode { kHorizontal, kVertical, kCVertical };

std::string to_string(ConcavityMode mode);

/// Per-column bookkeeping of a C-scan: centers 1..last_center were checked,
/// bound = floor(C^m) is what was asked for.
struct ColumnScan {
  std::size_t m = 0;
  std::size_t bound = 0;
  std::size_t last_center = 0;
  bool clipped = false;
  bool pass = true;
};

/// Verdict of a log-concavity scan. The inequality a_n^2 >= a_{n-1} a_{n+1}
/// is non-strict: failures are strict violations, ties are centers where it
/// holds with equality and a non-zero right side.
struct ConcavityReport {
  ConcavityMode mode = ConcavityMode::kHorizontal;
  std::size_t from = 0;    // first row (horizontal) or column (vertical, C)
  std::size_t to = 0;      // last row or column
  std::size_t n_to = 0;    // vertical: largest row consulted
  bool pass = true;
  std::vector<Coord> failures;
  std::vector<Coord> ties;
  std::optional<Rational> c;
  std::vector<ColumnScan> columns;
  bool clipped = false;
};

/// Smallest index i with seq[i]^2 < seq[i-1] seq[i+1], the sequence being
/// extended by zeros on both sides; nullopt when log-concave.
/// Throws std::domain_error on a negative entry.
std::optional<std::size_t> is_logconcave(std::span<const Rational> seq);

/// Checks every row n_from..n_to (m = 1..n, zero-extended).
/// Throws std::out_of_range when a row is outside the triangle or clipped.
ConcavityReport horizontal_check(const Triangle& tri, std::size_t n_from, std::size_t n_to,
                                 unsigned jobs = 1);

/// Checks columns m_from..m_to at centers 1 <= n <= n_to - 1; row n_to is the
/// last one consulted, so n_to <= N.
ConcavityReport vertical_check(const Triangle& tri, std::size_t m_from, std::size_t m_to,
                               std::size_t n_to);

/// Smallest n <= n_limit with A_{n,m}^2 < A_{n-1,m} A_{n+1,m}. Centers beyond
/// N - 1 cannot be decided and are not scanned.
std::optional<std::size_t> first_vertical_failure(const Triangle& tri, std::size_t m,
                                                  std::size_t n_limit);

/// floor(C^m). Throws std::overflow_error if it does not fit in size_t.
std::size_t c_power_floor(const Rational& c, std::size_t m);

/// Vertical C-log-concavity: for m in m_from..m_to, the inequality at every
/// center 1 <= n <= floor(C^m), using the true neighbor A_{n+1,m}. Columns
/// that would need rows past N are checked up to N - 1 and marked clipped.
/// Throws std::invalid_argument unless C > 1.
ConcavityReport c_vertical_check(const Triangle& tri, const Rational& c, std::size_t m_from,
                                 std::size_t m_to);

/// Coefficients b_{m,n}, n = 0..N, of f(q)^m with f(q) = sum sigma(n) q^n / n.
struct HZCoefficients {
  unsigned m = 0;
  std::vector<Rational> b;
};

HZCoefficients hong_zhang_coefficients(unsigned m, std::size_t n_max);

/// Asserts b_{m,n} = A^{sigma~,1}_{n,m} = m! A^{sigma,id}_{n,m} for m <= m_max, n <= N.
CheckReport hz_equivalence_check(std::size_t n_max, unsigned m_max);

/// b_{m,n}^2 >= b_{m,n-1} b_{m,n+1} for 2 <= m <= m_max, 1 <= n <= floor(C^m),
/// evaluated on the D'Arcais triangle (b_{m,n} = m! A_{n,m}, and a positive
/// factor per column does not change a verdict).
ConcavityReport hong_zhang_scan(const Rational& c, unsigned m_max);

}  // namespace lclab
