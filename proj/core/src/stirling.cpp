#include "lclab/stirling.hpp"

#include "lclab/arith_fn.hpp"
#include "lclab/triangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace lclab {
namespace {

// Advances S(n-1, 0..width) to S(n, 0..width).
void next_row(const std::vector<Integer>& prev, std::vector<Integer>& out, std::size_t n) {
  const std::size_t width = prev.size() - 1;
  out.assign(width + 1, Integer(0));
  for (std::size_t m = 1; m <= width; ++m) {
    out[m] = prev[m] * static_cast<unsigned long>(n - 1) + prev[m - 1];
  }
  out[0] = n == 0 ? 1 : 0;
}

}  // namespace

Integer stirling_first(std::size_t n, std::size_t m) {
  if (m > n) return 0;
  std::vector<Integer> row(m + 1, Integer(0));
  row[0] = 1;
  std::vector<Integer> next;
  for (std::size_t k = 1; k <= n; ++k) {
    next_row(row, next, k);
    row.swap(next);
  }
  return row[m];
}

std::vector<Integer> stirling_row(std::size_t n) {
  std::vector<Integer> row(n + 1, Integer(0));
  row[0] = 1;
  std::vector<Integer> next;
  for (std::size_t k = 1; k <= n; ++k) {
    next_row(row, next, k);
    row.swap(next);
  }
  return row;
}

StirlingColumnTable::StirlingColumnTable(std::size_t n_max, std::size_t m_max)
    : m_max_(m_max), rows_(n_max + 1) {
  rows_[0].assign(m_max + 1, Integer(0));
  rows_[0][0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) next_row(rows_[n - 1], rows_[n], n);
}

const Integer& StirlingColumnTable::operator()(std::size_t n, std::size_t m) const {
  if (n >= rows_.size() || m > m_max_) throw std::out_of_range("Stirling table index out of range");
  return rows_[n][m];
}

bool sibuya_strict_check(std::size_t n) {
  if (n < 3) throw std::invalid_argument("sibuya_strict_check needs n >= 3");
  const auto s = stirling_row(n);
  for (std::size_t m = 2; m + 1 <= n; ++m) {
    const Integer lhs = s[m] * s[m] * static_cast<unsigned long>(m);
    const Integer rhs = s[m + 1] * s[m - 1] * static_cast<unsigned long>(m + 1);
    if (!(lhs > rhs)) return false;
  }
  return true;
}

bool harmonic_column_identity(std::size_t n, const Triangle* tilde_one_one) {
  if (n < 2) throw std::invalid_argument("harmonic_column_identity needs n >= 2");
  const Integer fact = factorial(n - 1);
  const Rational h = harmonic(n - 1);
  if (stirling_first(n, 1) != fact) return false;
  if (Rational(stirling_first(n, 2)) != Rational(fact) * h) return false;

  std::optional<Triangle> local;
  if (tilde_one_one == nullptr) {
    local = build_triangle(tilde(ArithFn::one()), HKind::kOne, n, 2);
    tilde_one_one = &*local;
  }
  const Rational expected = make_rational(2, static_cast<unsigned long>(n)) * h;
  return tilde_one_one->at(n, 2) == expected;
}

Rational delta(std::size_t n) {
  if (n < 2) throw std::invalid_argument("delta needs n >= 2");
  const Rational nn(Integer(static_cast<unsigned long>(n)));
  const Rational h1 = harmonic(n - 1);
  const Rational h0 = harmonic(n);
  const Rational h2 = harmonic(n - 2);
  const Rational defining = (nn * nn - 1) * h1 * h1 - nn * nn * h0 * h2;
  const Rational simplified = nn / (nn - 1) * (h1 + 1) - h1 * h1;
  if (defining != simplified) {
    throw std::logic_error("Delta(" + std::to_string(n) + ") forms disagree: " +
                           to_string(defining) + " vs " + to_string(simplified));
  }
  return defining;
}

std::vector<Rational> delta_sequence(std::size_t n_to) {
  std::vector<Rational> out;
  if (n_to < 2) return out;
  out.reserve(n_to - 1);
  Rational h_prev2 = 0;  // H(n-2)
  Rational h_prev1 = 1;  // H(n-1)
  for (std::size_t n = 2; n <= n_to; ++n) {
    const Rational nn(Integer(static_cast<unsigned long>(n)));
    const Rational h_n = h_prev1 + 1 / nn;
    const Rational defining = (nn * nn - 1) * h_prev1 * h_prev1 - nn * nn * h_n * h_prev2;
    const Rational simplified = nn / (nn - 1) * (h_prev1 + 1) - h_prev1 * h_prev1;
    if (defining != simplified) {
      throw std::logic_error("Delta(" + std::to_string(n) + ") forms disagree");
    }
    out.push_back(defining);
    h_prev2 = h_prev1;
    h_prev1 = h_n;
  }
  return out;
}

std::vector<std::optional<std::size_t>> stirling_vertical_first_failures(std::size_t m_max,
                                                                        std::size_t n_limit) {
  std::vector<std::optional<std::size_t>> first(m_max + 1);
  std::size_t open = m_max;
  // Rolling window S(n-1,.), S(n,.), S(n+1,.) over columns 0..m_max.
  std::vector<Integer> before(m_max + 1, Integer(0));
  std::vector<Integer> here(m_max + 1, Integer(0));
  std::vector<Integer> after;
  before[0] = 1;                    // n - 1 = 0
  next_row(before, here, 1);        // n = 1
  Integer lhs;
  Integer rhs;
  for (std::size_t n = 1; n <= n_limit && open > 0; ++n) {
    next_row(here, after, n + 1);
    for (std::size_t m = 1; m <= m_max; ++m) {
      if (first[m]) continue;
      lhs = here[m] * here[m];
      lhs *= static_cast<unsigned long>(n + 1);
      rhs = before[m] * after[m];
      rhs *= static_cast<unsigned long>(n);
      if (lhs < rhs) {
        first[m] = n;
        --open;
      }
    }
    before.swap(here);
    here.swap(after);
  }
  first.erase(first.begin());
  return first;
}

}  // namespace lclab
