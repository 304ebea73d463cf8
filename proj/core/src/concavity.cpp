#include "lclab/concavity.hpp"

#include "lclab/parallel.hpp"
#include "lclab/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace lclab {

std::string to_string(ConcavityMode mode) {
  switch (mode) {
    case ConcavityMode::kHorizontal: return "horizontal";
    case ConcavityMode::kVertical: return "vertical";
    case ConcavityMode::kCVertical: return "c_vertical";
  }
  throw std::logic_error("unknown concavity mode");
}

std::optional<std::size_t> is_logconcave(std::span<const Rational> seq) {
  for (const auto& v : seq) {
    if (v < 0) throw std::domain_error("log-concavity is defined for non-negative sequences");
  }
  static const Rational zero = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Rational& left = i == 0 ? zero : seq[i - 1];
    const Rational& right = i + 1 == seq.size() ? zero : seq[i + 1];
    if (seq[i] * seq[i] < left * right) return i;
  }
  return std::nullopt;
}

namespace {

// sign of A_{n,m}^2 - A_{n-1,m} A_{n+1,m}, for 1 <= n < N; sets tie when the
// difference is zero with a non-zero product.
int column_sign(const Triangle& tri, std::size_t n, std::size_t m, bool& tie) {
  const Integer here = tri.scaled(n, m);
  const Integer before = tri.scaled(n - 1, m);
  const Integer after = tri.scaled(n + 1, m);
  Integer lhs = here * here;
  Integer rhs = before * after;
  if (tri.has_scale_steps()) {
    // L_{n-1} L_{n+1} / L_n^2 = s_{n+1} / s_n
    lhs *= tri.scale_step(n + 1);
    rhs *= tri.scale_step(n);
  } else {
    lhs *= tri.row_scale(n - 1) * tri.row_scale(n + 1);
    rhs *= tri.row_scale(n) * tri.row_scale(n);
  }
  const int s = cmp(lhs, rhs);
  tie = s == 0 && rhs != 0;
  return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

void require_column(const Triangle& tri, std::size_t m) {
  if (m > tri.column_limit() && m <= tri.max_row()) {
    throw std::out_of_range("column " + std::to_string(m) + " exceeds the triangle's column limit " +
                            std::to_string(tri.column_limit()));
  }
}

}  // namespace

ConcavityReport horizontal_check(const Triangle& tri, std::size_t n_from, std::size_t n_to,
                                 unsigned jobs) {
  if (n_to > tri.max_row()) throw std::out_of_range("horizontal range exceeds the triangle");
  if (n_to > tri.column_limit() && n_to >= n_from && n_to > 0) {
    throw std::out_of_range("horizontal check needs complete rows");
  }
  ConcavityReport report{.mode = ConcavityMode::kHorizontal, .from = n_from, .to = n_to};
  if (n_from > n_to) return report;
  const std::size_t count = n_to - n_from + 1;
  std::vector<std::vector<Coord>> failures(count);
  std::vector<std::vector<Coord>> ties(count);
  parallel_for(count, jobs, [&](std::size_t idx) {
    const std::size_t n = n_from + idx;
    if (n == 0) return;
    // One scale per row, so the scaled integers decide the verdict.
    const auto row = tri.scaled_row(n);
    Integer lhs;
    Integer rhs;
    for (std::size_t i = 0; i < row.size(); ++i) {
      // Zero extension makes both ends hold trivially.
      if (i == 0 || i + 1 == row.size()) continue;
      lhs = row[i] * row[i];
      rhs = row[i - 1] * row[i + 1];
      const int s = cmp(lhs, rhs);
      if (s < 0) {
        failures[idx].push_back({n, i + 1});
      } else if (s == 0 && rhs != 0) {
        ties[idx].push_back({n, i + 1});
      }
    }
  });
  for (std::size_t i = 0; i < count; ++i) {
    report.failures.insert(report.failures.end(), failures[i].begin(), failures[i].end());
    report.ties.insert(report.ties.end(), ties[i].begin(), ties[i].end());
  }
  report.pass = report.failures.empty();
  return report;
}

ConcavityReport vertical_check(const Triangle& tri, std::size_t m_from, std::size_t m_to,
                               std::size_t n_to) {
  if (n_to > tri.max_row()) throw std::out_of_range("vertical range exceeds the triangle");
  ConcavityReport report{
      .mode = ConcavityMode::kVertical, .from = m_from, .to = m_to, .n_to = n_to};
  for (std::size_t m = std::max<std::size_t>(m_from, 1); m <= m_to; ++m) {
    require_column(tri, m);
    for (std::size_t n = 1; n + 1 <= n_to; ++n) {
      bool tie = false;
      const int s = column_sign(tri, n, m, tie);
      if (s < 0) report.failures.push_back({n, m});
      if (tie) report.ties.push_back({n, m});
    }
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Coord& a, const Coord& b) { return a.m != b.m ? a.m < b.m : a.n < b.n; });
  report.pass = report.failures.empty();
  return report;
}

std::optional<std::size_t> first_vertical_failure(const Triangle& tri, std::size_t m,
                                                  std::size_t n_limit) {
  if (m == 0) throw std::invalid_argument("first_vertical_failure needs m >= 1");
  require_column(tri, m);
  const std::size_t last = std::min(n_limit, tri.max_row() == 0 ? 0 : tri.max_row() - 1);
  for (std::size_t n = std::max<std::size_t>(m, 1); n <= last; ++n) {
    bool tie = false;
    if (column_sign(tri, n, m, tie) < 0) return n;
  }
  return std::nullopt;
}

std::size_t c_power_floor(const Rational& c, std::size_t m) {
  const Integer f = floor(pow(c, m));
  if (f < 0 || !mpz_fits_ulong_p(f.get_mpz_t())) {
    throw std::overflow_error("floor(C^m) is too large to scan");
  }
  return f.get_ui();
}

ConcavityReport c_vertical_check(const Triangle& tri, const Rational& c, std::size_t m_from,
                                 std::size_t m_to) {
  if (c <= 1) throw std::invalid_argument("vertical C-log-concavity needs C > 1");
  ConcavityReport report{.mode = ConcavityMode::kCVertical, .from = m_from, .to = m_to, .c = c};
  const std::size_t max_center = tri.max_row() == 0 ? 0 : tri.max_row() - 1;
  for (std::size_t m = std::max<std::size_t>(m_from, 1); m <= m_to; ++m) {
    require_column(tri, m);
    ColumnScan column{.m = m, .bound = c_power_floor(c, m)};
    column.last_center = std::min(column.bound, max_center);
    column.clipped = column.last_center < column.bound;
    for (std::size_t n = 1; n <= column.last_center; ++n) {
      bool tie = false;
      if (column_sign(tri, n, m, tie) < 0) {
        report.failures.push_back({n, m});
        column.pass = false;
      }
      if (tie) report.ties.push_back({n, m});
    }
    report.clipped = report.clipped || column.clipped;
    report.columns.push_back(column);
  }
  report.pass = report.failures.empty();
  return report;
}

HZCoefficients hong_zhang_coefficients(unsigned m, std::size_t n_max) {
  if (m == 0) throw std::invalid_argument("hong_zhang_coefficients needs m >= 1");
  ArithFn sigma = ArithFn::sigma();
  sigma.fill(n_max);
  const Series power = pow_int(eichler_integral(sigma, n_max), m);
  return {m, std::vector<Rational>(power.coefficients().begin(), power.coefficients().end())};
}

CheckReport hz_equivalence_check(std::size_t n_max, unsigned m_max) {
  CheckReport report{.name = "hz-equivalence"};
  ArithFn sigma = ArithFn::sigma();
  sigma.fill(n_max);
  const Triangle darcais = build_triangle(sigma, HKind::kId, n_max);
  const Triangle geometric = build_triangle(tilde(sigma), HKind::kOne, n_max);
  Rational mfact = 1;
  for (unsigned m = 1; m <= m_max; ++m) {
    mfact *= m;
    const HZCoefficients hz = hong_zhang_coefficients(m, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      ++report.comparisons;
      const Rational& b = hz.b[n];
      const Rational a_geo = m <= n_max ? geometric.at(n, m) : Rational(0);
      const Rational a_exp = m <= n_max ? mfact * darcais.at(n, m) : Rational(0);
      if (b != a_geo || b != a_exp) {
        report.fail({n, m}, "b = " + to_string(b) + ", A^{sigma~,1} = " + to_string(a_geo) +
                                ", m! A^{sigma,id} = " + to_string(a_exp));
      }
    }
  }
  return report;
}

ConcavityReport hong_zhang_scan(const Rational& c, unsigned m_max) {
  if (c <= 1) throw std::invalid_argument("the Hong-Zhang scan needs C > 1");
  if (m_max < 2) throw std::invalid_argument("the Hong-Zhang scan needs m_max >= 2");
  const std::size_t rows = c_power_floor(c, m_max) + 1;
  const Triangle darcais = build_triangle(ArithFn::sigma(), HKind::kId, rows, m_max);
  return c_vertical_check(darcais, c, 2, m_max);
}

}  // namespace lclab
