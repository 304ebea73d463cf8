#include "lclab/triangle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace lclab {

std::string to_string(HKind h) { return h == HKind::kOne ? "one" : "id"; }

unsigned long h_value(HKind h, std::size_t n) {
  return h == HKind::kOne ? 1ul : static_cast<unsigned long>(n);
}

Triangle::Triangle(ArithFn g, HKind h, std::size_t column_limit,
                   std::vector<std::vector<Integer>> scaled_rows, std::vector<Integer> row_scales,
                   std::vector<unsigned long> scale_steps)
    : g_(std::move(g)),
      h_(h),
      column_limit_(column_limit),
      rows_(std::move(scaled_rows)),
      scales_(std::move(row_scales)),
      steps_(std::move(scale_steps)) {
  if (rows_.empty()) throw std::invalid_argument("triangle needs at least row 0");
  if (scales_.size() != rows_.size()) throw std::invalid_argument("one scale per row required");
  if (!steps_.empty() && steps_.size() != rows_.size()) {
    throw std::invalid_argument("scale steps must cover every row");
  }
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != std::min(n, column_limit_)) {
      throw std::invalid_argument("row " + std::to_string(n) + " has the wrong length");
    }
    if (scales_[n] <= 0) throw std::invalid_argument("row scales must be positive");
  }
  column_limit_ = std::min(column_limit_, max_row());
}

void Triangle::check_column(std::size_t n, std::size_t m) const {
  if (n > max_row()) {
    throw std::out_of_range("row " + std::to_string(n) + " beyond triangle size " +
                            std::to_string(max_row()));
  }
  if (m > column_limit_ && m <= n) {
    throw std::out_of_range("column " + std::to_string(m) + " beyond column limit " +
                            std::to_string(column_limit_));
  }
}

Rational Triangle::at(std::size_t n, std::size_t m) const {
  check_column(n, m);
  if (n == 0 && m == 0) return 1;
  if (m == 0 || m > n) return 0;
  return make_rational(rows_[n][m - 1], scales_[n]);
}

Integer Triangle::scaled(std::size_t n, std::size_t m) const {
  check_column(n, m);
  if (n == 0 && m == 0) return scales_[0];
  if (m == 0 || m > n) return 0;
  return rows_[n][m - 1];
}

std::vector<Rational> Triangle::row(std::size_t n) const {
  if (n > max_row()) throw std::out_of_range("row beyond triangle size");
  if (n > column_limit_) throw std::out_of_range("row is clipped by the column limit");
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t m = 1; m <= n; ++m) out.push_back(make_rational(rows_[n][m - 1], scales_[n]));
  return out;
}

Triangle Triangle::truncated(std::size_t max_row, std::size_t column_limit) const {
  if (max_row > this->max_row()) throw std::out_of_range("cannot extend a triangle by truncation");
  const std::size_t new_limit = std::min(column_limit, max_row);
  if (new_limit > column_limit_ && column_limit_ < max_row) {
    throw std::out_of_range("requested columns exceed the stored column limit");
  }
  std::vector<std::vector<Integer>> rows(max_row + 1);
  for (std::size_t n = 0; n <= max_row; ++n) {
    const std::size_t len = std::min(n, new_limit);
    rows[n].assign(rows_[n].begin(), rows_[n].begin() + static_cast<std::ptrdiff_t>(len));
  }
  std::vector<Integer> scales(scales_.begin(), scales_.begin() + static_cast<std::ptrdiff_t>(max_row + 1));
  std::vector<unsigned long> steps;
  if (!steps_.empty()) {
    steps.assign(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(max_row + 1));
  }
  return Triangle(g_, h_, new_limit, std::move(rows), std::move(scales), std::move(steps));
}

namespace {

// Integer-valued g. With B_{n,m} = L_n A_{n,m}, L_n = prod_{k<=n} h(k):
//   h = 1:  B_{n,m} = sum_k g(k) B_{n-k,m-1}
//   h = id: B_{n,m} = sum_k g(k) (n-1)(n-2)...(n-k+1) B_{n-k,m-1}
// The id sum is evaluated Horner-style from k = n-m+1 down to 1 so every
// step is one big-by-word multiply and one multiply-add.
Triangle build_integral(const ArithFn& g, HKind h, std::size_t max_row, std::size_t limit) {
  std::vector<Integer> gv(max_row + 1);
  std::vector<unsigned long> gsmall(max_row + 1, 0);
  bool all_small = true;
  for (std::size_t k = 1; k <= max_row; ++k) {
    const Rational v = g.eval(k);
    gv[k] = v.get_num();
    if (gv[k] >= 0 && mpz_fits_ulong_p(gv[k].get_mpz_t())) {
      gsmall[k] = gv[k].get_ui();
    } else {
      all_small = false;
    }
  }

  std::vector<std::vector<Integer>> rows(max_row + 1);
  std::vector<Integer> scales(max_row + 1);
  std::vector<unsigned long> steps(max_row + 1, 1);
  scales[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n <= max_row; ++n) {
    steps[n] = h_value(h, n);
    scales[n] = scales[n - 1] * steps[n];
    const std::size_t width = std::min(n, limit);
    auto& row = rows[n];
    row.resize(width);
    // m = 1: A_{n,1} = g(n)/h(n), so B_{n,1} = g(n) L_{n-1}.
    row[0] = gv[n] * scales[n - 1];
    for (std::size_t m = 2; m <= width; ++m) {
      const std::size_t top = n - m + 1;
      mpz_mul(acc.get_mpz_t(), gv[top].get_mpz_t(), rows[n - top][m - 2].get_mpz_t());
      for (std::size_t k = top - 1; k >= 1; --k) {
        if (h == HKind::kId) mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), n - k);
        const mpz_srcptr prev = rows[n - k][m - 2].get_mpz_t();
        if (all_small) {
          mpz_addmul_ui(acc.get_mpz_t(), prev, gsmall[k]);
        } else {
          mpz_addmul(acc.get_mpz_t(), gv[k].get_mpz_t(), prev);
        }
      }
      row[m - 1] = acc;
    }
  }
  return Triangle(g, h, limit, std::move(rows), std::move(scales), std::move(steps));
}

Triangle build_rational(const ArithFn& g, HKind h, std::size_t max_row, std::size_t limit) {
  std::vector<Rational> gv(max_row + 1);
  for (std::size_t k = 1; k <= max_row; ++k) gv[k] = g.eval(k);

  std::vector<std::vector<Rational>> a(max_row + 1);
  a[0] = {Rational(1)};  // a[n][m] for 0 <= m <= width(n)
  std::vector<std::vector<Integer>> rows(max_row + 1);
  std::vector<Integer> scales(max_row + 1);
  scales[0] = 1;
  for (std::size_t n = 1; n <= max_row; ++n) {
    const std::size_t width = std::min(n, limit);
    const Rational inv_h(1, h_value(h, n));
    a[n].assign(width + 1, Rational(0));
    for (std::size_t m = 1; m <= width; ++m) {
      Rational sum = 0;
      for (std::size_t k = 1; k <= n - m + 1; ++k) {
        const auto& prev = a[n - k];
        if (m - 1 < prev.size()) sum += gv[k] * prev[m - 1];
      }
      a[n][m] = sum * inv_h;
    }
    Integer lcd = 1;
    for (std::size_t m = 1; m <= width; ++m) {
      mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), a[n][m].get_den_mpz_t());
    }
    scales[n] = lcd;
    rows[n].reserve(width);
    for (std::size_t m = 1; m <= width; ++m) {
      rows[n].push_back(a[n][m].get_num() * (lcd / a[n][m].get_den()));
    }
  }
  return Triangle(g, h, limit, std::move(rows), std::move(scales), {});
}

}  // namespace

Triangle build_triangle(const ArithFn& g, HKind h, std::size_t max_row,
                        std::optional<std::size_t> column_limit) {
  if (auto limit = g.domain_limit(); limit && *limit < max_row) {
    throw std::out_of_range("'" + g.label() + "' is tabulated only for n <= " + std::to_string(*limit));
  }
  ArithFn filled = g;
  filled.fill(max_row);
  const std::size_t limit = std::min(column_limit.value_or(max_row), max_row);
  if (filled.integral_on(max_row)) return build_integral(filled, h, max_row, limit);
  return build_rational(filled, h, max_row, limit);
}

Poly row_poly(const Triangle& tri, std::size_t n) {
  if (n > tri.max_row()) throw std::out_of_range("row beyond triangle size");
  if (n == 0) return Poly::constant(1);
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  coeffs.emplace_back(0);
  for (auto& c : tri.row(n)) coeffs.push_back(std::move(c));
  return Poly(std::move(coeffs));
}

Triangle convert(const Triangle& tri) {
  if (tri.h() != HKind::kId) throw std::invalid_argument("convert expects a triangle with h = id");
  std::vector<std::vector<Integer>> rows(tri.max_row() + 1);
  std::vector<Integer> scales(tri.max_row() + 1);
  for (std::size_t n = 0; n <= tri.max_row(); ++n) {
    scales[n] = tri.row_scale(n);
    const auto src = tri.scaled_row(n);
    rows[n].reserve(src.size());
    Integer mfact = 1;
    for (std::size_t m = 1; m <= src.size(); ++m) {
      mfact *= static_cast<unsigned long>(m);
      rows[n].push_back(src[m - 1] * mfact);
    }
  }
  std::vector<unsigned long> steps(tri.scale_steps().begin(), tri.scale_steps().end());
  return Triangle(tilde(tri.g()), HKind::kOne, tri.column_limit(), std::move(rows),
                  std::move(scales), std::move(steps));
}

}  // namespace lclab
