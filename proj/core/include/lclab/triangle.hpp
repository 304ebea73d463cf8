#pragma once

#include "lclab/arith_fn.hpp"
#include "lclab/poly.hpp"
#include "lclab/rational.hpp"
#include "lclab/report.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lclab {

/// The normalizing function h; only the constant 1 and the identity are supported.
enum class HKind { kOne, kId };

std::string to_string(HKind h);
unsigned long h_value(HKind h, std::size_t n);

/// The double sequence A_{n,m} of coefficients of P_n^{g,h}(x), 0 <= n <= N.
///
/// Stored integer-scaled: row n keeps L_n and the integers L_n * A_{n,m}.
/// For integer-valued g the scale is L_n = h(1) h(2) ... h(n); otherwise it is
/// the least common denominator of the row. A triangle may be column-limited,
/// holding only m <= column_limit(); reading past the limit throws.
class Triangle {
 public:
  /// scaled_rows[n][m - 1] = L_n A_{n,m} for 1 <= m <= min(n, column_limit);
  /// row 0 is empty (A_{0,0} = 1 implicitly). scale_steps, when non-empty,
  /// holds s_n = L_n / L_{n-1} for n = 1..N (index 0 unused).
  Triangle(ArithFn g, HKind h, std::size_t column_limit,
           std::vector<std::vector<Integer>> scaled_rows, std::vector<Integer> row_scales,
           std::vector<unsigned long> scale_steps);

  const ArithFn& g() const { return g_; }
  HKind h() const { return h_; }
  std::size_t max_row() const { return rows_.size() - 1; }
  std::size_t column_limit() const { return column_limit_; }
  bool is_full() const { return column_limit_ >= max_row(); }

  /// A_{n,m}; zero outside 1 <= m <= n except A_{0,0} = 1.
  /// Throws std::out_of_range for n > N or a clipped column.
  Rational at(std::size_t n, std::size_t m) const;

  /// L_n A_{n,m} for 1 <= m <= n (zero outside the shape).
  Integer scaled(std::size_t n, std::size_t m) const;
  const Integer& row_scale(std::size_t n) const { return scales_.at(n); }
  std::span<const Integer> scaled_row(std::size_t n) const { return rows_.at(n); }

  /// Integer ratios L_n / L_{n-1}, when the scales form such a chain.
  bool has_scale_steps() const { return !steps_.empty(); }
  unsigned long scale_step(std::size_t n) const { return steps_.at(n); }
  std::span<const unsigned long> scale_steps() const { return steps_; }

  /// A_{n,1..n}. Throws std::out_of_range when the row is clipped.
  std::vector<Rational> row(std::size_t n) const;

  /// Restriction to rows <= max_row and columns <= column_limit.
  Triangle truncated(std::size_t max_row, std::size_t column_limit) const;

 private:
  void check_column(std::size_t n, std::size_t m) const;

  ArithFn g_;
  HKind h_;
  std::size_t column_limit_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<Integer> scales_;
  std::vector<unsigned long> steps_;
};

/// Builds A^{g,h} for rows 0..N by
///   A_{n,m} = (1/h(n)) sum_{k=1}^{n-m+1} g(k) A_{n-k,m-1},  A_{0,0} = 1,
/// optionally keeping only columns m <= column_limit.
Triangle build_triangle(const ArithFn& g, HKind h, std::size_t max_row,
                        std::optional<std::size_t> column_limit = std::nullopt);

/// P_n(x) = A_{n,n} x^n + ... + A_{n,1} x; P_0 = 1.
Poly row_poly(const Triangle& tri, std::size_t n);

/// Maps A^{g,id} to A^{g~,1} via A'_{n,m} = m! A_{n,m}.
/// Throws std::invalid_argument unless tri.h() == HKind::kId.
Triangle convert(const Triangle& tri);

enum class ClosedForm { kOneOne, kIdId, kSId, kIdOne, kOneId, kTildeOneOne };

std::string to_string(ClosedForm family);
/// The pair (g, h) a closed-form family describes.
ArithFn closed_form_g(ClosedForm family);
HKind closed_form_h(ClosedForm family);

/// Known closed forms for A_{n,m}, 1 <= m <= n:
///   (1,1): C(n-1,m-1)          (id,id): C(n-1,m-1)/m!
///   (s,id): C(n+m-1,2m-1)/m!   (id,1):  C(n+m-1,2m-1)
///   (1,id): S(n,m)/n!          (1~,1):  m! S(n,m)/n!
/// with S the unsigned Stirling numbers of the first kind.
/// Throws std::out_of_range unless 1 <= m <= n.
Rational closed_form_oracle(ClosedForm family, std::size_t n, std::size_t m);

/// Compares build_triangle against closed_form_oracle on all six families.
CheckReport check_closed_forms(std::size_t n_max);

/// Builds A^{g,id} and A^{g~,1} independently and asserts m! A^{g,id} = A^{g~,1}.
CheckReport check_conversion(const ArithFn& g, std::size_t n_max);

/// The default evaluation points {1, 2, 3, -1, 1/2}.
std::vector<Rational> default_cross_check_points();

/// Compares P_n(x) from the triangle with the T^n coefficient of
/// exp(x E_g(T)) (h = id) or 1/(1 - x G(T)) (h = one), for every x and n <= N.
CheckReport genfun_crosscheck(const ArithFn& g, HKind h, std::size_t n_max,
                              std::span<const Rational> xs);

/// Compares P_n^{g,id}(x) with the T^n coefficient of
/// prod_n (1 - T^n)^{-x f(n)/n}, f = mu * g.
CheckReport euler_product_crosscheck(const ArithFn& g, std::size_t n_max, const Rational& x);

}  // namespace lclab
