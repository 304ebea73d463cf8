#include "lclab/arith_fn.hpp"
#include "lclab/series.hpp"
#include "lclab/stirling.hpp"
#include "lclab/triangle.hpp"

#include <stdexcept>

namespace lclab {

std::string to_string(ClosedForm family) {
  switch (family) {
    case ClosedForm::kOneOne: return "one_one";
    case ClosedForm::kIdId: return "id_id";
    case ClosedForm::kSId: return "s_id";
    case ClosedForm::kIdOne: return "id_one";
    case ClosedForm::kOneId: return "one_id";
    case ClosedForm::kTildeOneOne: return "tilde_one_one";
  }
  throw std::logic_error("unknown closed-form family");
}

ArithFn closed_form_g(ClosedForm family) {
  switch (family) {
    case ClosedForm::kOneOne:
    case ClosedForm::kOneId:
      return ArithFn::one();
    case ClosedForm::kIdId:
    case ClosedForm::kIdOne:
      return ArithFn::id();
    case ClosedForm::kSId:
      return ArithFn::square();
    case ClosedForm::kTildeOneOne:
      return tilde(ArithFn::one());
  }
  throw std::logic_error("unknown closed-form family");
}

HKind closed_form_h(ClosedForm family) {
  switch (family) {
    case ClosedForm::kIdId:
    case ClosedForm::kSId:
    case ClosedForm::kOneId:
      return HKind::kId;
    default:
      return HKind::kOne;
  }
}

Rational closed_form_oracle(ClosedForm family, std::size_t n, std::size_t m) {
  if (m < 1 || m > n) {
    throw std::out_of_range("closed forms cover 1 <= m <= n, got n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
  }
  const auto ln = static_cast<std::int64_t>(n);
  const auto lm = static_cast<std::int64_t>(m);
  switch (family) {
    case ClosedForm::kOneOne:
      return Rational(binomial(ln - 1, lm - 1));
    case ClosedForm::kIdId:
      return make_rational(binomial(ln - 1, lm - 1), factorial(m));
    case ClosedForm::kSId:
      return make_rational(binomial(ln + lm - 1, 2 * lm - 1), factorial(m));
    case ClosedForm::kIdOne:
      return Rational(binomial(ln + lm - 1, 2 * lm - 1));
    case ClosedForm::kOneId:
      return make_rational(stirling_first(n, m), factorial(n));
    case ClosedForm::kTildeOneOne:
      return make_rational(factorial(m) * stirling_first(n, m), factorial(n));
  }
  throw std::logic_error("unknown closed-form family");
}

CheckReport check_closed_forms(std::size_t n_max) {
  CheckReport report{.name = "closed-forms"};
  for (ClosedForm family : {ClosedForm::kOneOne, ClosedForm::kIdId, ClosedForm::kSId,
                            ClosedForm::kIdOne, ClosedForm::kOneId, ClosedForm::kTildeOneOne}) {
    const Triangle tri = build_triangle(closed_form_g(family), closed_form_h(family), n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t m = 1; m <= n; ++m) {
        ++report.comparisons;
        const Rational built = tri.at(n, m);
        const Rational expected = closed_form_oracle(family, n, m);
        if (built != expected) {
          report.fail({n, m}, to_string(family) + ": recursion gives " + to_string(built) +
                                  ", closed form gives " + to_string(expected));
        }
      }
    }
  }
  return report;
}

CheckReport check_conversion(const ArithFn& g, std::size_t n_max) {
  CheckReport report{.name = "conversion"};
  const Triangle exponential = build_triangle(g, HKind::kId, n_max);
  const Triangle geometric = build_triangle(tilde(g), HKind::kOne, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational mfact = 1;
    for (std::size_t m = 1; m <= n; ++m) {
      mfact *= static_cast<unsigned long>(m);
      ++report.comparisons;
      const Rational lhs = mfact * exponential.at(n, m);
      const Rational rhs = geometric.at(n, m);
      if (lhs != rhs) {
        report.fail({n, m}, "m! A^{g,id} = " + to_string(lhs) + " but A^{g~,1} = " + to_string(rhs));
      }
    }
  }
  return report;
}

std::vector<Rational> default_cross_check_points() {
  return {Rational(1), Rational(2), Rational(3), Rational(-1), make_rational(1, 2)};
}

CheckReport genfun_crosscheck(const ArithFn& g, HKind h, std::size_t n_max,
                              std::span<const Rational> xs) {
  if (xs.empty()) throw std::invalid_argument("genfun_crosscheck needs at least one x");
  CheckReport report{.name = "genfun"};
  const Triangle tri = build_triangle(g, h, n_max);
  const Series base = h == HKind::kId ? eichler_integral(g, n_max) : generating_series(g, n_max);
  for (const Rational& x : xs) {
    const Series scaled = x * base;
    const Series series = h == HKind::kId
                              ? exp(scaled)
                              : inverse(Series::constant(n_max, 1) - scaled);
    for (std::size_t n = 0; n <= n_max; ++n) {
      ++report.comparisons;
      const Rational value = evaluate(row_poly(tri, n), x);
      if (value != series[n]) {
        report.fail({n, 0}, "x=" + to_string(x) + ": P_n(x) = " + to_string(value) +
                                " but series coefficient = " + to_string(series[n]));
      }
    }
  }
  return report;
}

CheckReport euler_product_crosscheck(const ArithFn& g, std::size_t n_max, const Rational& x) {
  CheckReport report{.name = "euler"};
  const Triangle tri = build_triangle(g, HKind::kId, n_max);
  std::vector<Rational> exponents;
  if (n_max > 0) {
    const ArithFn f = moebius_convolve(g, n_max);
    exponents.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      exponents.push_back(-x * f.eval(n) / Rational(Integer(static_cast<unsigned long>(n))));
    }
  }
  const Series product = euler_product(exponents, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    ++report.comparisons;
    const Rational value = evaluate(row_poly(tri, n), x);
    if (value != product[n]) {
      report.fail({n, 0}, "x=" + to_string(x) + ": P_n(x) = " + to_string(value) +
                              " but Euler product coefficient = " + to_string(product[n]));
    }
  }
  return report;
}

}  // namespace lclab
