#include <gtest/gtest.h>

#include "lclab/poly.hpp"

using lclab::Poly;
using lclab::Rational;

TEST(Poly, TrimAndDegree) {
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_EQ(Poly({Rational(1), Rational(0), Rational(0)}).degree(), 0);
  EXPECT_TRUE(Poly({Rational(0)}).is_zero());
  EXPECT_EQ(Poly::monomial(2, 3)[3], Rational(2));
  EXPECT_EQ(Poly::monomial(2, 3)[7], Rational(0));
}

TEST(Poly, ArithmeticAndEvaluate) {
  const Poly a({Rational(1), Rational(1)});   // 1 + x
  const Poly b({Rational(-1), Rational(1)});  // -1 + x
  EXPECT_EQ(a * b, Poly({Rational(-1), Rational(0), Rational(1)}));
  EXPECT_EQ(a + b, Poly({Rational(0), Rational(2)}));
  EXPECT_EQ(lclab::evaluate(a * a * a, Rational(2)), Rational(27));
  EXPECT_TRUE((a + Rational(-1) * a).is_zero());
}

TEST(Poly, TaylorShift) {
  const Poly p({Rational(0), Rational(0), Rational(1)});  // x^2
  EXPECT_EQ(lclab::taylor_shift(p, Rational(1)), Poly({Rational(1), Rational(2), Rational(1)}));
  const Poly q({Rational(3), Rational(-1), Rational(5), Rational(2)});
  for (int a = -3; a <= 3; ++a) {
    const Poly shifted = lclab::taylor_shift(q, Rational(a));
    for (int x = -4; x <= 4; ++x) {
      EXPECT_EQ(lclab::evaluate(shifted, Rational(x)), lclab::evaluate(q, Rational(x + a)));
    }
  }
}
