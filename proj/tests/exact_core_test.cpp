#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "trilie/errors.hpp"
#include "trilie/exp_scalar.hpp"
#include "trilie/matrix.hpp"
#include "trilie/polynomial.hpp"
#include "trilie/rational.hpp"
#include "trilie/rational_function.hpp"

using namespace trilie;
using namespace trilie::testing;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(Rational::parse("-3/2"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("+4"), Rational(4));
  EXPECT_EQ(Rational::parse(" 6/4 ").str(), "3/2");
}

TEST(Rational, ParseErrors) {
  EXPECT_THROW(Rational::parse("1.5"), Error);
  EXPECT_THROW(Rational::parse("a/2"), Error);
  EXPECT_THROW(Rational::parse("1/-2"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
  try {
    Rational::parse("3/0");
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(Variable, NamesRoundTrip) {
  for (VarId v : {VarId::x0(), VarId::x(3, 1), VarId::e(1, 2), VarId::f(), VarId::b(2, 4),
                  VarId::bh(1, 3), VarId::y0(), VarId::y(1, 2), VarId::aux(1)}) {
    EXPECT_EQ(VarId::parse(v.name()), v);
  }
  EXPECT_EQ(VarId::x(3, 1).name(), "x_3_1");
  EXPECT_EQ(VarId::x(3, 1).latex(), "x_{31}");
  EXPECT_THROW(VarId::x(1, 3), Error);
  EXPECT_THROW(VarId::e(3, 1), Error);
  EXPECT_THROW(VarId::parse("z_1_2"), Error);
}

TEST(Variable, CanonicalOrder) {
  EXPECT_LT(VarId::x0(), VarId::x(2, 1));
  EXPECT_LT(VarId::x(2, 1), VarId::x(3, 1));
  EXPECT_LT(VarId::x(3, 1), VarId::x(3, 2));
  EXPECT_LT(VarId::x(9, 8), VarId::e(1, 2));
  EXPECT_LT(VarId::e(7, 8), VarId::f());
  EXPECT_LT(VarId::f(), VarId::b(1, 2));
}

TEST(PolyArith, Examples) {
  EXPECT_EQ((x(2, 1) + c(1)) * (x(2, 1) - c(1)), x(2, 1) * x(2, 1) - c(1));
  const Polynomial p = x(3, 1) * x(4, 2) - x(4, 1) * x(3, 2);
  EXPECT_EQ(p + Polynomial(), p);
  EXPECT_EQ(p - x(3, 1) * x(4, 2), -(x(4, 1) * x(3, 2)));
  EXPECT_TRUE((p - p).is_zero());
}

TEST(PolyArith, CanonicalPrinting) {
  const Polynomial delta2 = x(3, 1) * x(4, 2) - x(3, 2) * x(4, 1);
  EXPECT_EQ(delta2.str(), "x_3_1*x_4_2 - x_3_2*x_4_1");
  EXPECT_EQ(delta2.latex(), "x_{31}x_{42}-x_{32}x_{41}");
  EXPECT_EQ((x0() * x(3, 1) + x(2, 1) * x(3, 2)).str(), "x_0*x_3_1 + x_2_1*x_3_2");
  EXPECT_EQ((x(2, 1) * x(2, 1) - c(1)).str(), "x_2_1^2 - 1");
  EXPECT_EQ((Rational(1, 2) * e(1, 3)).latex(), "\\frac{1}{2}e_{13}");
  EXPECT_EQ(Polynomial().str(), "0");
}

TEST(PolyArith, RingAxiomsRandomized) {
  std::mt19937_64 rng(20240517);
  const std::vector<VarId> vars{VarId::x0(), VarId::x(2, 1), VarId::x(3, 1), VarId::x(3, 2)};
  for (int trial = 0; trial < 1000; ++trial) {
    const Polynomial a = random_polynomial(rng, vars, 3, 4);
    const Polynomial b = random_polynomial(rng, vars, 3, 4);
    const Polynomial d = random_polynomial(rng, vars, 3, 4);
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + d, a + (b + d));
  }
}

TEST(DivideExact, Examples) {
  EXPECT_EQ(divide_exact(c(2) * x(2, 1) * x(3, 1), x(2, 1)), c(2) * x(3, 1));
  EXPECT_FALSE(divide_exact(x(2, 1) + c(1), x(2, 1)).has_value());
  const Polynomial delta2 = x(3, 1) * x(4, 2) - x(4, 1) * x(3, 2);
  EXPECT_EQ(divide_exact(delta2 * x(4, 1), delta2), x(4, 1));
  try {
    divide_exact(x(2, 1), Polynomial());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(DivideExact, RecoversRandomFactor) {
  std::mt19937_64 rng(7);
  const std::vector<VarId> vars{VarId::x(2, 1), VarId::x(3, 1), VarId::x(3, 2), VarId::x(4, 1)};
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial a = random_polynomial(rng, vars, 3, 4);
    Polynomial b = random_polynomial(rng, vars, 3, 4);
    if (b.is_zero()) b = c(3);
    const auto q = divide_exact(a * b, b);
    ASSERT_TRUE(q.has_value());
    ASSERT_EQ(*q, a);
  }
}

TEST(Derivative, Examples) {
  EXPECT_EQ((x(2, 1) * x(2, 1) * x(3, 2)).derivative(VarId::x(2, 1)), c(2) * x(2, 1) * x(3, 2));
  EXPECT_TRUE(x(3, 1).derivative(VarId::x(2, 1)).is_zero());
  // Expand the n = 4, k = 2 minor by hand, then differentiate.
  const Polynomial delta2 = x(3, 1) * x(4, 2) - x(4, 1) * x(3, 2);
  EXPECT_EQ(delta2.derivative(VarId::x(4, 1)), -x(3, 2));
}

TEST(Derivative, LinearityAndLeibniz) {
  std::mt19937_64 rng(11);
  const std::vector<VarId> vars{VarId::x0(), VarId::x(2, 1), VarId::x(3, 2)};
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_polynomial(rng, vars, 3, 4);
    const Polynomial b = random_polynomial(rng, vars, 3, 4);
    for (VarId v : vars) {
      ASSERT_EQ((a + b).derivative(v), a.derivative(v) + b.derivative(v));
      ASSERT_EQ((a * b).derivative(v), a.derivative(v) * b + a * b.derivative(v));
    }
  }
}

TEST(Determinant, Examples) {
  PolyMatrix m(2, 2);
  m << x(3, 1), x(3, 2), x(4, 1), x(4, 2);
  EXPECT_EQ(determinant(m), x(3, 1) * x(4, 2) - x(3, 2) * x(4, 1));

  PolyMatrix id = PolyMatrix::Constant(3, 3, Polynomial());
  for (int i = 0; i < 3; ++i) id(i, i) = c(1);
  EXPECT_EQ(determinant(id), c(1));

  PolyMatrix rect(2, 3);
  EXPECT_THROW(determinant(rect), Error);
  EXPECT_EQ(determinant(PolyMatrix(0, 0)), c(1));
}

TEST(Determinant, DistinctVariables3x3MatchesPermutationSum) {
  PolyMatrix m(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) m(r, col) = Polynomial::var(VarId::aux(1 + 3 * r + col));
  }
  const Polynomial det = determinant(m);
  EXPECT_EQ(det, permutation_determinant(m));
  EXPECT_EQ(det.size(), 6u);
}

TEST(Determinant, RandomEntriesMatchPermutationSum) {
  std::mt19937_64 rng(99);
  const std::vector<VarId> vars{VarId::x(2, 1), VarId::x(3, 1), VarId::x(3, 2)};
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      PolyMatrix m(n, n);
      for (int r = 0; r < n; ++r) {
        for (int col = 0; col < n; ++col) m(r, col) = random_polynomial(rng, vars, 2, 2);
      }
      ASSERT_EQ(determinant(m), permutation_determinant(m)) << "n = " << n;
    }
  }
}

TEST(Determinant, AdjugateIdentity) {
  PolyMatrix m(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) m(r, col) = Polynomial::var(VarId::aux(1 + 3 * r + col));
  }
  const PolyMatrix prod = multiply(adjugate(m), m);
  const Polynomial det = determinant(m);
  for (int r = 0; r < 3; ++r) {
    for (int col = 0; col < 3; ++col) EXPECT_EQ(prod(r, col), r == col ? det : Polynomial());
  }
}

TEST(Rank, ExactElimination) {
  RationalMatrix m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 0, Rational(1, 2);
  EXPECT_EQ(rank(m), 2);
  EXPECT_EQ(rank(RationalMatrix::Constant(2, 4, Rational(0))), 0);
}

TEST(RationalFunction, CanonicalAndEquality) {
  const RationalFunction a(c(2) * x(2, 1), c(-4) * x(3, 1));
  EXPECT_EQ(a.den(), x(3, 1));
  EXPECT_EQ(a.num(), -(Rational(1, 2) * x(2, 1)));
  // Equal values with different representations compare equal.
  const RationalFunction b(-(x(2, 1) * x(3, 2)), c(2) * x(3, 1) * x(3, 2));
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.same_representation(b));
  EXPECT_THROW(RationalFunction(c(1), Polynomial()), Error);
}

TEST(RationalFunction, QuotientRule) {
  const RationalFunction f(x(2, 1) * x(3, 2), x(3, 1));
  EXPECT_EQ(f.derivative(VarId::x(3, 1)),
            RationalFunction(-(x(2, 1) * x(3, 2)), x(3, 1) * x(3, 1)));
  EXPECT_EQ(f.derivative(VarId::x(2, 1)), RationalFunction(x(3, 2), x(3, 1)));
}

TEST(ExpScalar, GradesAddUnderProduct) {
  std::mt19937_64 rng(5);
  const std::vector<VarId> vars{VarId::b(1, 2), VarId::x(2, 1)};
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = random_polynomial(rng, vars, 2, 3);
    const Polynomial q = random_polynomial(rng, vars, 2, 3);
    const Rational ga(trial % 7 - 3, 2);
    const Rational gb(trial % 5 - 2, 3);
    const ExpScalar prod = ExpScalar(p, ga) * ExpScalar(q, gb);
    ASSERT_EQ(prod, ExpScalar(p * q, ga + gb));
  }
  const ExpScalar s = ExpScalar::unit(Rational(1)) + ExpScalar::unit(Rational(-1));
  EXPECT_EQ((s * s).part(Rational(0)), c(2));
  EXPECT_TRUE((ExpScalar::unit(Rational(1)) - ExpScalar::unit(Rational(1))).is_zero());
}
