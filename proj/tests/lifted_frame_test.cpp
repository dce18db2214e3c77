#include <gtest/gtest.h>

#include "test_support.hpp"
#include "trilie/errors.hpp"
#include "trilie/invariants.hpp"
#include "trilie/lifted_frame.hpp"

using namespace trilie;
using namespace trilie::testing;

namespace {

GammaTuple gamma(const char* text) { return GammaTuple::parse(text); }

ExpScalar ex(const Polynomial& p, long grade = 0) { return ExpScalar(p, Rational(grade)); }

Polynomial b(int i, int j) { return Polynomial::var(VarId::b(i, j)); }
Polynomial y(int i, int j) { return Polynomial::var(VarId::y(i, j)); }
Polynomial y0() { return Polynomial::var(VarId::y0()); }

// Sets every b_ij to zero and eps to zero.
Polynomial at_identity(const ExpScalar& s) {
  Polynomial p = s.at_zero_grade();
  std::map<VarId, Polynomial> zero;
  for (VarId v : p.variables()) {
    if (v.kind() == VarKind::B) zero.emplace(v, Polynomial());
  }
  return p.substitute(zero);
}

}  // namespace

TEST(Frame, InverseIsExact) {
  for (const char* text : {"1,-1", "1,0,1", "1,2,-3,1", "2,1,0,1,2"}) {
    const auto frame = LiftedFrame::generic(gamma(text));
    const ExpMatrix prod = multiply(frame.B, frame.Binv);
    for (int i = 0; i < frame.n(); ++i) {
      for (int j = 0; j < frame.n(); ++j) EXPECT_EQ(prod(i, j), ExpScalar(i == j ? 1 : 0)) << text;
      EXPECT_EQ(frame.B(i, i), ExpScalar::unit(frame.gamma(i + 1)));
    }
  }
}

TEST(AdjointAction, IdentityFrame) {
  const GammaTuple g = gamma("1,0,2");
  const ExpMatrix Y = algebra_matrix(g);
  EXPECT_TRUE(adjoint_action(LiftedFrame::identity(g), Y) == Y);
}

TEST(AdjointAction, TwoByTwoEntry) {
  const GammaTuple g = gamma("3,1");
  const ExpMatrix ad = adjoint_action(LiftedFrame::generic(g), algebra_matrix(g));
  // y_12 u^{g1-g2} + (g2 - g1) y_0 b_12 u^{-g2}
  EXPECT_EQ(ad(0, 1), ex(y(1, 2), 2) + ex(c(-2) * y0() * b(1, 2), -1));
  EXPECT_EQ(ad(0, 0), ex(c(3) * y0()));
  EXPECT_EQ(ad(1, 1), ex(y0()));
  EXPECT_TRUE(ad(1, 0).is_zero());
}

TEST(AdjointAction, PreservesTrace) {
  const GammaTuple g = gamma("1,2,-3,1");
  const ExpMatrix Y = algebra_matrix(g);
  const ExpMatrix ad = adjoint_action(LiftedFrame::generic(g), Y);
  ExpScalar t0;
  ExpScalar t1;
  for (int i = 0; i < 4; ++i) {
    t0 += Y(i, i);
    t1 += ad(i, i);
  }
  EXPECT_EQ(t0, t1);
}

TEST(AdjointAction, ShapeErrors) {
  const GammaTuple g = gamma("1,0");
  const auto frame = LiftedFrame::generic(g);
  try {
    adjoint_action(frame, ExpMatrix::Constant(3, 3, ExpScalar()));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ShapeMismatch);
  }
  ExpMatrix lower = algebra_matrix(g);
  lower(1, 0) = ExpScalar(1);
  EXPECT_THROW(adjoint_action(frame, lower), Error);
}

TEST(LiftedInvariants, TwoByTwo) {
  const GammaTuple g = gamma("1,-1");
  const auto s = lifted_invariants(LiftedFrame::generic(g));
  EXPECT_EQ(s.I(1, 0), ex(x(2, 1), -2));
}

TEST(LiftedInvariants, IdentityFrameRecoversCoordinates) {
  for (const char* text : {"1,0,1", "1,2,-3,1", "0,1,0,2,0"}) {
    const GammaTuple g = gamma(text);
    const auto id = lifted_invariants(LiftedFrame::identity(g));
    const auto gen = lifted_invariants(LiftedFrame::generic(g));
    EXPECT_EQ(id.I0, ex(x0()));
    EXPECT_EQ(at_identity(gen.I0), x0());
    for (int i = 1; i <= g.n(); ++i) {
      for (int j = 1; j < i; ++j) {
        EXPECT_EQ(id.I(i - 1, j - 1), ex(x(i, j)));
        EXPECT_EQ(at_identity(gen.I(i - 1, j - 1)), x(i, j));
      }
    }
  }
}

TEST(LiftedInvariants, DisplayMatchesConjugationAndDuality) {
  for (const char* text : {"1,-1", "1,0,1", "1,2,3", "1,0,0,1", "1,2,-2,-1", "2,1,0,1,2", "1,0,0,0,-2"}) {
    const GammaTuple g = gamma(text);
    const auto frame = LiftedFrame::generic(g);
    const auto s = lifted_invariants(frame);
    const ExpMatrix conj = conjugated_dual_matrix(frame);
    const auto dual = lifted_invariants_by_duality(frame);
    for (int i = 0; i < g.n(); ++i) {
      for (int j = 0; j < i; ++j) {
        EXPECT_EQ(s.I(i, j), conj(i, j)) << text;
        EXPECT_EQ(s.I(i, j), dual.I(i, j)) << text;
      }
    }
    EXPECT_EQ(s.I0, dual.I0) << text;
    EXPECT_TRUE(verify_conjugation_identity(frame, s)) << text;
  }
}

TEST(LiftedInvariants, CorruptedEntryFailsConjugation) {
  const GammaTuple g = gamma("1,0,1");
  const auto frame = LiftedFrame::generic(g);
  auto s = lifted_invariants(frame);
  s.I(1, 0) += ExpScalar(1);
  EXPECT_FALSE(verify_conjugation_identity(frame, s));
}

TEST(InessentialParameter, CenterOnlyWhenEndsAgree) {
  for (const char* text : {"1,0,1", "1,0,0,1", "1,2,-3,1", "2,1,0,1,2", "0,3,1,0"}) {
    const auto chk = check_inessential_parameter(gamma(text));
    EXPECT_TRUE(chk.central) << text;
    EXPECT_TRUE(chk.dI0.is_zero()) << text;
    EXPECT_TRUE(chk.passed()) << text;
  }
  for (const char* text : {"1,-1", "1,0,0", "1,0,0,-2", "1,2,3,4,5"}) {
    const auto chk = check_inessential_parameter(gamma(text));
    EXPECT_FALSE(chk.central) << text;
    EXPECT_FALSE(chk.dI0.is_zero()) << text;
    EXPECT_TRUE(chk.passed()) << text;
  }
}

TEST(SubmatrixIdentities, InParticularForN4) {
  // x_32 - x_31 x_42 / x_41 = -(x_31 x_42 - x_32 x_41) / x_41.
  const auto chk = submatrix_identity_check(4, 2);
  EXPECT_FALSE(chk.vacuous);
  EXPECT_TRUE(chk.particular);
  const RationalFunction lhs = RationalFunction(x(3, 2)) - RationalFunction(x(3, 1) * x(4, 2), x(4, 1));
  EXPECT_EQ(lhs, RationalFunction(-minor(4, 2, Vars::Dual), x(4, 1)));
}

TEST(SubmatrixIdentities, AllAdmissible) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k < n; ++k) {
      const auto chk = submatrix_identity_check(n, k);
      EXPECT_TRUE(chk.passed()) << n << " " << k << " " << (chk.failures.empty() ? "" : chk.failures[0]);
    }
  }
  EXPECT_FALSE(submatrix_identity_check(5, 2).vacuous);
  EXPECT_FALSE(submatrix_identity_check(6, 3).vacuous);
  EXPECT_THROW(submatrix_identity_check(4, 1), Error);
  EXPECT_THROW(submatrix_identity_check(4, 4), Error);
}

TEST(Normalization, SmallCases) {
  for (const char* text : {"1,-1", "0,1", "1,0,1", "1,0,0", "1,0,0,1", "1,0,0,-2", "2,1,0,1,2", "1,0,0,0,-2"}) {
    const auto report = verify_normalization_solution(gamma(text));
    for (const auto& c : report.checks) {
      EXPECT_TRUE(c.status) << text << " " << c.subsystem << " k=" << c.k << " " << c.detail;
    }
  }
}

TEST(Normalization, OddMiddleRowIsChecked) {
  const auto report = verify_normalization_solution(gamma("2,1,0,1,2"));
  bool saw_s1_k3 = false;
  bool saw_s3_k2 = false;
  for (const auto& c : report.checks) {
    if (c.subsystem == "S1" && c.k == 3) saw_s1_k3 = true;
    if (c.subsystem == "S3" && c.k == 2) saw_s3_k2 = true;
  }
  EXPECT_TRUE(saw_s1_k3);
  EXPECT_TRUE(saw_s3_k2);
  EXPECT_TRUE(report.passed());
}

TEST(Normalization, TwoByTwoSingleEquation) {
  const auto report = verify_normalization_solution(gamma("3,-1"));
  ASSERT_TRUE(report.passed());
  int s2 = 0;
  for (const auto& c : report.checks) s2 += c.subsystem == "S2" ? c.equations : 0;
  EXPECT_EQ(s2, 1);
}

TEST(Normalization, LimitedToSmallN) {
  EXPECT_THROW(verify_normalization_solution(gamma("1,2,3,4,5,6,7")), Error);
}

TEST(Normalization, SixBySix) {
  for (const char* text : {"1,0,2,2,0,1", "1,2,3,4,5,6", "0,1,0,0,1,0"}) {
    const auto report = verify_normalization_solution(gamma(text));
    EXPECT_TRUE(report.passed()) << text;
    int equations = 0;
    for (const auto& c : report.checks) equations += c.equations;
    EXPECT_GT(equations, 10) << text;
  }
}
