#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "trilie/coadjoint.hpp"
#include "trilie/errors.hpp"

using namespace trilie;
using namespace trilie::testing;

namespace {

const CoadjointOperator& op_for(const std::vector<CoadjointOperator>& ops, BasisIndex a) {
  for (const auto& op : ops) {
    if (op.source == a) return op;
  }
  throw std::logic_error("operator not found");
}

// |X^{n-k+1,n}_{1,k}| expanded through the permutation sum.
Polynomial delta(int n, int k) {
  PolyMatrix m(k, k);
  for (int r = 0; r < k; ++r) {
    for (int col = 0; col < k; ++col) m(r, col) = x(n - k + 1 + r, col + 1);
  }
  return permutation_determinant(m);
}

GammaTuple gamma(const char* text) { return GammaTuple::parse(text); }

}  // namespace

TEST(Operators, CentralElementActsTrivially) {
  const auto ops = build_operators(gamma("1,0,1"));
  EXPECT_EQ(ops.size(), 4u);
  EXPECT_TRUE(op_for(ops, BasisIndex::e(1, 3)).is_zero());
}

TEST(Operators, ReadOffBracketTable) {
  const auto ops = build_operators(gamma("1,0,1"));
  const auto& e12 = op_for(ops, BasisIndex::e(1, 2));
  EXPECT_EQ(e12.coefficient(VarId::x(3, 2)), x(3, 1));
  // [e_12, f] = -(gamma_1 - gamma_2) e_12 = -e_12.
  EXPECT_EQ(e12.coefficient(VarId::x0()), -x(2, 1));
  EXPECT_EQ(e12.action.size(), 2u);

  const auto ops2 = build_operators(gamma("1,-1"));
  const auto& fop = op_for(ops2, BasisIndex::f());
  ASSERT_EQ(fop.action.size(), 1u);
  EXPECT_EQ(fop.action[0].first, VarId::x(2, 1));
  EXPECT_EQ(fop.action[0].second, c(2) * x(2, 1));
}

TEST(Operators, HandWrittenFieldsForN3) {
  // Written out from [e_ij, e_jk] = e_ik and [f, e_ij] = (g_i - g_j) e_ij, g = (1, 2, 4).
  const auto ops = build_operators(gamma("1,2,4"));
  const auto& f_op = op_for(ops, BasisIndex::f());
  EXPECT_EQ(f_op.coefficient(VarId::x(2, 1)), c(-1) * x(2, 1));
  EXPECT_EQ(f_op.coefficient(VarId::x(3, 1)), c(-3) * x(3, 1));
  EXPECT_EQ(f_op.coefficient(VarId::x(3, 2)), c(-2) * x(3, 2));
  const auto& e23 = op_for(ops, BasisIndex::e(2, 3));
  EXPECT_EQ(e23.coefficient(VarId::x(2, 1)), -x(3, 1));
  EXPECT_EQ(e23.coefficient(VarId::x0()), c(2) * x(3, 2));
  EXPECT_EQ(e23.action.size(), 2u);
}

TEST(Operators, CommutatorsCloseUpToFixedSign) {
  // [X_a, X_b] must equal s * X_[a,b] with one sign s for every pair.
  const GammaTuple g = gamma("1,0,3,-2");
  const auto ops = build_operators(g);
  const auto basis = algebra_basis(4);
  std::mt19937_64 rng(3);
  std::vector<VarId> vars;
  for (const auto& b : basis) vars.push_back(b.dual_var());
  const Polynomial p = random_polynomial(rng, vars, 3, 6) + x(4, 1) * x(3, 2) * x0();
  std::optional<int> sign;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Polynomial lhs = ops[a].apply(ops[b].apply(p)) - ops[b].apply(ops[a].apply(p));
      Polynomial rhs;
      for (const auto& [idx, coeff] : bracket(basis[a], basis[b], g)) {
        rhs += coeff * op_for(ops, idx).apply(p);
      }
      if (rhs.is_zero()) {
        ASSERT_TRUE(lhs.is_zero());
        continue;
      }
      if (!sign) sign = lhs == rhs ? 1 : -1;
      ASSERT_EQ(lhs, Rational(*sign) * rhs) << basis[a].name() << " " << basis[b].name();
    }
  }
  EXPECT_TRUE(sign.has_value());
}

TEST(CheckInvariant, CentralCoordinate) {
  const auto ops = build_operators(gamma("1,0,1"));
  EXPECT_TRUE(check_invariant(RationalFunction(x(3, 1)), ops).passed());
}

TEST(CheckInvariant, RationalMemberForN3) {
  const auto ops = build_operators(gamma("1,0,1"));
  const RationalFunction fn(x0() * x(3, 1) + x(2, 1) * x(3, 2), x(3, 1));
  const auto cert = check_invariant(fn, ops);
  EXPECT_TRUE(cert.passed());
  EXPECT_EQ(cert.entries.size(), 4u);
  // Without the correction only x_0 remains and X_{e_12} leaves -x_21.
  const auto bare = check_invariant(RationalFunction(x0()), ops);
  EXPECT_FALSE(bare.passed());
  for (const auto& r : bare.entries) {
    if (r.op == BasisIndex::e(1, 2)) EXPECT_EQ(r.residue, -x(2, 1));
  }
}

TEST(CheckInvariant, NonInvariantRecordsResidue) {
  const auto ops = build_operators(gamma("1,-1"));
  const auto cert = check_invariant(RationalFunction(x(2, 1)), ops);
  EXPECT_FALSE(cert.passed());
  for (const auto& r : cert.entries) {
    if (r.op == BasisIndex::f()) EXPECT_EQ(r.residue, c(2) * x(2, 1));
    if (r.op == BasisIndex::e(1, 2)) EXPECT_TRUE(r.residue.is_zero());
  }
}

TEST(RelativeWeight, Examples) {
  const auto ops2 = build_operators(gamma("1,-1"));
  EXPECT_EQ(relative_weight(x(2, 1), op_for(ops2, BasisIndex::f())), Rational(2));
  EXPECT_EQ(relative_weight(x0(), op_for(ops2, BasisIndex::f())), Rational(0));
  EXPECT_FALSE(relative_weight(x0(), op_for(ops2, BasisIndex::e(1, 2))).has_value());
  EXPECT_THROW(relative_weight(Polynomial(), ops2[0]), Error);

  const GammaTuple g = gamma("1,0,0,-2");
  const auto ops = build_operators(g);
  const auto chi1 = relative_weight(delta(4, 1), op_for(ops, BasisIndex::f()));
  const auto chi2 = relative_weight(delta(4, 2), op_for(ops, BasisIndex::f()));
  ASSERT_TRUE(chi1 && chi2);
  EXPECT_EQ(*chi1, Rational(3));
  EXPECT_EQ(*chi2, Rational(3));
  // alpha_2 = -1 balances the weights.
  EXPECT_EQ(Rational(-1) * *chi1 + *chi2, Rational(0));
}

TEST(RelativeWeight, MinorsAreNilradicalCasimirs) {
  for (int n = 2; n <= 7; ++n) {
    std::vector<Rational> values;
    for (int i = 1; i <= n; ++i) values.emplace_back(i * i % 5 - 2);
    const GammaTuple g(values);
    const auto ops = build_operators(g);
    for (int k = 1; k <= n / 2; ++k) {
      const Polynomial d = delta(n, k);
      Rational chi_f;
      for (int i = 1; i <= k; ++i) chi_f += g(i) - g(conjugate(n, i));
      for (const auto& op : ops) {
        const auto w = relative_weight(d, op);
        ASSERT_TRUE(w.has_value()) << "n=" << n << " k=" << k << " " << op.source.name();
        EXPECT_EQ(*w, op.source.is_f() ? chi_f : Rational(0));
      }
    }
  }
}

TEST(PowerProducts, WeightBalance) {
  const auto ops = build_operators(gamma("1,0,0,-2"));
  FormalPowerProduct balanced{{{delta(4, 1), Rational(-1)}, {delta(4, 2), Rational(1)}}};
  EXPECT_TRUE(check_invariant(balanced, ops).passed());
  FormalPowerProduct unbalanced{{{delta(4, 1), Rational(1)}, {delta(4, 2), Rational(1)}}};
  const auto cert = check_invariant(unbalanced, ops);
  EXPECT_FALSE(cert.passed());
  FormalPowerProduct not_relative{{{x0(), Rational(1)}}};
  EXPECT_FALSE(check_invariant(not_relative, ops).passed());
}

TEST(CountOracle, Examples) {
  EXPECT_EQ(count_invariants_oracle(gamma("1,0,1")), 2);
  EXPECT_EQ(count_invariants_oracle(gamma("1,0,0,-2")), 1);
  EXPECT_EQ(count_invariants_oracle(gamma("1,-1")), 0);
  EXPECT_THROW(count_invariants_oracle(gamma("1,-1"), 0), Error);
}

TEST(FunctionalIndependence, Examples) {
  const std::vector<RationalFunction> basis{
      RationalFunction(x(3, 1)), RationalFunction(x0() * x(3, 1) + x(2, 1) * x(3, 2), x(3, 1))};
  EXPECT_TRUE(functional_independence(basis));
  const std::vector<RationalFunction> dependent{RationalFunction(x(3, 1)),
                                                RationalFunction(c(2) * x(3, 1))};
  EXPECT_FALSE(functional_independence(dependent));
  EXPECT_TRUE(functional_independence(std::vector<RationalFunction>{}));
}

TEST(FunctionalIndependence, PowerProductsUseLogJacobian) {
  // Delta_1 * Delta_2 and Delta_1^2 * Delta_2^2 are dependent.
  const std::vector<FormalPowerProduct> dependent{
      {{{delta(4, 1), Rational(1)}, {delta(4, 2), Rational(1)}}},
      {{{delta(4, 1), Rational(2)}, {delta(4, 2), Rational(2)}}}};
  EXPECT_FALSE(functional_independence({}, dependent));
  const std::vector<FormalPowerProduct> independent{
      {{{delta(4, 1), Rational(1)}}}, {{{delta(4, 2), Rational(1, 2)}}}};
  EXPECT_TRUE(functional_independence({}, independent));
}

TEST(FunctionalIndependence, DegenerateSampling) {
  const std::vector<FormalPowerProduct> zero_base{{{{x(2, 1), Rational(1)}, {Polynomial(), Rational(1)}}}};
  try {
    functional_independence({}, zero_base);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DegenerateSampling);
  }
}
