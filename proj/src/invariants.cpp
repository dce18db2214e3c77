#include "trilie/invariants.hpp"

#include <algorithm>

#include "trilie/errors.hpp"
#include "trilie/matrix.hpp"
#include "trilie/parallel.hpp"

namespace trilie {

std::string to_string(Vars v) { return v == Vars::Dual ? "dual" : "algebra"; }

std::string to_string(BasisCase c) { return c == BasisCase::Singular ? "singular" : "regular"; }

std::string to_string(BasisKind k) {
  switch (k) {
    case BasisKind::Casimir: return "casimir";
    case BasisKind::Rational: return "rational";
    case BasisKind::Polynomial: return "polynomial";
    case BasisKind::Formal: return "formal";
  }
  return "formal";
}

Vars parse_vars(std::string_view text) {
  if (text == "dual") return Vars::Dual;
  if (text == "algebra") return Vars::Algebra;
  throw Error(ErrorKind::ParseError, "unknown variable set '" + std::string(text) + "'");
}

VarId dual_to_algebra(VarId v) {
  if (v.kind() == VarKind::X0) return VarId::f();
  if (v.kind() == VarKind::X) return VarId::e(v.j(), v.i());
  return v;
}

namespace {

Polynomial xv(int i, int j) { return Polynomial::var(VarId::x(i, j)); }
Polynomial ev(int i, int j) { return Polynomial::var(VarId::e(i, j)); }

void check_k(int n, int k) {
  if (k < 1 || k > n / 2) {
    throw Error(ErrorKind::IndexOutOfRange,
                "minor index k = " + std::to_string(k) + " outside 1.." + std::to_string(n / 2));
  }
}

}  // namespace

Polynomial minor(int n, int k, Vars vars) {
  check_k(n, k);
  const int kappa = conjugate(n, k);
  PolyMatrix m(k, k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      // Dual: rows kappa..n, columns 1..k. Algebra: rows 1..k, columns kappa..n.
      m(r, c) = vars == Vars::Dual ? xv(kappa + r, c + 1) : ev(r + 1, kappa + c);
    }
  }
  return determinant(m);
}

Polynomial bordered_minor(int n, int k, int i, Vars vars) {
  check_k(n, k);
  const int kappa = conjugate(n, k);
  if (i <= k || i >= kappa) {
    throw Error(ErrorKind::IndexOutOfRange, "bordered minor needs k < i < n-k+1");
  }
  PolyMatrix m = PolyMatrix::Constant(k + 1, k + 1, Polynomial());
  if (vars == Vars::Dual) {
    //  | X^{i,i}_{1,k}          0             |
    //  | X^{kappa,n}_{1,k}   X^{kappa,n}_{i,i} |
    for (int c = 0; c < k; ++c) m(0, c) = xv(i, c + 1);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) m(r + 1, c) = xv(kappa + r, c + 1);
      m(r + 1, k) = xv(kappa + r, i);
    }
  } else {
    //  | E^{1,k}_{i,i}   E^{1,k}_{kappa,n} |
    //  | 0               E^{i,i}_{kappa,n} |
    for (int r = 0; r < k; ++r) {
      m(r, 0) = ev(r + 1, i);
      for (int c = 0; c < k; ++c) m(r, c + 1) = ev(r + 1, kappa + c);
    }
    for (int c = 0; c < k; ++c) m(k, c + 1) = ev(i, kappa + c);
  }
  return determinant(m);
}

FormalPowerProduct PowerProduct::expand() const {
  FormalPowerProduct out;
  for (const auto& [k, r] : exponents) out.factors.emplace_back(minor(n, k, vars), r);
  return out;
}

std::vector<RationalFunction> InvariantBasis::functions() const {
  std::vector<RationalFunction> out(polynomial_members.begin(), polynomial_members.end());
  if (rational_member) out.push_back(*rational_member);
  return out;
}

std::vector<FormalPowerProduct> InvariantBasis::products() const {
  std::vector<FormalPowerProduct> out;
  for (const auto& p : power_members) out.push_back(p.expand());
  return out;
}

namespace {

InvariantBasis skeleton(const GammaTuple& g, Vars vars, const GammaClassification& cls) {
  InvariantBasis b(g);
  b.vars = vars;
  b.kase = cls.singular ? BasisCase::Singular : BasisCase::Regular;
  b.k0 = cls.k0;
  for (const auto& [k, a] : cls.alphas) {
    if (k != cls.k0) b.alphas.emplace(k, a);
  }
  b.kind = basis_kind(g);
  return b;
}

std::vector<Polynomial> minors_below(int n, int limit, Vars vars) {
  return parallel_map<Polynomial>(static_cast<std::size_t>(std::max(0, limit)),
                                  [&](std::size_t idx) { return minor(n, static_cast<int>(idx) + 1, vars); });
}

}  // namespace

InvariantBasis build_case1_basis(const GammaTuple& g, Vars vars) {
  const auto cls = classify(g);
  if (!cls.singular) throw Error(ErrorKind::WrongCase, "case 1 basis requires singular gamma");
  const int n = g.n();
  const int half = n / 2;
  InvariantBasis b = skeleton(g, vars, cls);
  b.polynomial_members = minors_below(n, half, vars);

  auto parts = parallel_map<RationalPart>(static_cast<std::size_t>(half), [&](std::size_t idx) {
    const int k = static_cast<int>(idx) + 1;
    RationalPart part;
    part.k = k;
    part.coeff = (k % 2 == 1 ? Rational(1) : Rational(-1)) * (g(k) - g(k + 1));
    if (part.coeff.is_zero()) return part;
    for (int i = k + 1; i < conjugate(n, k); ++i) part.sum += bordered_minor(n, k, i, vars);
    return part;
  });
  std::erase_if(parts, [](const RationalPart& p) { return p.coeff.is_zero() || p.sum.is_zero(); });

  // Common denominator: the product of the minors that occur.
  Polynomial den(1);
  for (const auto& p : parts) den = den * b.polynomial_members[static_cast<std::size_t>(p.k - 1)];
  const VarId lead = vars == Vars::Dual ? VarId::x0() : VarId::f();
  Polynomial num = Polynomial::var(lead) * den;
  for (const auto& p : parts) {
    Polynomial others(1);
    for (const auto& q : parts) {
      if (q.k != p.k) others = others * b.polynomial_members[static_cast<std::size_t>(q.k - 1)];
    }
    num += p.coeff * p.sum * others;
  }
  b.rational_member = RationalFunction(num, den);
  b.rational_parts = std::move(parts);
  return b;
}

InvariantBasis build_case2_basis(const GammaTuple& g, Vars vars) {
  const auto cls = classify(g);
  if (cls.singular) throw Error(ErrorKind::WrongCase, "case 2 basis requires regular gamma");
  const int n = g.n();
  const int k0 = *cls.k0;
  InvariantBasis b = skeleton(g, vars, cls);
  b.polynomial_members = minors_below(n, k0 - 1, vars);
  for (int k = k0 + 1; k <= n / 2; ++k) {
    PowerProduct p;
    p.n = n;
    p.vars = vars;
    p.exponents[k0] = cls.alphas.at(k);
    p.exponents[k] = Rational(1);
    b.power_members.push_back(std::move(p));
  }
  return b;
}

InvariantBasis build_basis(const GammaTuple& g, Vars vars) {
  return classify(g).singular ? build_case1_basis(g, vars) : build_case2_basis(g, vars);
}

Polynomial clearing_multiplier(const GammaTuple& g, Vars vars) {
  Polynomial m(1);
  for (int k = 1; k <= g.n() / 2; ++k) {
    if (g(k) != g(k + 1)) m = m * minor(g.n(), k, vars);
  }
  return m;
}

InvariantBasis clear_denominators(const InvariantBasis& b) {
  if (b.kase != BasisCase::Singular || !b.rational_member) {
    throw Error(ErrorKind::WrongCase, "clear_denominators needs an uncleared singular basis");
  }
  InvariantBasis out = b;
  const Polynomial mult = clearing_multiplier(b.gamma, b.vars);
  const auto q = divide_exact(b.rational_member->num() * mult, b.rational_member->den());
  if (!q) throw Error(ErrorKind::IdentityFailure, "multiplier does not clear the denominator");
  out.polynomial_members.push_back(*q);
  out.rational_member.reset();
  out.multiplier = mult;
  return out;
}

BasisKind basis_kind(const GammaTuple& g) {
  const int n = g.n();
  bool casimir = true;
  for (int k = 1; k <= n / 2 - 1; ++k) {
    if (g(k) != g(conjugate(n, k))) casimir = false;
  }
  if (casimir) return BasisKind::Casimir;
  const auto cls = classify(g);
  // Exponents are rational for rational gamma, so a rational basis always exists.
  bool all_zero = true;
  bool some_positive = false;
  for (const auto& [k, a] : cls.alphas) {
    if (k == *cls.k0) continue;
    if (!a.is_zero()) all_zero = false;
    if (a.sign() > 0) some_positive = true;
  }
  return all_zero || some_positive ? BasisKind::Polynomial : BasisKind::Rational;
}

}  // namespace trilie
