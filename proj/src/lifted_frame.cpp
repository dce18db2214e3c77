#include "trilie/lifted_frame.hpp"

#include <algorithm>
#include <functional>

#include "trilie/errors.hpp"
#include "trilie/invariants.hpp"
#include "trilie/parallel.hpp"

namespace trilie {

namespace {

ExpScalar var(VarId v) { return ExpScalar(Polynomial::var(v)); }

ExpScalar invert_unit(const ExpScalar& d) {
  if (d.parts().size() != 1 || !d.parts().begin()->second.is_constant() ||
      d.parts().begin()->second.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "diagonal entry is not an invertible monomial");
  }
  const auto& [grade, coeff] = *d.parts().begin();
  return ExpScalar(Polynomial(coeff.constant_term().inverse()), -grade);
}

ExpMatrix zero_matrix(int n) { return ExpMatrix::Constant(n, n, ExpScalar()); }

}  // namespace

LiftedFrame LiftedFrame::generic(const GammaTuple& g) {
  const int n = g.n();
  ExpMatrix b = zero_matrix(n);
  for (int i = 0; i < n; ++i) {
    b(i, i) = ExpScalar::unit(g(i + 1));
    for (int j = i + 1; j < n; ++j) b(i, j) = var(VarId::b(i + 1, j + 1));
  }
  ExpMatrix inv = inverse_upper_triangular(b, invert_unit);
  return LiftedFrame{g, std::move(b), std::move(inv)};
}

LiftedFrame LiftedFrame::identity(const GammaTuple& g) {
  const int n = g.n();
  ExpMatrix b = zero_matrix(n);
  for (int i = 0; i < n; ++i) b(i, i) = ExpScalar(1);
  return LiftedFrame{g, b, b};
}

ExpMatrix dual_matrix(int n) {
  ExpMatrix x = zero_matrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) x(i, j) = var(VarId::x(i + 1, j + 1));
  }
  return x;
}

ExpMatrix algebra_matrix(const GammaTuple& g) {
  const int n = g.n();
  ExpMatrix y = zero_matrix(n);
  for (int i = 0; i < n; ++i) {
    y(i, i) = var(VarId::y0()) * g(i + 1);
    for (int j = i + 1; j < n; ++j) y(i, j) = var(VarId::y(i + 1, j + 1));
  }
  return y;
}

ExpMatrix adjoint_action(const LiftedFrame& frame, const ExpMatrix& Y) {
  const int n = frame.n();
  if (Y.rows() != n || Y.cols() != n) throw Error(ErrorKind::ShapeMismatch, "Y must be n x n");
  for (int i = 0; i < n; ++i) {
    if (Y(i, i) != var(VarId::y0()) * frame.gamma(i + 1)) {
      throw Error(ErrorKind::ShapeMismatch, "diagonal of Y must be gamma_i y_0");
    }
    for (int j = 0; j < i; ++j) {
      if (!Y(i, j).is_zero()) throw Error(ErrorKind::ShapeMismatch, "Y must be upper triangular");
    }
  }
  return multiply(multiply(frame.B, Y), frame.Binv);
}

LiftedInvariantSet lifted_invariants(const LiftedFrame& frame) {
  const int n = frame.n();
  const auto& b = frame.B;
  const auto& bh = frame.Binv;
  LiftedInvariantSet s{zero_matrix(n), var(VarId::x0())};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      ExpScalar acc;
      for (int ip = i; ip <= n; ++ip) {
        if (b(i - 1, ip - 1).is_zero()) continue;
        for (int jp = 1; jp <= j; ++jp) {
          if (bh(jp - 1, j - 1).is_zero()) continue;
          acc += b(i - 1, ip - 1) * bh(jp - 1, j - 1) * Polynomial::var(VarId::x(ip, jp));
        }
      }
      s.I(i - 1, j - 1) = std::move(acc);
      for (int l = j; l <= i; ++l) {
        if (b(l - 1, i - 1).is_zero() || bh(j - 1, l - 1).is_zero()) continue;
        s.I0 += frame.gamma(l) * (b(l - 1, i - 1) * bh(j - 1, l - 1)) * Polynomial::var(VarId::x(i, j));
      }
    }
  }
  return s;
}

LiftedInvariantSet lifted_invariants_by_duality(const LiftedFrame& frame) {
  const int n = frame.n();
  // Formal copies of B and B^{-1}: the frame's diagonals, symbolic entries above.
  ExpMatrix b_formal = zero_matrix(n);
  ExpMatrix bh_formal = zero_matrix(n);
  std::map<VarId, ExpScalar> values;
  for (int i = 0; i < n; ++i) {
    b_formal(i, i) = frame.B(i, i);
    bh_formal(i, i) = frame.Binv(i, i);
    for (int j = i + 1; j < n; ++j) {
      b_formal(i, j) = var(VarId::b(i + 1, j + 1));
      bh_formal(i, j) = var(VarId::bh(i + 1, j + 1));
      values.emplace(VarId::b(i + 1, j + 1), frame.B(i, j));
      values.emplace(VarId::bh(i + 1, j + 1), frame.Binv(i, j));
    }
  }
  const ExpMatrix p = multiply(multiply(b_formal, algebra_matrix(frame.gamma)), bh_formal);

  // b <-> bh; negating the grades exchanges the two diagonals.
  const auto swap = [](VarId v) {
    if (v.kind() == VarKind::B) return VarId::bh(v.i(), v.j());
    if (v.kind() == VarKind::BH) return VarId::b(v.i(), v.j());
    return v;
  };

  LiftedInvariantSet s{zero_matrix(n), var(VarId::x0())};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const ExpScalar entry = p(i - 1, j - 1).rename(swap).negate_grades().substitute(values);
      const Polynomial xji = Polynomial::var(VarId::x(j, i));
      s.I0 += entry.derivative(VarId::y0()) * xji;
      for (int ip = 1; ip <= n; ++ip) {
        for (int jp = ip + 1; jp <= n; ++jp) {
          const ExpScalar c = entry.derivative(VarId::y(ip, jp));
          if (!c.is_zero()) s.I(jp - 1, ip - 1) += c * xji;
        }
      }
    }
  }
  return s;
}

ExpMatrix conjugated_dual_matrix(const LiftedFrame& frame) {
  return multiply(multiply(frame.B, dual_matrix(frame.n())), frame.Binv);
}

bool verify_conjugation_identity(const LiftedFrame& frame, const LiftedInvariantSet& s) {
  const int n = frame.n();
  const ExpMatrix lhs = multiply(frame.B, dual_matrix(n));
  ExpMatrix lower = zero_matrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) lower(i, j) = s.I(i, j);
  }
  const ExpMatrix rhs = multiply(lower, frame.B);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (lhs(i, j) != rhs(i, j)) return false;
    }
  }
  return true;
}

InessentialParameterCheck check_inessential_parameter(const GammaTuple& g) {
  const int n = g.n();
  const auto frame = LiftedFrame::generic(g);
  const auto s = lifted_invariants(frame);
  const VarId b1n = VarId::b(1, n);
  InessentialParameterCheck out;
  out.dI0 = s.I0.derivative(b1n);
  const ExpScalar closed = ExpScalar(Polynomial::var(VarId::x(n, 1)), -g(1)) * (g(1) - g(n));
  out.matches_closed_form = out.dI0 == closed;
  out.matrix_independent = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (!s.I(i, j).derivative(b1n).is_zero()) out.matrix_independent = false;
    }
  }
  out.central = g(1) == g(n);
  return out;
}

namespace {

// Strictly lower symbolic matrix entry, zero on and above the diagonal.
Polynomial xe(int i, int j) { return j < i ? Polynomial::var(VarId::x(i, j)) : Polynomial(); }

PolyMatrix block(int r1, int r2, int c1, int c2) {
  PolyMatrix m(std::max(0, r2 - r1 + 1), std::max(0, c2 - c1 + 1));
  for (int r = r1; r <= r2; ++r) {
    for (int c = c1; c <= c2; ++c) m(r - r1, c - c1) = xe(r, c);
  }
  return m;
}

// | X^{i,i}_{1,m}  beta |
// | X^{r1,n}_{1,m}  X^{r1,n}_{j,j} |  with m = n - r1 + 1 columns on the left.
Polynomial bordered(int n, int r1, int i, int j, const Polynomial& beta) {
  const int m = n - r1 + 1;
  PolyMatrix a(m + 1, m + 1);
  for (int c = 1; c <= m; ++c) a(0, c - 1) = xe(i, c);
  a(0, m) = beta;
  for (int r = r1; r <= n; ++r) {
    for (int c = 1; c <= m; ++c) a(r - r1 + 1, c - 1) = xe(r, c);
    a(r - r1 + 1, m) = xe(r, j);
  }
  return determinant(a);
}

}  // namespace

SubmatrixIdentityCheck submatrix_identity_check(int n, int k) {
  if (k <= 1 || k >= n) throw Error(ErrorKind::IndexOutOfRange, "submatrix identities need 1 < k < n");
  SubmatrixIdentityCheck out;
  out.n = n;
  out.k = k;
  const int kappa = conjugate(n, k);
  const PolyMatrix m = block(kappa + 1, n, 1, k - 1);
  const Polynomial det_m = determinant(m);
  if (det_m.is_zero()) {
    out.vacuous = true;
    return out;
  }
  const PolyMatrix adj = adjugate(m);
  const Polynomial beta = Polynomial::var(VarId::aux(1));
  const Rational sign = k % 2 == 1 ? Rational(1) : Rational(-1);

  // R_i adj(M) C_j, i.e. |M| times X^{i,i}_{1,k-1} M^{-1} X^{kappa+1,n}_{j,j}.
  const auto schur = [&](int i, int j) {
    Polynomial acc;
    for (int a = 0; a < k - 1; ++a) {
      for (int c = 0; c < k - 1; ++c) acc += xe(i, a + 1) * adj(a, c) * xe(kappa + 1 + c, j);
    }
    return acc;
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Polynomial lhs = beta * det_m - schur(i, j);
      const Polynomial rhs = sign * bordered(n, kappa + 1, i, j, beta);
      if (lhs != rhs) {
        out.first = false;
        out.failures.push_back("1:(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  const Polynomial delta_k = determinant(block(kappa, n, 1, k));
  if (xe(kappa, k) * det_m - schur(kappa, k) != sign * delta_k) {
    out.particular = false;
    out.failures.push_back("particular");
  }

  for (int j = 1; j <= n; ++j) {
    const Polynomial l1 = xe(kappa, j) * det_m - schur(kappa, j);
    const Polynomial l2 = xe(j, k) * det_m - schur(j, k);
    const Polynomial rhs = det_m * bordered(n, kappa, j, j, beta) + delta_k * bordered(n, kappa + 1, j, j, beta);
    if (l1 * l2 != rhs) {
      out.second = false;
      out.failures.push_back("2:(" + std::to_string(j) + ")");
    }
  }
  return out;
}

bool NormalizationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubsystemCheck& c) { return c.status; });
}

NormalizationReport verify_normalization_solution(const GammaTuple& g) {
  const int n = g.n();
  if (n > 6) throw Error(ErrorKind::DomainError, "normalization check is limited to n <= 6");
  const int half = n / 2;

  auto base = std::make_shared<FactorBase>();
  for (int t = 1; t <= half; ++t) base->factors.push_back(minor(n, t, Vars::Dual));
  std::shared_ptr<const FactorBase> cbase = base;

  const auto poly = [](const Polynomial& p, const Rational& grade = Rational(0)) {
    return ExpFraction(ExpScalar(p, grade));
  };
  // 1 / Delta_t; Delta_0 = 1.
  const auto inv_delta = [&](int t) {
    if (t == 0) return ExpFraction(1);
    return ExpFraction(ExpScalar(1), cbase, static_cast<std::size_t>(t - 1));
  };
  const auto delta = [&](int t) { return t == 0 ? ExpFraction(1) : poly(base->factors[t - 1]); };

  FractionMatrix B = FractionMatrix::Constant(n, n, ExpFraction());
  for (int i = 1; i <= n; ++i) B(i - 1, i - 1) = poly(Polynomial(1), g(i));
  for (int k = 1; k <= half; ++k) {
    B(k - 1, conjugate(n, k) - 1) = poly(Polynomial::var(VarId::b(k, conjugate(n, k))));
  }

  // Rows kappa, k = 2..[(n+1)/2]: B^{kappa,kappa}_{kappa+1,n} = -u^{g_kappa} X^{kappa,kappa}_{1,k-1} M^{-1}.
  for (int k = 2; k <= (n + 1) / 2; ++k) {
    const int kappa = conjugate(n, k);
    const PolyMatrix adj = adjugate(block(kappa + 1, n, 1, k - 1));
    for (int c = kappa + 1, cc = 0; c <= n; ++c, ++cc) {
      Polynomial acc;
      for (int a = 1; a <= k - 1; ++a) acc += xe(kappa, a) * adj(a - 1, cc);
      B(kappa - 1, c - 1) = -(poly(acc, g(kappa)) * inv_delta(k - 1));
    }
  }

  // b_kj, k < j < kappa: u^{g_k} / Delta_k times the bordered determinant.
  for (int k = 1; k <= half; ++k) {
    const int kappa = conjugate(n, k);
    for (int j = k + 1; j < kappa; ++j) {
      B(k - 1, j - 1) = poly(bordered(n, kappa + 1, kappa, j, xe(kappa, j)), g(k)) * inv_delta(k);
    }
  }

  // B^{k,k}_{kappa+1,n} = -(u^{g_k} X^{k,k}_{1,k-1} + sum_{k<j<=kappa} b_kj X^{j,j}_{1,k-1}) M^{-1}.
  for (int k = 2; k <= half; ++k) {
    const int kappa = conjugate(n, k);
    const PolyMatrix adj = adjugate(block(kappa + 1, n, 1, k - 1));
    std::vector<ExpFraction> v(static_cast<std::size_t>(k - 1));
    for (int a = 1; a <= k - 1; ++a) {
      ExpFraction acc = poly(xe(k, a), g(k));
      for (int j = k + 1; j <= kappa; ++j) acc += B(k - 1, j - 1) * poly(xe(j, a));
      v[static_cast<std::size_t>(a - 1)] = acc;
    }
    for (int c = kappa + 1, cc = 0; c <= n; ++c, ++cc) {
      ExpFraction acc;
      for (int a = 1; a <= k - 1; ++a) acc += v[static_cast<std::size_t>(a - 1)] * poly(adj(a - 1, cc));
      B(k - 1, c - 1) = -(acc * inv_delta(k - 1));
    }
  }

  FractionMatrix X = FractionMatrix::Constant(n, n, ExpFraction());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) X(i - 1, j - 1) = poly(xe(i, j));
  }
  const FractionMatrix BX = multiply(B, X);

  // I_{kappa k} = (-1)^{k+1} Delta_k / Delta_{k-1} u^{g_kappa - g_k}.
  std::vector<ExpFraction> I_sec(static_cast<std::size_t>(half + 1));
  for (int k = 1; k <= half; ++k) {
    const Rational sign = k % 2 == 1 ? Rational(1) : Rational(-1);
    I_sec[static_cast<std::size_t>(k)] =
        poly(Polynomial(sign), g(conjugate(n, k)) - g(k)) * delta(k) * inv_delta(k - 1);
  }

  struct Job {
    std::string name;
    int k;
    std::vector<std::pair<ExpFraction, ExpFraction>> eqs;
  };
  std::vector<Job> jobs;
  for (int k = 2; k <= (n + 1) / 2; ++k) {
    Job job{"S1", k, {}};
    for (int j = 1; j < k; ++j) job.eqs.emplace_back(BX(conjugate(n, k) - 1, j - 1), ExpFraction());
    jobs.push_back(std::move(job));
  }
  for (int k = 1; k <= half; ++k) {
    Job job{"S2", k, {}};
    job.eqs.emplace_back(BX(conjugate(n, k) - 1, k - 1),
                         I_sec[static_cast<std::size_t>(k)] * poly(Polynomial(1), g(k)));
    jobs.push_back(std::move(job));
  }
  for (int k = 1; k <= half; ++k) {
    const int kappa = conjugate(n, k);
    if (k + 1 >= kappa) continue;
    Job job{"S3", k, {}};
    for (int j = k + 1; j < kappa; ++j) {
      job.eqs.emplace_back(BX(kappa - 1, j - 1), I_sec[static_cast<std::size_t>(k)] * B(k - 1, j - 1));
    }
    jobs.push_back(std::move(job));
  }
  for (int k = 2; k <= half; ++k) {
    Job job{"S4", k, {}};
    for (int j = 1; j < k; ++j) job.eqs.emplace_back(BX(k - 1, j - 1), ExpFraction());
    jobs.push_back(std::move(job));
  }

  NormalizationReport report{g, {}};
  report.checks = parallel_map<SubsystemCheck>(jobs.size(), [&](std::size_t idx) {
    const Job& job = jobs[idx];
    SubsystemCheck c{job.name, job.k, static_cast<int>(job.eqs.size()), true, ""};
    for (std::size_t e = 0; e < job.eqs.size(); ++e) {
      if (!(job.eqs[e].first == job.eqs[e].second)) {
        c.status = false;
        c.detail += "equation " + std::to_string(e + 1) + " leaves " + (job.eqs[e].first - job.eqs[e].second).str() + "; ";
      }
    }
    return c;
  });

  // The full sparse form through the exact inverse.
  const FractionMatrix Binv = inverse_upper_triangular(B, [](const ExpFraction& d) {
    return ExpFraction(invert_unit(d.num()));
  });
  const FractionMatrix I = multiply(multiply(B, X), Binv);
  {
    SubsystemCheck c{"conjugation", 0, n * (n - 1) / 2, true, ""};
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < i; ++j) {
        const bool secondary = j <= half && i == conjugate(n, j);
        const ExpFraction expected = secondary ? I_sec[static_cast<std::size_t>(j)] : ExpFraction();
        if (!(I(i - 1, j - 1) == expected)) {
          c.status = false;
          c.detail += "entry (" + std::to_string(i) + "," + std::to_string(j) + "); ";
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  ExpFraction I0 = poly(Polynomial::var(VarId::x0()));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      for (int l = j; l <= i; ++l) {
        if (B(l - 1, i - 1).is_zero() || Binv(j - 1, l - 1).is_zero()) continue;
        I0 += B(l - 1, i - 1) * Binv(j - 1, l - 1) * poly(Polynomial(g(l)) * xe(i, j));
      }
    }
  }
  {
    SubsystemCheck c{"I0", 0, 1, false, ""};
    const auto cls = classify(g);
    if (cls.singular) {
      const auto member = build_case1_basis(g, Vars::Dual).rational_member;
      c.status = I0.num().is_polynomial() && member &&
                 RationalFunction(I0.num().part(Rational(0)), I0.den()) == *member;
      c.detail = c.status ? "matches the rational invariant" : "differs from the rational invariant: " + I0.str();
    } else {
      const int k0 = *cls.k0;
      const VarId free = VarId::b(k0, conjugate(n, k0));
      c.status = !I0.derivative(free).is_zero();
      c.detail = c.status ? "depends on " + free.name() : "independent of " + free.name();
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace trilie
