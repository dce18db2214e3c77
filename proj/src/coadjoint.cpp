#include "trilie/coadjoint.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "trilie/errors.hpp"
#include "trilie/matrix.hpp"
#include "trilie/parallel.hpp"

namespace trilie {

Polynomial CoadjointOperator::apply(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [v, coeff] : action) {
    if (!p.contains(v)) continue;
    out += coeff * p.derivative(v);
  }
  return out;
}

Polynomial CoadjointOperator::coefficient(VarId v) const {
  for (const auto& [w, coeff] : action) {
    if (w == v) return coeff;
  }
  return Polynomial();
}

std::vector<CoadjointOperator> build_operators(const GammaTuple& g) {
  const StructureConstants sc(g);
  const auto& basis = sc.basis();
  std::vector<CoadjointOperator> ops;
  ops.reserve(basis.size());
  for (int a = 0; a < sc.dim(); ++a) {
    CoadjointOperator op;
    op.source = basis[static_cast<std::size_t>(a)];
    for (int b = 0; b < sc.dim(); ++b) {
      Polynomial coeff;
      for (const auto& [c, value] : sc.bracket(a, b)) {
        coeff += value * Polynomial::var(basis[static_cast<std::size_t>(c)].dual_var());
      }
      if (!coeff.is_zero()) {
        op.action.emplace_back(basis[static_cast<std::size_t>(b)].dual_var(), std::move(coeff));
      }
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

bool OperatorResidue::passed() const {
  const bool relative = std::all_of(weights.begin(), weights.end(),
                                    [](const auto& w) { return w.has_value(); });
  return residue.is_zero() && relative && balance.is_zero();
}

bool InvarianceCertificate::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const OperatorResidue& r) { return r.passed(); });
}

InvarianceCertificate check_invariant(const RationalFunction& f,
                                      std::span<const CoadjointOperator> ops) {
  InvarianceCertificate cert{f, {}};
  const bool constant_den = f.den().is_constant();
  cert.entries = parallel_map<OperatorResidue>(ops.size(), [&](std::size_t i) {
    const auto& op = ops[i];
    OperatorResidue r;
    r.op = op.source;
    const Polynomial xn = op.apply(f.num());
    if (constant_den) {
      r.residue = xn;
    } else {
      r.residue = f.den() * xn - f.num() * op.apply(f.den());
    }
    return r;
  });
  return cert;
}

std::optional<Rational> relative_weight(const Polynomial& f, const CoadjointOperator& op) {
  if (f.is_zero()) throw Error(ErrorKind::DomainError, "relative weight of the zero polynomial");
  const Polynomial image = op.apply(f);
  if (image.is_zero()) return Rational(0);
  const auto q = divide_exact(image, f);
  if (!q || !q->is_constant()) return std::nullopt;
  return q->constant_term();
}

InvarianceCertificate check_invariant(const FormalPowerProduct& p,
                                      std::span<const CoadjointOperator> ops) {
  InvarianceCertificate cert{p, {}};
  cert.entries = parallel_map<OperatorResidue>(ops.size(), [&](std::size_t i) {
    OperatorResidue r;
    r.op = ops[i].source;
    for (const auto& [base, exponent] : p.factors) {
      auto w = relative_weight(base, ops[i]);
      if (w) r.balance += exponent * *w;
      r.weights.push_back(std::move(w));
    }
    return r;
  });
  return cert;
}

namespace {

Rational sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-1000, 1000);
  return Rational(dist(rng));
}

}  // namespace

int count_invariants_oracle(const GammaTuple& g, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::DomainError, "count oracle needs trials >= 1");
  const StructureConstants sc(g);
  const int dim = sc.dim();
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> point(static_cast<std::size_t>(dim));
    for (auto& v : point) v = sample(rng);
    RationalMatrix m = RationalMatrix::Constant(dim, dim, Rational(0));
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        for (const auto& [c, value] : sc.bracket(a, b)) {
          m(a, b) += value * point[static_cast<std::size_t>(c)];
        }
      }
    }
    best = std::max(best, rank(m));
  }
  return dim - best;
}

bool functional_independence(std::span<const RationalFunction> functions,
                             std::span<const FormalPowerProduct> products, std::uint64_t seed) {
  const std::size_t count = functions.size() + products.size();
  if (count == 0) return true;

  std::set<VarId> var_set;
  for (const auto& f : functions) {
    for (VarId v : f.num().variables()) var_set.insert(v);
    for (VarId v : f.den().variables()) var_set.insert(v);
  }
  for (const auto& p : products) {
    for (const auto& [base, exponent] : p.factors) {
      for (VarId v : base.variables()) var_set.insert(v);
    }
  }
  const std::vector<VarId> vars(var_set.begin(), var_set.end());
  if (vars.size() < count) return false;

  // Gradients are symbolic once; only evaluation depends on the point.
  std::vector<std::vector<RationalFunction>> grads;
  for (const auto& f : functions) {
    std::vector<RationalFunction> row;
    for (VarId v : vars) row.push_back(f.derivative(v));
    grads.push_back(std::move(row));
  }

  std::mt19937_64 rng(seed);
  constexpr int kGoodPoints = 3;
  constexpr int kMaxRetries = 10;
  int good = 0;
  int failures = 0;
  while (good < kGoodPoints) {
    std::map<VarId, Rational> point;
    for (VarId v : vars) point[v] = sample(rng);
    const auto value = [&](VarId v) { return point.at(v); };
    RationalMatrix jac(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(vars.size()));
    bool usable = true;
    try {
      for (std::size_t r = 0; r < functions.size() && usable; ++r) {
        if (functions[r].den().evaluate(value).is_zero()) usable = false;
        for (std::size_t c = 0; c < vars.size() && usable; ++c) {
          jac(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = grads[r][c].evaluate(value);
        }
      }
      for (std::size_t p = 0; p < products.size() && usable; ++p) {
        const auto r = static_cast<Eigen::Index>(functions.size() + p);
        for (std::size_t c = 0; c < vars.size(); ++c) jac(r, static_cast<Eigen::Index>(c)) = Rational(0);
        for (const auto& [base, exponent] : products[p].factors) {
          const Rational at = base.evaluate(value);
          if (at.is_zero()) {
            usable = false;
            break;
          }
          for (std::size_t c = 0; c < vars.size(); ++c) {
            const Rational d = base.derivative(vars[c]).evaluate(value);
            if (!d.is_zero()) jac(r, static_cast<Eigen::Index>(c)) += exponent * d / at;
          }
        }
      }
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::DivisionByZero) throw;
      usable = false;
    }
    if (!usable) {
      if (++failures > kMaxRetries) {
        if (good > 0) return false;
        throw Error(ErrorKind::DegenerateSampling, "functional independence: no usable sample point");
      }
      continue;
    }
    ++good;
    if (rank(jac) == static_cast<int>(count)) return true;
  }
  return false;
}

}  // namespace trilie
