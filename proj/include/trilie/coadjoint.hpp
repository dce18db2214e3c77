#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "trilie/lie.hpp"
#include "trilie/polynomial.hpp"
#include "trilie/rational_function.hpp"

namespace trilie {

/// Infinitesimal coadjoint operator
///   X_a = sum_b (sum_c c^c_{ab} x_c) d/dx_b,
/// with x_c the dual coordinate of basis element c.
struct CoadjointOperator {
  BasisIndex source = BasisIndex::f();
  /// (x_b, coefficient) for every b with a nonzero coefficient.
  std::vector<std::pair<VarId, Polynomial>> action;

  bool is_zero() const { return action.empty(); }
  Polynomial apply(const Polynomial& p) const;
  /// Coefficient of d/dv (zero if absent).
  Polynomial coefficient(VarId v) const;
};

/// One operator per basis element, in canonical basis order.
std::vector<CoadjointOperator> build_operators(const GammaTuple& g);

/// Formal product  prod_i base_i^{exponent_i}  with rational exponents.
struct FormalPowerProduct {
  std::vector<std::pair<Polynomial, Rational>> factors;
};

struct OperatorResidue {
  BasisIndex op = BasisIndex::f();
  /// Numerator of X_a F after clearing denominators (functions only).
  Polynomial residue;
  /// Relative weight of each base under X_a (power products only);
  /// nullopt when the base is not a relative invariant of X_a.
  std::vector<std::optional<Rational>> weights;
  /// sum_i exponent_i * weight_i (power products only).
  Rational balance;

  bool passed() const;
};

struct InvarianceCertificate {
  std::variant<RationalFunction, FormalPowerProduct> subject;
  std::vector<OperatorResidue> entries;

  bool passed() const;
};

/// Applies every operator via the quotient rule and records the cleared
/// numerator D*X(N) - N*X(D). Operators are processed in parallel.
InvarianceCertificate check_invariant(const RationalFunction& f,
                                      std::span<const CoadjointOperator> ops);

/// Infinitesimal invariance of a formal power product: every base must be a
/// relative invariant of every operator and the weighted sum must vanish.
InvarianceCertificate check_invariant(const FormalPowerProduct& p,
                                      std::span<const CoadjointOperator> ops);

/// chi with X_a F = chi F, chi a constant; nullopt when F is not relative.
/// Throws Error(DomainError) for F = 0.
std::optional<Rational> relative_weight(const Polynomial& f, const CoadjointOperator& op);

/// dim g - max rank of (sum_c c^c_{ab} x_c) over `trials` random integer points
/// in [-1000, 1000].
int count_invariants_oracle(const GammaTuple& g, int trials = 3, std::uint64_t seed = 0);

/// Generic functional independence via the Jacobian rank at random rational
/// points (power products use the logarithmic Jacobian). A point where a
/// denominator or base vanishes is resampled, at most 10 times.
/// Throws Error(DegenerateSampling) if no usable point is found.
bool functional_independence(std::span<const RationalFunction> functions,
                             std::span<const FormalPowerProduct> products = {},
                             std::uint64_t seed = 0);

}  // namespace trilie
