#pragma once

#include <string>
#include <vector>

#include "trilie/exp_fraction.hpp"
#include "trilie/exp_scalar.hpp"
#include "trilie/lie.hpp"
#include "trilie/matrix.hpp"

namespace trilie {

/// Group element B of the triangular group with diagonal u^{gamma_i}, the
/// grade u^q standing for exp(q eps), together with its exact inverse.
struct LiftedFrame {
  GammaTuple gamma;
  ExpMatrix B;
  ExpMatrix Binv;

  int n() const { return gamma.n(); }

  /// Off-diagonal entries are the free symbols b_ij.
  static LiftedFrame generic(const GammaTuple& g);
  /// B = identity (all b_ij = 0 and eps = 0).
  static LiftedFrame identity(const GammaTuple& g);
};

struct LiftedInvariantSet {
  /// Full n x n matrix; only entries below the diagonal are invariants.
  ExpMatrix I;
  ExpScalar I0;
};

/// Strictly lower matrix of the dual coordinates x_ij.
ExpMatrix dual_matrix(int n);
/// Upper matrix with y_ij above and gamma_i y_0 on the diagonal.
ExpMatrix algebra_matrix(const GammaTuple& g);

/// B Y B^{-1}. Throws Error(ShapeMismatch) unless Y is an n x n upper
/// triangular matrix with diagonal gamma_i y_0.
ExpMatrix adjoint_action(const LiftedFrame& frame, const ExpMatrix& Y);

/// I_ij = sum_{i <= i', j' <= j} b_ii' bh_j'j x_i'j' and
/// I_0 = x_0 + sum_{j<i} sum_{j<=l<=i} gamma_l b_li bh_jl x_ij.
LiftedInvariantSet lifted_invariants(const LiftedFrame& frame);

/// The same set read off the coadjoint action: multiply B Y Bh with formal
/// inverse symbols bh_ij, swap b <-> bh (negating grades), substitute the
/// true inverse and collect the coefficients of y_0 and y_i'j'.
LiftedInvariantSet lifted_invariants_by_duality(const LiftedFrame& frame);

/// B X B^{-1} by direct multiplication.
ExpMatrix conjugated_dual_matrix(const LiftedFrame& frame);

/// (B X - I B)_ij = 0 for every j < i.
bool verify_conjugation_identity(const LiftedFrame& frame, const LiftedInvariantSet& s);

struct InessentialParameterCheck {
  /// d I_0 / d b_1n for the generic frame.
  ExpScalar dI0;
  /// dI0 == (gamma_1 - gamma_n) u^{-gamma_1} x_n1.
  bool matches_closed_form = false;
  /// No I_ij depends on b_1n.
  bool matrix_independent = false;
  /// gamma_1 == gamma_n, i.e. the group has a nontrivial center.
  bool central = false;

  /// b_1n is inessential exactly when the group has a center.
  bool passed() const { return matches_closed_form && matrix_independent && (dI0.is_zero() == central); }
};

InessentialParameterCheck check_inessential_parameter(const GammaTuple& g);

struct SubmatrixIdentityCheck {
  int n = 0;
  int k = 0;
  /// The submatrix X^{n-k+2,n}_{1,k-1} is singular; nothing to check.
  bool vacuous = false;
  bool first = true;
  bool particular = true;
  bool second = true;
  /// (i, j) pairs where an identity failed, tagged by identity number.
  std::vector<std::string> failures;

  bool passed() const { return first && particular && second; }
};

/// Both submatrix identities in symbolic x's with a fresh beta, cleared of
/// denominators, for every row i and column j. Requires 1 < k < n.
SubmatrixIdentityCheck submatrix_identity_check(int n, int k);
inline bool submatrix_identities(int n, int k) { return submatrix_identity_check(n, k).passed(); }

struct SubsystemCheck {
  /// "S1".."S4" for the normalization subsystems, "conjugation" for the full
  /// sparse form of B X B^{-1}, "I0" for the scalar lifted invariant.
  std::string subsystem;
  int k = 0;
  int equations = 0;
  bool status = false;
  std::string detail;
};

struct NormalizationReport {
  GammaTuple gamma;
  std::vector<SubsystemCheck> checks;

  bool passed() const;
};

/// Substitutes the solved normalization (diagonal u^{gamma_i}, free b_{k,n-k+1},
/// solved remaining b's) into every subsystem of B X = I B and checks each
/// equation exactly; also checks that I_0 of the normalized frame reproduces
/// the rational invariant (singular gamma) or depends on b_{k0,n-k0+1}.
/// Throws Error(DomainError) for n > 6 and Error(SingularSubstitution) if a
/// denominator of the solution vanishes identically.
NormalizationReport verify_normalization_solution(const GammaTuple& g);

}  // namespace trilie
