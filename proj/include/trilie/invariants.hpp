#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trilie/coadjoint.hpp"
#include "trilie/lie.hpp"
#include "trilie/polynomial.hpp"
#include "trilie/rational_function.hpp"

namespace trilie {

/// Coordinates of a basis: dual x's (with x_0) or commutative images of the
/// algebra elements e_ij (with f).
enum class Vars { Dual, Algebra };

enum class BasisCase { Singular, Regular };

enum class BasisKind { Casimir, Rational, Polynomial, Formal };

std::string to_string(Vars v);
std::string to_string(BasisCase c);
std::string to_string(BasisKind k);
/// Parses "dual" or "algebra"; throws Error(ParseError).
Vars parse_vars(std::string_view text);

/// x_ij -> e_ji, x_0 -> f; every other variable is kept.
VarId dual_to_algebra(VarId v);

/// Delta_k: |X^{n-k+1,n}_{1,k}| (dual) or |E^{1,k}_{n-k+1,n}| (algebra).
/// Throws Error(IndexOutOfRange) unless 1 <= k <= [n/2].
Polynomial minor(int n, int k, Vars vars);
inline Polynomial minor(const GammaTuple& g, int k, Vars vars) { return minor(g.n(), k, vars); }

/// Bordered determinant of order k+1 attached to k < i < n-k+1: the minor
/// rows n-k+1..n extended by row i (columns 1..k, zero corner) and column i.
/// The algebra variant is assembled from the transposed blocks.
Polynomial bordered_minor(int n, int k, int i, Vars vars);

/// Formal product prod_k Delta_k^{r_k}.
struct PowerProduct {
  int n = 0;
  Vars vars = Vars::Dual;
  std::map<int, Rational> exponents;

  FormalPowerProduct expand() const;
  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;
};

/// One summand (-1)^{k+1} (g_k - g_{k+1}) / Delta_k * sum_i bordered(k, i).
struct RationalPart {
  int k = 0;
  Rational coeff;
  Polynomial sum;
};

struct InvariantBasis {
  explicit InvariantBasis(GammaTuple g) : n(g.n()), gamma(std::move(g)) {}

  int n = 0;
  GammaTuple gamma;
  Vars vars = Vars::Dual;
  BasisCase kase = BasisCase::Singular;
  std::optional<int> k0;
  std::map<int, Rational> alphas;
  BasisKind kind = BasisKind::Rational;

  /// Minors first, in increasing k; a cleared rational member is appended.
  std::vector<Polynomial> polynomial_members;
  std::optional<RationalFunction> rational_member;
  /// Nonzero summands of the rational member (singular case).
  std::vector<RationalPart> rational_parts;
  std::vector<PowerProduct> power_members;
  /// Set by clear_denominators.
  std::optional<Polynomial> multiplier;

  std::size_t cardinality() const {
    return polynomial_members.size() + (rational_member ? 1 : 0) + power_members.size();
  }
  /// Every member as a rational function; power products are skipped.
  std::vector<RationalFunction> functions() const;
  std::vector<FormalPowerProduct> products() const;
};

/// Throws Error(WrongCase) for regular gamma.
InvariantBasis build_case1_basis(const GammaTuple& g, Vars vars);
/// Throws Error(WrongCase) for singular gamma.
InvariantBasis build_case2_basis(const GammaTuple& g, Vars vars);
InvariantBasis build_basis(const GammaTuple& g, Vars vars);

/// prod Delta_k over k <= [n/2] with g_k != g_{k+1}.
Polynomial clearing_multiplier(const GammaTuple& g, Vars vars);

/// Replaces the rational member by its product with clearing_multiplier.
/// Throws Error(WrongCase) for a regular basis or one already cleared.
InvariantBasis clear_denominators(const InvariantBasis& b);

BasisKind basis_kind(const GammaTuple& g);

}  // namespace trilie
