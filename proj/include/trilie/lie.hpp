#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trilie/rational.hpp"
#include "trilie/variable.hpp"

namespace trilie {

/// The diagonal parameters (gamma_1, ..., gamma_n) of t_gamma(n).
/// Construction rejects n < 2 and constant tuples. Values are stored as given.
class GammaTuple {
 public:
  explicit GammaTuple(std::vector<Rational> values);

  /// Comma-separated exact rationals, e.g. "1,0,1" or "1/2,-3/2".
  static GammaTuple parse(std::string_view text);

  int n() const { return static_cast<int>(values_.size()); }
  /// 1-based access.
  const Rational& operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Rational>& values() const { return values_; }

  /// gamma'_i = gamma_{n-i+1}.
  GammaTuple reflected() const;
  /// gamma'_i = lambda*gamma_i + mu; lambda must be nonzero.
  GammaTuple affine(const Rational& lambda, const Rational& mu) const;

  /// "1,0,1".
  std::string str() const;

  friend bool operator==(const GammaTuple&, const GammaTuple&) = default;

 private:
  std::vector<Rational> values_;
};

/// Conjugate index n - k + 1.
constexpr int conjugate(int n, int k) { return n - k + 1; }

struct GammaClassification {
  bool singular = false;
  /// Least k <= [n/2] with gamma_k != gamma_{n-k+1}; empty when singular.
  std::optional<int> k0;
  /// alpha_k for k = k0..[n/2] (alpha_{k0} = -1 is kept as a self-check).
  std::map<int, Rational> alphas;

  friend bool operator==(const GammaClassification&, const GammaClassification&) = default;
};

GammaClassification classify(const GammaTuple& g);

/// Shift to zero trace. Idempotent.
GammaTuple normalize_gamma(const GammaTuple& g);

struct EquivalenceWitness {
  Rational lambda;
  Rational mu;
  bool reflected = false;
};

/// Finds lambda != 0, mu and an optional mirror with g2 = lambda*g1 + mu.
/// Throws Error(DimensionMismatch) when the lengths differ.
std::optional<EquivalenceWitness> gamma_equivalent(const GammaTuple& g1, const GammaTuple& g2);

/// Whether [f, e_{k,n-k+1}] = 0 for every k <= [n/2].
bool secondary_diagonal_commutes(const GammaTuple& g);

/// Basis element e_{ij} (i < j) or f. Ordered e_{ij} lexicographically, f last.
class BasisIndex {
 public:
  static BasisIndex e(int i, int j);
  static BasisIndex f() { return BasisIndex(0, 0); }

  bool is_f() const { return i_ == 0; }
  int i() const { return i_; }
  int j() const { return j_; }

  /// Coordinate on the dual space paired with this element: e_{ij} -> x_{ji}, f -> x_0.
  VarId dual_var() const;
  /// Commutative algebra variable: e_{ij} -> e_{ij}, f -> f.
  VarId algebra_var() const;

  /// "e_1_2" or "f".
  std::string name() const;
  std::string latex() const;
  static BasisIndex parse(std::string_view name);

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
  friend std::strong_ordering operator<=>(const BasisIndex& a, const BasisIndex& b) {
    if (a.is_f() != b.is_f()) return a.is_f() ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = a.i_ <=> b.i_; c != 0) return c;
    return a.j_ <=> b.j_;
  }

 private:
  BasisIndex(int i, int j) : i_(i), j_(j) {}
  int i_;
  int j_;
};

/// Sparse linear combination of basis elements.
using LinearCombination = std::map<BasisIndex, Rational>;

/// Canonical basis (e_{ij} lexicographic, then f); dimension n(n-1)/2 + 1.
std::vector<BasisIndex> algebra_basis(int n);

/// Lie bracket of two basis elements.
/// Throws Error(IndexOutOfRange) when an index exceeds g.n().
LinearCombination bracket(const BasisIndex& a, const BasisIndex& b, const GammaTuple& g);

/// Dense bracket table over the canonical basis.
class StructureConstants {
 public:
  explicit StructureConstants(const GammaTuple& g);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisIndex>& basis() const { return basis_; }
  int index_of(const BasisIndex& b) const;
  /// [basis[a], basis[b]] as (index, coefficient) pairs.
  const std::vector<std::pair<int, Rational>>& bracket(int a, int b) const {
    return table_[static_cast<std::size_t>(a * dim() + b)];
  }

 private:
  std::vector<BasisIndex> basis_;
  std::map<BasisIndex, int> index_;
  std::vector<std::vector<std::pair<int, Rational>>> table_;
};

}  // namespace trilie
