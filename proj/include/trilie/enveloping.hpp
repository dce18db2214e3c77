#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trilie/invariants.hpp"
#include "trilie/lie.hpp"
#include "trilie/polynomial.hpp"

namespace trilie {

/// Ordered product of basis elements in U(t_gamma(n)); the empty word is 1.
using NCWord = std::vector<BasisIndex>;

/// Finite combination of words with rational coefficients; no zero terms.
/// Equality is structural; compare normal forms to compare elements of U(g).
class NCPolynomial {
 public:
  NCPolynomial() = default;
  explicit NCPolynomial(const Rational& constant);
  explicit NCPolynomial(NCWord word, const Rational& coeff = Rational(1));

  /// Each monomial written with its factors sorted in the PBW order.
  static NCPolynomial from_commutative(const Polynomial& p);

  const std::map<NCWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const NCWord& word, const Rational& coeff);

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator-(NCPolynomial a);
  /// Concatenation of words.
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend NCPolynomial operator*(const Rational& c, NCPolynomial a);
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  /// Image in the symmetric algebra: e_ij -> e_ij, f -> f.
  Polynomial commutative_image() const;

  std::string str() const;
  /// Factors kept in their stored order.
  std::string latex() const;

 private:
  std::map<NCWord, Rational> terms_;
};

/// Which out-of-order adjacent pair is rewritten next.
enum class RewriteStrategy { Leftmost, Random };

bool is_normal_word(const NCWord& w);

/// Rewrites ...ba... -> ...ab... + ...[b,a]... until every word is sorted
/// (e_ij lexicographic, f last). Random picks pairs with a seeded generator,
/// for confluence testing. Throws Error(IndexOutOfRange) for indices beyond n.
NCPolynomial pbw_normal_form(const NCPolynomial& p, const GammaTuple& g,
                             RewriteStrategy strategy = RewriteStrategy::Leftmost,
                             std::uint64_t seed = 0);

/// 1/2 (w + w') with w' the word with positions p and q exchanged.
/// Throws Error(IndexOutOfRange) unless p < q < |w|.
NCPolynomial symmetrize_pair(const NCWord& w, std::size_t p, std::size_t q);
/// Linear extension; every word must be longer than q.
NCPolynomial symmetrize_pair(const NCPolynomial& poly, std::size_t p, std::size_t q);

/// Number of positions p < q whose factors have a nonzero bracket.
int noncommuting_pairs(const NCWord& w, const GammaTuple& g);

/// Every two variables of every minor Delta_k bracket to zero.
bool minor_variables_commute(const GammaTuple& g);

/// Delta_k as a word sum; its variables commute, so the order is immaterial.
NCPolynomial minor_operator(int n, int k);

/// Bordered determinant of order k+1 for k < i < n-k+1, each monomial in
/// the fixed order e_{i j'} e_{i' i} (minor factors) with i' <= k < n-k+1 <= j'.
NCPolynomial ordered_bordered(int n, int k, int i);
/// The same with every pair e_{i j'} e_{i' i} replaced by its symmetrization.
NCPolynomial symmetrized_bordered(int n, int k, int i);

/// Whether ordered_bordered(n, k, i) has exactly one noncommuting pair in
/// each word.
bool bordered_single_pair(const GammaTuple& g, int k, int i);

struct ConstantSummand {
  int k = 0;
  int i = 0;
  /// k < i < n-k+1 has no solution; nothing to check.
  bool vacuous = false;
  /// symmetrized - ordered == c |E^{1,k}_{n-k+1,n}| after normalization.
  Rational c;
};

/// Checks that the symmetrized and the ordered bordered determinant differ
/// by a rational multiple c of Delta_k and returns c. The commutative image
/// of the symmetrized form must equal the bordered minor (this fixes the
/// cofactor signs). Requires singular gamma (else WrongCase), 1 <= k <= [n/2]
/// and, when the range is not empty, k < i < n-k+1 (else IndexOutOfRange),
/// n <= 5 (else DomainError). Throws Error(IdentityFailure) with the residual
/// when no such c exists.
ConstantSummand verify_constant_summand(const GammaTuple& g, int k, int i);

struct OperatorBasis {
  explicit OperatorBasis(GammaTuple g) : gamma(std::move(g)) {}

  GammaTuple gamma;
  BasisCase kase = BasisCase::Singular;
  /// Delta_1 .. Delta_[n/2] as operators.
  std::vector<NCPolynomial> minors;
  /// Cleared case-1 member f D + sum_k coeff_k sum_i bordered_{k,i} D / Delta_k, with D the
  /// product of the minors with nonzero coeff_k; f first, bordered words before the other minors.
  std::optional<NCPolynomial> f_member;
  /// f_member with the noncommuting pair of each bordered word symmetrized.
  std::optional<NCPolynomial> symmetrized;
  /// symmetrized - f_member as assembled from the constant summands.
  std::optional<NCPolynomial> correction;
  std::vector<ConstantSummand> summands;
  /// Regular gamma: formal products over the commuting minors.
  std::vector<PowerProduct> power_members;

  std::size_t cardinality() const {
    return (kase == BasisCase::Singular ? minors.size() + (f_member ? 1 : 0) : power_members.size());
  }
  /// Minors followed by the f-member (singular gamma only).
  std::vector<NCPolynomial> operators() const;
};

/// Operator form of the invariant basis. Checks that the minor variables
/// commute and that pbw(f_member) == pbw(symmetrized - correction); throws
/// Error(IdentityFailure) otherwise.
OperatorBasis build_operator_basis(const GammaTuple& g);

}  // namespace trilie
