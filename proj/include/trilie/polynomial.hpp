#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "trilie/rational.hpp"
#include "trilie/variable.hpp"

namespace trilie {

/// Power product of variables with positive exponents, sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t exponent = 1);
  /// Factors may be unsorted and repeat; zero exponents are dropped.
  Monomial(std::initializer_list<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(VarId v) const;

  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  /// Removes one power of v; requires exponent(v) > 0.
  Monomial without_one(VarId v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
};

/// Canonical term order: lexicographic with X0 the most significant variable,
/// higher powers first, constants last. Returns true when a precedes b.
bool term_precedes(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted in
/// canonical term order with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(long constant) : Polynomial(Rational(constant)) {}
  explicit Polynomial(VarId v) : Polynomial(Monomial(v)) {}
  explicit Polynomial(Monomial m, Rational coeff = Rational(1));

  static Polynomial var(VarId v) { return Polynomial(v); }
  /// Builds from arbitrary terms: sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (the coefficient of the empty monomial).
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }
  std::uint32_t degree() const;
  std::vector<VarId> variables() const;
  bool contains(VarId v) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(unsigned e) const;
  Polynomial derivative(VarId v) const;
  /// Applies a variable renaming; the map need not preserve the order.
  Polynomial rename(const std::function<VarId(VarId)>& map) const;
  /// Replaces every variable in `values` by the given polynomial.
  Polynomial substitute(const std::map<VarId, Polynomial>& values) const;
  /// Evaluates with `value(v)` for every variable.
  Rational evaluate(const std::function<Rational(VarId)>& value) const;
  /// Terms whose monomial contains v.
  Polynomial terms_with(VarId v) const;

  /// Text form, e.g. "x_3_1*x_4_2 - x_3_2*x_4_1" or "0".
  std::string str() const;
  /// LaTeX form, e.g. "x_{31}x_{42}-x_{32}x_{41}".
  std::string latex() const;

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// q with a = q*b exactly, or nullopt when b does not divide a.
/// Throws Error(DivisionByZero) when b = 0.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace trilie
