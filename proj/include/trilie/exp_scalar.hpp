#pragma once

#include <functional>
#include <map>
#include <string>

#include "trilie/polynomial.hpp"

namespace trilie {

/// Finite sum  sum_q P_q u^q  with polynomial coefficients and rational grades,
/// where u^q stands for exp(q*eps). Grades multiply additively; no zero parts.
class ExpScalar {
 public:
  ExpScalar() = default;
  explicit ExpScalar(long constant) : ExpScalar(Polynomial(constant)) {}
  explicit ExpScalar(Polynomial p, const Rational& grade = Rational(0));

  /// u^q.
  static ExpScalar unit(const Rational& grade) { return ExpScalar(Polynomial(1), grade); }

  const std::map<Rational, Polynomial>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  /// The grade-q coefficient (zero if absent).
  Polynomial part(const Rational& grade) const;
  /// True when only grade 0 occurs.
  bool is_polynomial() const;

  ExpScalar& operator+=(const ExpScalar& o);
  ExpScalar& operator-=(const ExpScalar& o);
  ExpScalar& operator*=(const ExpScalar& o);

  friend ExpScalar operator+(ExpScalar a, const ExpScalar& b) { return a += b; }
  friend ExpScalar operator-(ExpScalar a, const ExpScalar& b) { return a -= b; }
  friend ExpScalar operator*(const ExpScalar& a, const ExpScalar& b);
  friend ExpScalar operator*(ExpScalar a, const Rational& c);
  friend ExpScalar operator*(const Rational& c, ExpScalar a) { return std::move(a) * c; }
  friend ExpScalar operator*(ExpScalar a, const Polynomial& p);
  friend ExpScalar operator-(ExpScalar a);
  friend bool operator==(const ExpScalar& a, const ExpScalar& b) = default;

  ExpScalar derivative(VarId v) const;
  ExpScalar rename(const std::function<VarId(VarId)>& map) const;
  /// Replaces each listed variable by an ExpScalar value.
  ExpScalar substitute(const std::map<VarId, ExpScalar>& values) const;
  /// u^q -> u^{-q}.
  ExpScalar negate_grades() const;
  /// Sets eps = 0, collapsing all grades.
  Polynomial at_zero_grade() const;

  std::string str() const;

 private:
  std::map<Rational, Polynomial> parts_;
};

}  // namespace trilie
