#pragma once

#include <functional>
#include <string>

#include "trilie/polynomial.hpp"

namespace trilie {

/// Quotient of polynomials. The canonical form makes the denominator
/// primitive over the integers with a positive leading coefficient; common
/// polynomial factors are not cancelled, so equality cross-multiplies.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT: polynomials embed implicitly
  /// Throws Error(DivisionByZero) when den = 0.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);

  /// Exact equality by cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  /// Representation equality (same canonical num and den).
  bool same_representation(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /// Quotient rule; the result keeps den^2 as denominator.
  RationalFunction derivative(VarId v) const;
  /// Throws Error(DivisionByZero) if the denominator vanishes at the point.
  Rational evaluate(const std::function<Rational(VarId)>& value) const;
  RationalFunction rename(const std::function<VarId(VarId)>& map) const;

  std::string str() const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace trilie
