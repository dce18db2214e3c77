#include "trilie/rational_function.hpp"

#include "trilie/errors.hpp"

namespace trilie {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  // Scale so that den has coprime integer coefficients and a positive lead.
  mpz_class lcm_den = 1;
  mpz_class gcd_num = 0;
  for (const auto& t : den_.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), t.coeff.numerator().get_mpz_t());
  }
  Rational scale{mpq_class(lcm_den, gcd_num)};
  if (den_.leading_term().coeff.sign() < 0) scale = -scale;
  if (!scale.is_one()) {
    num_ *= scale;
    den_ *= scale;
  }
  if (num_.is_zero()) den_ = Polynomial(1);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = -out.num_;
  return out;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.same_representation(b)) return true;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::derivative(VarId v) const {
  const Polynomial dn = num_.derivative(v);
  if (den_.is_constant()) return RationalFunction(dn, den_);
  const Polynomial dd = den_.derivative(v);
  if (dd.is_zero()) return RationalFunction(dn, den_);
  return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

Rational RationalFunction::evaluate(const std::function<Rational(VarId)>& value) const {
  const Rational d = den_.evaluate(value);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator vanishes at the point");
  return num_.evaluate(value) / d;
}

RationalFunction RationalFunction::rename(const std::function<VarId(VarId)>& map) const {
  return RationalFunction(num_.rename(map), den_.rename(map));
}

std::string RationalFunction::str() const {
  if (den_ == Polynomial(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace trilie
