#include "trilie/exp_scalar.hpp"

namespace trilie {

ExpScalar::ExpScalar(Polynomial p, const Rational& grade) {
  if (!p.is_zero()) parts_.emplace(grade, std::move(p));
}

Polynomial ExpScalar::part(const Rational& grade) const {
  const auto it = parts_.find(grade);
  return it == parts_.end() ? Polynomial() : it->second;
}

bool ExpScalar::is_polynomial() const {
  return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first.is_zero());
}

ExpScalar& ExpScalar::operator+=(const ExpScalar& o) {
  for (const auto& [q, p] : o.parts_) {
    auto [it, inserted] = parts_.try_emplace(q, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) parts_.erase(it);
    }
  }
  return *this;
}

ExpScalar& ExpScalar::operator-=(const ExpScalar& o) {
  for (const auto& [q, p] : o.parts_) {
    auto [it, inserted] = parts_.try_emplace(q, -p);
    if (!inserted) {
      it->second -= p;
      if (it->second.is_zero()) parts_.erase(it);
    }
  }
  return *this;
}

ExpScalar operator*(const ExpScalar& a, const ExpScalar& b) {
  ExpScalar out;
  for (const auto& [qa, pa] : a.parts_) {
    for (const auto& [qb, pb] : b.parts_) {
      out += ExpScalar(pa * pb, qa + qb);
    }
  }
  return out;
}

ExpScalar& ExpScalar::operator*=(const ExpScalar& o) {
  *this = *this * o;
  return *this;
}

ExpScalar operator*(ExpScalar a, const Rational& c) {
  if (c.is_zero()) return ExpScalar();
  for (auto& [q, p] : a.parts_) p *= c;
  return a;
}

ExpScalar operator*(ExpScalar a, const Polynomial& poly) {
  ExpScalar out;
  for (auto& [q, p] : a.parts_) out += ExpScalar(p * poly, q);
  return out;
}

ExpScalar operator-(ExpScalar a) {
  for (auto& [q, p] : a.parts_) p = -p;
  return a;
}

ExpScalar ExpScalar::derivative(VarId v) const {
  ExpScalar out;
  for (const auto& [q, p] : parts_) out += ExpScalar(p.derivative(v), q);
  return out;
}

ExpScalar ExpScalar::rename(const std::function<VarId(VarId)>& map) const {
  ExpScalar out;
  for (const auto& [q, p] : parts_) out += ExpScalar(p.rename(map), q);
  return out;
}

ExpScalar ExpScalar::substitute(const std::map<VarId, ExpScalar>& values) const {
  ExpScalar out;
  for (const auto& [q, p] : parts_) {
    for (const Term& t : p.terms()) {
      ExpScalar prod = unit(q) * t.coeff;
      Monomial rest;
      for (const auto& [v, e] : t.monomial.factors()) {
        const auto it = values.find(v);
        if (it == values.end()) {
          for (std::uint32_t r = 0; r < e; ++r) rest = rest * Monomial(v);
          continue;
        }
        for (std::uint32_t r = 0; r < e; ++r) prod *= it->second;
      }
      out += prod * Polynomial(rest, Rational(1));
    }
  }
  return out;
}

ExpScalar ExpScalar::negate_grades() const {
  ExpScalar out;
  for (const auto& [q, p] : parts_) out.parts_.emplace(-q, p);
  return out;
}

Polynomial ExpScalar::at_zero_grade() const {
  Polynomial out;
  for (const auto& [q, p] : parts_) out += p;
  return out;
}

std::string ExpScalar::str() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (const auto& [q, p] : parts_) {
    if (!s.empty()) s += " + ";
    if (q.is_zero()) {
      s += "(" + p.str() + ")";
    } else {
      s += "(" + p.str() + ")*u^(" + q.str() + ")";
    }
  }
  return s;
}

}  // namespace trilie
