#include "trilie/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "trilie/errors.hpp"

namespace trilie {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VarId v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial::Monomial(std::initializer_list<Factor> factors) {
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    *this = *this * Monomial(v, e);
  }
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
  const auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, VarId x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial out;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (it != other.factors_.end() && it->first == v) {
      sub = it->second;
      ++it;
    }
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial Monomial::without_one(VarId v) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& [w, e] : factors_) {
    if (w == v) {
      if (e > 1) out.factors_.emplace_back(w, e - 1);
    } else {
      out.factors_.emplace_back(w, e);
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& [v, e] : factors_) {
    h ^= (static_cast<std::size_t>(v.code()) << 8) ^ e;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool term_precedes(const Monomial& a, const Monomial& b) {
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  const auto ea = a.factors().end();
  const auto eb = b.factors().end();
  for (;; ++ia, ++ib) {
    if (ia == ea) return false;
    if (ib == eb) return true;
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) terms_.push_back({Monomial(), std::move(constant)});
}

Polynomial::Polynomial(Monomial m, Rational coeff) {
  if (!coeff.is_zero()) terms_.push_back({std::move(m), std::move(coeff)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return term_precedes(a.monomial, b.monomial); });
  Polynomial out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rational(0);
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Polynomial::contains(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& t) { return t.monomial.exponent(v) > 0; });
}

namespace {

template <class Combine>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, Combine sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && term_precedes(ia->monomial, ib->monomial))) {
      out.push_back(*ia++);
    } else if (ia == a.end() || term_precedes(ib->monomial, ia->monomial)) {
      out.push_back({ib->monomial, sign(ib->coeff)});
      ++ib;
    } else {
      Rational c = ia->coeff + sign(ib->coeff);
      if (!c.is_zero()) out.push_back({ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rational& c) { return c; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rational& c) { return -c; });
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.is_constant()) return b * a.terms_.front().coeff;
  if (b.is_constant()) return a * b.terms_.front().coeff;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      acc[ta.monomial * tb.monomial] += ta.coeff * tb.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return term_precedes(x.monomial, y.monomial); });
  Polynomial out;
  out.terms_ = std::move(terms);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(VarId v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.monomial.exponent(v);
    if (e == 0) continue;
    out.push_back({t.monomial.without_one(v), t.coeff * Rational(static_cast<long>(e))});
  }
  // Removing one power of a fixed variable can reorder terms.
  return from_terms(std::move(out));
}

Polynomial Polynomial::rename(const std::function<VarId(VarId)>& map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (const auto& [v, e] : t.monomial.factors()) m = m * Monomial(map(v), e);
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& values) const {
  Polynomial out;
  for (const auto& t : terms_) {
    Polynomial term(Monomial(), t.coeff);
    Monomial kept;
    for (const auto& [v, e] : t.monomial.factors()) {
      const auto it = values.find(v);
      if (it == values.end()) {
        kept = kept * Monomial(v, e);
      } else {
        term *= it->second.pow(e);
      }
    }
    out += term * Polynomial(kept);
  }
  return out;
}

Rational Polynomial::evaluate(const std::function<Rational(VarId)>& value) const {
  Rational sum(0);
  std::map<VarId, Rational> cache;
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, value(v)).first;
      for (std::uint32_t k = 0; k < e; ++k) prod *= it->second;
    }
    sum += prod;
  }
  return sum;
}

Polynomial Polynomial::terms_with(VarId v) const {
  Polynomial out;
  for (const auto& t : terms_) {
    if (t.monomial.exponent(v) > 0) out.terms_.push_back(t);
  }
  return out;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += v.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string monomial_latex(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    s += v.latex();
    if (e > 1) s += "^{" + std::to_string(e) + "}";
  }
  return s;
}

std::string coeff_latex(const Rational& c) {
  if (c.is_integer()) return c.numerator().get_str();
  return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Rational mag = t.coeff.abs();
    if (first) {
      if (t.coeff.sign() < 0) os << "-";
    } else {
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (t.monomial.is_one()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << monomial_text(t.monomial);
    } else {
      os << mag.str() << "*" << monomial_text(t.monomial);
    }
  }
  return os.str();
}

std::string Polynomial::latex() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const Rational mag = t.coeff.abs();
    if (t.coeff.sign() < 0) {
      s += "-";
    } else if (!first) {
      s += "+";
    }
    first = false;
    if (t.monomial.is_one()) {
      s += coeff_latex(mag);
    } else {
      if (!mag.is_one()) s += coeff_latex(mag);
      s += monomial_latex(t.monomial);
    }
  }
  return s;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h ^= t.monomial.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= t.coeff.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact division by the zero polynomial");
  if (b.is_constant()) return a * b.leading_term().coeff.inverse();
  const Term& lead = b.leading_term();
  std::vector<Term> quotient;
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const Term& top = rest.leading_term();
    if (!lead.monomial.divides(top.monomial)) return std::nullopt;
    Term t{top.monomial.quotient(lead.monomial), top.coeff / lead.coeff};
    rest -= Polynomial(t.monomial, t.coeff) * b;
    quotient.push_back(std::move(t));
  }
  // Quotient terms are produced in descending order already.
  return Polynomial::from_terms(std::move(quotient));
}

}  // namespace trilie
