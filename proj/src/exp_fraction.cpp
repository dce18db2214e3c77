#include "trilie/exp_fraction.hpp"

#include <algorithm>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

struct Aligned {
  std::shared_ptr<const FactorBase> base;
  std::vector<int> powers;
  ExpScalar a;
  ExpScalar b;
};

std::shared_ptr<const FactorBase> common_base(const std::shared_ptr<const FactorBase>& a,
                                              const std::shared_ptr<const FactorBase>& b) {
  if (a && b && a != b) throw Error(ErrorKind::DomainError, "fractions over different factor bases");
  return a ? a : b;
}

ExpScalar times_factor_powers(ExpScalar num, const FactorBase& base, const std::vector<int>& extra) {
  for (std::size_t i = 0; i < extra.size(); ++i) {
    for (int r = 0; r < extra[i]; ++r) num = num * base.factors[i];
  }
  return num;
}

std::optional<ExpScalar> divide_parts(const ExpScalar& num, const Polynomial& d) {
  ExpScalar out;
  for (const auto& [q, p] : num.parts()) {
    auto part = divide_exact(p, d);
    if (!part) return std::nullopt;
    out += ExpScalar(std::move(*part), q);
  }
  return out;
}

}  // namespace

ExpFraction::ExpFraction(ExpScalar num, std::shared_ptr<const FactorBase> base, std::size_t index,
                         int power)
    : num_(std::move(num)), base_(std::move(base)) {
  if (!base_ || index >= base_->factors.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "unknown denominator factor");
  }
  if (base_->factors[index].is_zero()) {
    throw Error(ErrorKind::SingularSubstitution, "denominator factor is identically zero");
  }
  powers_.assign(base_->factors.size(), 0);
  powers_[index] = power;
  reduce();
}

Polynomial ExpFraction::den() const {
  Polynomial d(1);
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    for (int r = 0; r < powers_[i]; ++r) d = d * base_->factors[i];
  }
  return d;
}

void ExpFraction::reduce() {
  if (num_.is_zero()) {
    std::fill(powers_.begin(), powers_.end(), 0);
    return;
  }
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    while (powers_[i] > 0) {
      auto q = divide_parts(num_, base_->factors[i]);
      if (!q) break;
      num_ = std::move(*q);
      --powers_[i];
    }
  }
}

namespace {

Aligned align(const ExpScalar& an, const std::shared_ptr<const FactorBase>& abase, const std::vector<int>& ap,
              const ExpScalar& bn, const std::shared_ptr<const FactorBase>& bbase, const std::vector<int>& bp) {
  Aligned out;
  out.base = common_base(abase, bbase);
  if (!out.base) {
    out.a = an;
    out.b = bn;
    return out;
  }
  const std::size_t size = out.base->factors.size();
  out.powers.assign(size, 0);
  std::vector<int> extra_a(size, 0);
  std::vector<int> extra_b(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    const int pa = i < ap.size() ? ap[i] : 0;
    const int pb = i < bp.size() ? bp[i] : 0;
    out.powers[i] = std::max(pa, pb);
    extra_a[i] = out.powers[i] - pa;
    extra_b[i] = out.powers[i] - pb;
  }
  out.a = times_factor_powers(an, *out.base, extra_a);
  out.b = times_factor_powers(bn, *out.base, extra_b);
  return out;
}

}  // namespace

ExpFraction operator+(const ExpFraction& a, const ExpFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto al = align(a.num_, a.base_, a.powers_, b.num_, b.base_, b.powers_);
  ExpFraction out;
  out.num_ = al.a + al.b;
  out.base_ = std::move(al.base);
  out.powers_ = std::move(al.powers);
  out.reduce();
  return out;
}

ExpFraction operator-(ExpFraction a) {
  a.num_ = -a.num_;
  return a;
}

ExpFraction operator-(const ExpFraction& a, const ExpFraction& b) { return a + (-b); }

ExpFraction operator*(const ExpFraction& a, const ExpFraction& b) {
  if (a.is_zero() || b.is_zero()) return ExpFraction();
  ExpFraction out;
  out.num_ = a.num_ * b.num_;
  out.base_ = common_base(a.base_, b.base_);
  if (out.base_) {
    out.powers_.assign(out.base_->factors.size(), 0);
    for (std::size_t i = 0; i < out.powers_.size(); ++i) {
      out.powers_[i] = (i < a.powers_.size() ? a.powers_[i] : 0) + (i < b.powers_.size() ? b.powers_[i] : 0);
    }
  }
  out.reduce();
  return out;
}

ExpFraction ExpFraction::derivative(VarId v) const {
  if (den().contains(v)) throw Error(ErrorKind::DomainError, "derivative through a denominator");
  ExpFraction out = *this;
  out.num_ = num_.derivative(v);
  out.reduce();
  return out;
}

std::string ExpFraction::str() const {
  const Polynomial d = den();
  if (d.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + d.str() + ")";
}

}  // namespace trilie
