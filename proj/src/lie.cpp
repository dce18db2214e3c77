#include "trilie/lie.hpp"

#include <algorithm>

#include "trilie/errors.hpp"

namespace trilie {

GammaTuple::GammaTuple(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw Error(ErrorKind::DomainError, "t_gamma(n) requires n >= 2");
  }
  const bool all_equal = std::all_of(values_.begin(), values_.end(),
                                     [&](const Rational& v) { return v == values_.front(); });
  if (all_equal) {
    throw Error(ErrorKind::AllEqualGamma, "gamma is proportional to the identity: " + str());
  }
}

GammaTuple GammaTuple::parse(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    values.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return GammaTuple(std::move(values));
}

GammaTuple GammaTuple::reflected() const {
  std::vector<Rational> v(values_.rbegin(), values_.rend());
  return GammaTuple(std::move(v));
}

GammaTuple GammaTuple::affine(const Rational& lambda, const Rational& mu) const {
  if (lambda.is_zero()) throw Error(ErrorKind::DomainError, "affine map with lambda = 0");
  std::vector<Rational> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(lambda * x + mu);
  return GammaTuple(std::move(v));
}

std::string GammaTuple::str() const {
  std::string s;
  for (const auto& v : values_) {
    if (!s.empty()) s += ",";
    s += v.str();
  }
  return s;
}

GammaClassification classify(const GammaTuple& g) {
  const int n = g.n();
  const int half = n / 2;
  GammaClassification out;
  for (int k = 1; k <= half; ++k) {
    if (g(k) != g(conjugate(n, k))) {
      out.k0 = k;
      break;
    }
  }
  out.singular = !out.k0.has_value();
  if (out.singular) return out;

  const int k0 = *out.k0;
  const Rational scale = g(conjugate(n, k0)) - g(k0);
  Rational partial(0);
  for (int k = k0; k <= half; ++k) {
    partial += g(n - k + 1) - g(k);
    out.alphas.emplace(k, -(partial / scale));
  }
  return out;
}

GammaTuple normalize_gamma(const GammaTuple& g) {
  Rational sum(0);
  for (const auto& v : g.values()) sum += v;
  const Rational mean = sum / Rational(g.n());
  return g.affine(Rational(1), -mean);
}

namespace {

std::optional<EquivalenceWitness> affine_witness(const GammaTuple& from, const GammaTuple& to) {
  const int n = from.n();
  int q = 2;
  while (q <= n && from(q) == from(1)) ++q;
  // A valid tuple always has a second distinct value.
  const Rational lambda = (to(q) - to(1)) / (from(q) - from(1));
  if (lambda.is_zero()) return std::nullopt;
  const Rational mu = to(1) - lambda * from(1);
  for (int i = 1; i <= n; ++i) {
    if (lambda * from(i) + mu != to(i)) return std::nullopt;
  }
  return EquivalenceWitness{lambda, mu, false};
}

}  // namespace

std::optional<EquivalenceWitness> gamma_equivalent(const GammaTuple& g1, const GammaTuple& g2) {
  if (g1.n() != g2.n()) {
    throw Error(ErrorKind::DimensionMismatch, "gamma tuples of different length");
  }
  if (auto w = affine_witness(g1, g2)) return w;
  if (auto w = affine_witness(g1.reflected(), g2)) {
    w->reflected = true;
    return w;
  }
  return std::nullopt;
}

bool secondary_diagonal_commutes(const GammaTuple& g) {
  const int n = g.n();
  for (int k = 1; k <= n / 2; ++k) {
    if (!bracket(BasisIndex::f(), BasisIndex::e(k, conjugate(n, k)), g).empty()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

BasisIndex BasisIndex::e(int i, int j) {
  if (i < 1 || j <= i) {
    throw Error(ErrorKind::IndexOutOfRange,
                "e(" + std::to_string(i) + "," + std::to_string(j) + ") needs 1 <= i < j");
  }
  return BasisIndex(i, j);
}

VarId BasisIndex::dual_var() const { return is_f() ? VarId::x0() : VarId::x(j_, i_); }

VarId BasisIndex::algebra_var() const { return is_f() ? VarId::f() : VarId::e(i_, j_); }

std::string BasisIndex::name() const {
  return is_f() ? "f" : "e_" + std::to_string(i_) + "_" + std::to_string(j_);
}

std::string BasisIndex::latex() const { return algebra_var().latex(); }

BasisIndex BasisIndex::parse(std::string_view name) {
  const VarId v = VarId::parse(name);
  if (v.kind() == VarKind::F) return f();
  if (v.kind() == VarKind::E) return e(v.i(), v.j());
  throw Error(ErrorKind::ParseError, "not a basis element: '" + std::string(name) + "'");
}

std::vector<BasisIndex> algebra_basis(int n) {
  std::vector<BasisIndex> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(BasisIndex::e(i, j));
  }
  out.push_back(BasisIndex::f());
  return out;
}

namespace {

void check_bounds(const BasisIndex& a, int n) {
  if (!a.is_f() && a.j() > n) {
    throw Error(ErrorKind::IndexOutOfRange, a.name() + " is out of range for n = " + std::to_string(n));
  }
}

void accumulate(LinearCombination& lc, const BasisIndex& b, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = lc.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) lc.erase(it);
  }
}

}  // namespace

LinearCombination bracket(const BasisIndex& a, const BasisIndex& b, const GammaTuple& g) {
  check_bounds(a, g.n());
  check_bounds(b, g.n());
  LinearCombination out;
  if (a.is_f() && b.is_f()) return out;
  if (a.is_f()) {
    accumulate(out, b, g(b.i()) - g(b.j()));
    return out;
  }
  if (b.is_f()) {
    accumulate(out, a, g(a.j()) - g(a.i()));
    return out;
  }
  // [e_ij, e_i'j'] = delta_{i'j} e_{ij'} - delta_{ij'} e_{i'j}
  if (b.i() == a.j()) accumulate(out, BasisIndex::e(a.i(), b.j()), Rational(1));
  if (a.i() == b.j()) accumulate(out, BasisIndex::e(b.i(), a.j()), Rational(-1));
  return out;
}

StructureConstants::StructureConstants(const GammaTuple& g) : basis_(algebra_basis(g.n())) {
  for (int k = 0; k < dim(); ++k) index_.emplace(basis_[static_cast<std::size_t>(k)], k);
  table_.resize(static_cast<std::size_t>(dim() * dim()));
  for (int a = 0; a < dim(); ++a) {
    for (int b = 0; b < dim(); ++b) {
      auto& slot = table_[static_cast<std::size_t>(a * dim() + b)];
      for (const auto& [c, coeff] : trilie::bracket(basis_[a], basis_[b], g)) {
        slot.emplace_back(index_.at(c), coeff);
      }
    }
  }
}

int StructureConstants::index_of(const BasisIndex& b) const {
  const auto it = index_.find(b);
  if (it == index_.end()) throw Error(ErrorKind::IndexOutOfRange, b.name() + " not in basis");
  return it->second;
}

}  // namespace trilie
