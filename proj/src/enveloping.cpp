#include "trilie/enveloping.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "trilie/errors.hpp"
#include "trilie/parallel.hpp"

namespace trilie {

namespace {

BasisIndex basis_of(VarId v) {
  if (v.kind() == VarKind::F) return BasisIndex::f();
  if (v.kind() == VarKind::E) return BasisIndex::e(v.i(), v.j());
  throw Error(ErrorKind::DomainError, "not an algebra variable: " + v.name());
}

std::string coeff_latex(const Rational& c) {
  if (c.is_integer()) return c.numerator().get_str();
  return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
}

void check_indices(const NCWord& w, int n) {
  for (const auto& b : w) {
    if (!b.is_f() && b.j() > n) {
      throw Error(ErrorKind::IndexOutOfRange, b.name() + " is out of range for n = " + std::to_string(n));
    }
  }
}

/// Brackets of basis elements, memoized for one normalization.
class BracketCache {
 public:
  explicit BracketCache(const GammaTuple& g) : g_(g) {}

  const LinearCombination& operator()(const BasisIndex& a, const BasisIndex& b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, bracket(a, b, g_)).first;
    return it->second;
  }

 private:
  const GammaTuple& g_;
  std::map<std::pair<BasisIndex, BasisIndex>, LinearCombination> cache_;
};

std::vector<std::size_t> descents(const NCWord& w) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (w[p + 1] < w[p]) out.push_back(p);
  }
  return out;
}

/// Normal form of a single word, processed longest-word first so that
/// equal words produced along different branches merge before rewriting.
std::map<NCWord, Rational> normalize_word(const NCWord& start, const Rational& coeff, BracketCache& br,
                                          RewriteStrategy strategy, std::mt19937_64& rng) {
  auto longer = [](const NCWord& a, const NCWord& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  };
  std::map<NCWord, Rational, decltype(longer)> pending(longer);
  std::map<NCWord, Rational> done;
  pending.emplace(start, coeff);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const NCWord& w = node.key();
    const Rational& c = node.mapped();
    if (c.is_zero()) continue;
    const auto des = descents(w);
    if (des.empty()) {
      auto [it, fresh] = done.emplace(w, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) done.erase(it);
      }
      continue;
    }
    std::size_t p = des.front();
    if (strategy == RewriteStrategy::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, des.size() - 1);
      p = des[pick(rng)];
    }
    auto push = [&](NCWord word, const Rational& value) {
      auto [it, fresh] = pending.emplace(std::move(word), value);
      if (!fresh) it->second += value;
    };
    NCWord swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    push(std::move(swapped), c);
    for (const auto& [b, v] : br(w[p], w[p + 1])) {
      NCWord shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      shorter.push_back(b);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
      push(std::move(shorter), c * v);
    }
  }
  return done;
}

/// Leibniz expansion of |e_{r c}| over the given rows and columns, each
/// word ordered by column.
NCPolynomial leibniz(const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  NCPolynomial out;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    NCWord w;
    for (std::size_t col = 0; col < m; ++col) w.push_back(BasisIndex::e(rows[perm[col]], cols[col]));
    out.add(w, Rational(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

template <class Vec>
Vec without(const Vec& v, std::size_t at) {
  Vec out = v;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(at));
  return out;
}

void check_bordered(int n, int k, int i) {
  if (n < 2 || k < 1 || 2 * k > n) throw Error(ErrorKind::IndexOutOfRange, "minor order out of range");
  if (i <= k || i >= n - k + 1) throw Error(ErrorKind::IndexOutOfRange, "border index must satisfy k < i < n-k+1");
}

/// Sum over c <= k, r >= n-k+1 of the cofactor sign times pair(c, r) times
/// the complementary minor of the block.
template <class Pair>
NCPolynomial bordered_expansion(int n, int k, int i, Pair pair) {
  check_bordered(n, k, i);
  const int kappa = n - k + 1;
  const std::vector<int> rows = range(1, k);
  const std::vector<int> cols = range(kappa, n);
  NCPolynomial out;
  for (int c = 1; c <= k; ++c) {
    for (int rp = 1; rp <= k; ++rp) {
      const int r = kappa + rp - 1;
      const Rational sign((c + rp + k + 1) % 2 == 0 ? 1 : -1);
      const NCPolynomial rest = leibniz(without(rows, static_cast<std::size_t>(c - 1)),
                                        without(cols, static_cast<std::size_t>(rp - 1)));
      out += sign * (pair(c, r) * rest);
    }
  }
  return out;
}

ConstantSummand constant_summand(const GammaTuple& g, int k, int i) {
  const int n = g.n();
  ConstantSummand out;
  out.k = k;
  out.i = i;
  const NCPolynomial sym = symmetrized_bordered(n, k, i);
  if (sym.commutative_image() != bordered_minor(n, k, i, Vars::Algebra)) {
    throw Error(ErrorKind::IdentityFailure, "cofactor expansion does not reproduce the bordered minor");
  }
  const NCPolynomial diff = pbw_normal_form(sym - ordered_bordered(n, k, i), g);
  const NCPolynomial block = pbw_normal_form(minor_operator(n, k), g);
  if (!diff.is_zero()) {
    const auto& [word, coeff] = *diff.terms().begin();
    auto it = block.terms().find(word);
    if (it == block.terms().end()) {
      throw Error(ErrorKind::IdentityFailure, "constant summand residual: " + diff.str());
    }
    out.c = coeff / it->second;
  }
  const NCPolynomial residual = diff - out.c * block;
  if (!residual.is_zero()) {
    throw Error(ErrorKind::IdentityFailure, "constant summand residual: " + residual.str());
  }
  return out;
}

NCPolynomial product(const std::vector<NCPolynomial>& factors) {
  NCPolynomial out(Rational(1));
  for (const auto& f : factors) out = out * f;
  return out;
}

}  // namespace

NCPolynomial::NCPolynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(NCWord{}, constant);
}

NCPolynomial::NCPolynomial(NCWord word, const Rational& coeff) {
  if (!coeff.is_zero()) terms_.emplace(std::move(word), coeff);
}

NCPolynomial NCPolynomial::from_commutative(const Polynomial& p) {
  NCPolynomial out;
  for (const auto& t : p.terms()) {
    NCWord w;
    for (const auto& [v, e] : t.monomial.factors()) {
      for (std::uint32_t r = 0; r < e; ++r) w.push_back(basis_of(v));
    }
    std::sort(w.begin(), w.end());
    out.add(w, t.coeff);
  }
  return out;
}

void NCPolynomial::add(const NCWord& word, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.emplace(word, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPolynomial operator-(NCPolynomial a) {
  for (auto& [w, c] : a.terms_) c = -c;
  return a;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      NCWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

NCPolynomial operator*(const Rational& c, NCPolynomial a) {
  if (c.is_zero()) return NCPolynomial();
  for (auto& [w, v] : a.terms_) v *= c;
  return a;
}

Polynomial NCPolynomial::commutative_image() const {
  std::vector<Term> terms;
  for (const auto& [w, c] : terms_) {
    Monomial m;
    for (const auto& b : w) m = m * Monomial(b.algebra_var());
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(std::move(terms));
}

std::string NCPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << "*";
    for (std::size_t p = 0; p < w.size(); ++p) os << (p ? "*" : "") << w[p].name();
  }
  return os.str();
}

std::string NCPolynomial::latex() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const Rational mag = c.abs();
    if (c.sign() < 0) {
      s += "-";
    } else if (!first) {
      s += "+";
    }
    first = false;
    if (w.empty()) {
      s += coeff_latex(mag);
      continue;
    }
    if (!mag.is_one()) s += coeff_latex(mag);
    for (std::size_t p = 0; p < w.size(); ++p) s += (p ? "\\," : "") + w[p].latex();
  }
  return s;
}

bool is_normal_word(const NCWord& w) { return std::is_sorted(w.begin(), w.end()); }

NCPolynomial pbw_normal_form(const NCPolynomial& p, const GammaTuple& g, RewriteStrategy strategy,
                             std::uint64_t seed) {
  std::vector<std::pair<NCWord, Rational>> terms(p.terms().begin(), p.terms().end());
  for (const auto& [w, c] : terms) check_indices(w, g.n());
  const auto parts = parallel_map<std::map<NCWord, Rational>>(terms.size(), [&](std::size_t t) {
    BracketCache br(g);
    std::mt19937_64 rng(seed + t);
    return normalize_word(terms[t].first, terms[t].second, br, strategy, rng);
  });
  NCPolynomial out;
  for (const auto& part : parts) {
    for (const auto& [w, c] : part) out.add(w, c);
  }
  return out;
}

NCPolynomial symmetrize_pair(const NCWord& w, std::size_t p, std::size_t q) {
  if (!(p < q && q < w.size())) throw Error(ErrorKind::IndexOutOfRange, "symmetrize_pair needs p < q < length");
  NCWord swapped = w;
  std::swap(swapped[p], swapped[q]);
  NCPolynomial out(w, Rational(1, 2));
  out.add(swapped, Rational(1, 2));
  return out;
}

NCPolynomial symmetrize_pair(const NCPolynomial& poly, std::size_t p, std::size_t q) {
  NCPolynomial out;
  for (const auto& [w, c] : poly.terms()) out += c * symmetrize_pair(w, p, q);
  return out;
}

int noncommuting_pairs(const NCWord& w, const GammaTuple& g) {
  int count = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t q = p + 1; q < w.size(); ++q) count += bracket(w[p], w[q], g).empty() ? 0 : 1;
  }
  return count;
}

bool minor_variables_commute(const GammaTuple& g) {
  const int n = g.n();
  for (int k = 1; 2 * k <= n; ++k) {
    std::vector<BasisIndex> vars;
    for (int c = 1; c <= k; ++c) {
      for (int r = n - k + 1; r <= n; ++r) vars.push_back(BasisIndex::e(c, r));
    }
    for (std::size_t a = 0; a < vars.size(); ++a) {
      for (std::size_t b = a + 1; b < vars.size(); ++b) {
        if (!bracket(vars[a], vars[b], g).empty()) return false;
      }
    }
  }
  return true;
}

NCPolynomial minor_operator(int n, int k) {
  if (n < 2 || k < 1 || 2 * k > n) throw Error(ErrorKind::IndexOutOfRange, "minor order out of range");
  return leibniz(range(1, k), range(n - k + 1, n));
}

NCPolynomial ordered_bordered(int n, int k, int i) {
  return bordered_expansion(n, k, i, [i](int c, int r) {
    return NCPolynomial(NCWord{BasisIndex::e(i, r), BasisIndex::e(c, i)});
  });
}

NCPolynomial symmetrized_bordered(int n, int k, int i) {
  return bordered_expansion(n, k, i, [i](int c, int r) {
    return symmetrize_pair(NCWord{BasisIndex::e(i, r), BasisIndex::e(c, i)}, 0, 1);
  });
}

bool bordered_single_pair(const GammaTuple& g, int k, int i) {
  const NCPolynomial p = ordered_bordered(g.n(), k, i);
  for (const auto& [w, c] : p.terms()) {
    if (noncommuting_pairs(w, g) != 1) return false;
  }
  return true;
}

ConstantSummand verify_constant_summand(const GammaTuple& g, int k, int i) {
  const int n = g.n();
  if (!classify(g).singular) throw Error(ErrorKind::WrongCase, "constant summand needs singular gamma");
  if (k < 1 || 2 * k > n) throw Error(ErrorKind::IndexOutOfRange, "minor order out of range");
  if (n > 5) throw Error(ErrorKind::DomainError, "constant summand check is limited to n <= 5");
  if (k + 1 >= n - k + 1) {
    ConstantSummand out;
    out.k = k;
    out.i = i;
    out.vacuous = true;
    return out;
  }
  return constant_summand(g, k, i);
}

std::vector<NCPolynomial> OperatorBasis::operators() const {
  if (kase != BasisCase::Singular) return {};
  std::vector<NCPolynomial> out = minors;
  if (f_member) out.push_back(*f_member);
  return out;
}

OperatorBasis build_operator_basis(const GammaTuple& g) {
  const int n = g.n();
  OperatorBasis out(g);
  if (!minor_variables_commute(g)) throw Error(ErrorKind::IdentityFailure, "minor variables do not commute");
  for (int k = 1; 2 * k <= n; ++k) out.minors.push_back(minor_operator(n, k));
  if (!classify(g).singular) {
    out.kase = BasisCase::Regular;
    out.power_members = build_case2_basis(g, Vars::Algebra).power_members;
    return out;
  }
  const InvariantBasis basis = build_case1_basis(g, Vars::Algebra);
  const auto& parts = basis.rational_parts;
  std::vector<NCPolynomial> dens;
  for (const auto& part : parts) dens.push_back(out.minors[static_cast<std::size_t>(part.k - 1)]);

  NCPolynomial ordered = NCPolynomial(NCWord{BasisIndex::f()}) * product(dens);
  NCPolynomial symmetric = ordered;
  NCPolynomial correction;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const int k = parts[p].k;
    const NCPolynomial others = product(without(dens, p));
    NCPolynomial ord;
    NCPolynomial sym;
    Rational total;
    for (int i = k + 1; i < n - k + 1; ++i) {
      ord += ordered_bordered(n, k, i);
      sym += symmetrized_bordered(n, k, i);
      const ConstantSummand cs = constant_summand(g, k, i);
      total += cs.c;
      out.summands.push_back(cs);
    }
    ordered += parts[p].coeff * (ord * others);
    symmetric += parts[p].coeff * (sym * others);
    correction += (parts[p].coeff * total) * (dens[p] * others);
  }

  const Polynomial cleared = clear_denominators(basis).polynomial_members.back();
  if (ordered.commutative_image() != cleared) {
    throw Error(ErrorKind::IdentityFailure, "operator member does not reproduce the cleared invariant");
  }
  if (pbw_normal_form(ordered, g) != pbw_normal_form(symmetric - correction, g)) {
    throw Error(ErrorKind::IdentityFailure, "symmetrized member differs from the ordered one beyond the constant summands");
  }
  out.f_member = std::move(ordered);
  out.symmetrized = std::move(symmetric);
  out.correction = std::move(correction);
  return out;
}

}  // namespace trilie
