#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "trilie/matrix.hpp"
#include "trilie/polynomial.hpp"

namespace trilie::testing {

inline Polynomial x(int i, int j) { return Polynomial::var(VarId::x(i, j)); }
inline Polynomial e(int i, int j) { return Polynomial::var(VarId::e(i, j)); }
inline Polynomial x0() { return Polynomial::var(VarId::x0()); }
inline Polynomial f() { return Polynomial::var(VarId::f()); }
inline Polynomial c(long v) { return Polynomial(v); }

/// Random polynomial of total degree <= max_degree in the given variables,
/// small integer/half-integer coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<VarId>& vars,
                                    int max_degree, int max_terms) {
  std::uniform_int_distribution<int> terms_dist(0, max_terms);
  std::uniform_int_distribution<int> deg_dist(0, max_degree);
  std::uniform_int_distribution<std::size_t> var_dist(0, vars.size() - 1);
  std::uniform_int_distribution<long> coeff_dist(-5, 5);
  std::uniform_int_distribution<long> den_dist(1, 2);
  std::vector<Term> terms;
  const int count = terms_dist(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    const int d = deg_dist(rng);
    for (int k = 0; k < d; ++k) m = m * Monomial(vars[var_dist(rng)]);
    terms.push_back({m, Rational(coeff_dist(rng), den_dist(rng))});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// Leibniz permutation sum; independent of the memoized expansion.
template <class Scalar>
Scalar permutation_determinant(const Mat<Scalar>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total(0);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    Scalar prod(1);
    for (int r = 0; r < n; ++r) prod = prod * m(r, perm[static_cast<std::size_t>(r)]);
    if (inversions % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace trilie::testing
