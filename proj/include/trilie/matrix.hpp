#pragma once

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <vector>

#include "trilie/errors.hpp"
#include "trilie/exp_scalar.hpp"
#include "trilie/polynomial.hpp"
#include "trilie/rational.hpp"

namespace Eigen {

namespace trilie_detail {
template <class T>
struct ExactNumTraits : GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 16
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
};
}  // namespace trilie_detail

template <>
struct NumTraits<trilie::Rational> : trilie_detail::ExactNumTraits<trilie::Rational> {};
template <>
struct NumTraits<trilie::Polynomial> : trilie_detail::ExactNumTraits<trilie::Polynomial> {};
template <>
struct NumTraits<trilie::ExpScalar> : trilie_detail::ExactNumTraits<trilie::ExpScalar> {};

}  // namespace Eigen

namespace trilie {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = Mat<Rational>;
using PolyMatrix = Mat<Polynomial>;
using ExpMatrix = Mat<ExpScalar>;

namespace detail {
template <class Scalar>
bool is_zero_entry(const Scalar& s) {
  return s.is_zero();
}
}  // namespace detail

/// Exact determinant over any commutative ring scalar.
///
/// Laplace expansion with memoized minors: after processing row r, slot S
/// holds the minor on rows 0..r and the column set S (|S| = r+1). Cost is
/// O(n^2 2^n) ring operations; no division, so symbolic entries are fine.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Scalar(1);
  if (n > 24) throw Error(ErrorKind::DomainError, "determinant: matrix too large for expansion");

  std::vector<Scalar> minors(std::size_t{1} << n, Scalar(0));
  std::vector<bool> known(minors.size(), false);
  minors[0] = Scalar(1);
  known[0] = true;
  std::vector<std::uint32_t> frontier{0};
  for (int r = 0; r < n; ++r) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t base : frontier) {
      if (detail::is_zero_entry(minors[base])) continue;
      for (int c = 0; c < n; ++c) {
        const std::uint32_t bit = 1u << c;
        if (base & bit) continue;
        const auto& entry = m(r, c);
        if (detail::is_zero_entry(entry)) continue;
        const std::uint32_t mask = base | bit;
        // Position of c inside mask, counted from the left; the expanded
        // entry sits in row r of the minor, so its sign is (-1)^(r + pos).
        const int pos = std::popcount(base & (bit - 1));
        Scalar contrib = minors[base] * entry;
        if (((r + pos) & 1) != 0) {
          minors[mask] -= contrib;
        } else {
          minors[mask] += contrib;
        }
        if (!known[mask]) {
          known[mask] = true;
          next.push_back(mask);
        }
      }
    }
    for (std::uint32_t base : frontier) minors[base] = Scalar(0);
    frontier = std::move(next);
  }
  return minors[(std::size_t{1} << n) - 1];
}

/// Classical adjugate: adj(m) * m = det(m) * I.
template <class Derived>
Mat<typename Derived::Scalar> adjugate(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(ErrorKind::NonSquare, "adjugate of a non-square matrix");
  const Eigen::Index n = m.rows();
  Mat<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Mat<Scalar> minor(n - 1, n - 1);
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Scalar d = determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  }
  return adj;
}

/// Plain matrix product without Eigen's blocked kernels (entries are heavy).
template <class A, class B>
Mat<typename A::Scalar> multiply(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Scalar = typename A::Scalar;
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  Mat<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar acc(0);
      for (Eigen::Index l = 0; l < a.cols(); ++l) {
        if (detail::is_zero_entry(a(i, l)) || detail::is_zero_entry(b(l, j))) continue;
        acc += a(i, l) * b(l, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

/// Inverse of an upper-triangular matrix by back-substitution, given the
/// inverses of its diagonal entries.
template <class Derived, class DiagInverse>
Mat<typename Derived::Scalar> inverse_upper_triangular(const Eigen::MatrixBase<Derived>& u,
                                                       DiagInverse&& diag_inverse) {
  using Scalar = typename Derived::Scalar;
  if (u.rows() != u.cols()) throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
  const Eigen::Index n = u.rows();
  Mat<Scalar> inv = Mat<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    const Scalar dinv = diag_inverse(u(i, i));
    inv(i, i) = dinv;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Scalar acc(0);
      for (Eigen::Index l = i + 1; l <= j; ++l) {
        if (detail::is_zero_entry(u(i, l)) || detail::is_zero_entry(inv(l, j))) continue;
        acc += u(i, l) * inv(l, j);
      }
      inv(i, j) = -(dinv * acc);
    }
  }
  return inv;
}

/// Exact rank by Gaussian elimination over the rationals.
int rank(RationalMatrix m);

/// Evaluates a polynomial matrix entrywise.
RationalMatrix evaluate(const PolyMatrix& m, const std::function<Rational(VarId)>& value);

}  // namespace trilie
