#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trilie/exp_scalar.hpp"
#include "trilie/matrix.hpp"
#include "trilie/polynomial.hpp"

namespace trilie {

/// Fixed list of nonzero polynomials that may appear in denominators.
struct FactorBase {
  std::vector<Polynomial> factors;
};

/// num / prod_i factor_i^{p_i}: an ExpScalar over a product of known
/// factors. Denominators only grow by multiplication; after every operation
/// factors that divide the numerator exactly are cancelled, so equal values
/// usually share a representation but equality never relies on it.
class ExpFraction {
 public:
  ExpFraction() = default;
  explicit ExpFraction(long constant) : num_(constant) {}
  explicit ExpFraction(ExpScalar num) : num_(std::move(num)) {}
  /// num / factor_{index}^{power}.
  ExpFraction(ExpScalar num, std::shared_ptr<const FactorBase> base, std::size_t index, int power = 1);

  const ExpScalar& num() const { return num_; }
  const std::vector<int>& powers() const { return powers_; }
  bool is_zero() const { return num_.is_zero(); }
  Polynomial den() const;

  friend ExpFraction operator+(const ExpFraction& a, const ExpFraction& b);
  friend ExpFraction operator-(const ExpFraction& a, const ExpFraction& b);
  friend ExpFraction operator*(const ExpFraction& a, const ExpFraction& b);
  friend ExpFraction operator-(ExpFraction a);
  ExpFraction& operator+=(const ExpFraction& o) { return *this = *this + o; }
  ExpFraction& operator-=(const ExpFraction& o) { return *this = *this - o; }
  ExpFraction& operator*=(const ExpFraction& o) { return *this = *this * o; }
  friend bool operator==(const ExpFraction& a, const ExpFraction& b) { return (a - b).is_zero(); }

  /// d/dv; the denominator must not contain v.
  ExpFraction derivative(VarId v) const;

  std::string str() const;

 private:
  void reduce();

  ExpScalar num_;
  std::shared_ptr<const FactorBase> base_;
  std::vector<int> powers_;
};

}  // namespace trilie

namespace Eigen {
template <>
struct NumTraits<trilie::ExpFraction> : trilie_detail::ExactNumTraits<trilie::ExpFraction> {};
}  // namespace Eigen

namespace trilie {
using FractionMatrix = Mat<ExpFraction>;
}  // namespace trilie
