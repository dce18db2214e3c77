#include "trilie/matrix.hpp"

#include <utility>

namespace trilie {

int rank(RationalMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  int r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Rational inv = m(r, c).inverse();
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational factor = m(i, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    ++r;
  }
  return r;
}

RationalMatrix evaluate(const PolyMatrix& m, const std::function<Rational(VarId)>& value) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(value);
  }
  return out;
}

}  // namespace trilie
