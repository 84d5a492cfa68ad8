#pragma once

#include <Eigen/Dense>
#include <algorithm>

namespace testutil {

/// Bitwise matrix equality (same shape, identical entries).
inline bool exact_eq(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).squaredNorm() == 0.0;
}

/// Relative Frobenius-norm closeness with an absolute floor.
inline bool approx_eq(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol = 1e-12) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).norm() <= tol * std::max(1.0, b.norm());
}

}  // namespace testutil
