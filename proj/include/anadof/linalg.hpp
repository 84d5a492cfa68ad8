#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace anadof {

/**
 * Numeric rank: number of singular values above tol * sigma_max * max(rows,
 * cols). The zero matrix has rank 0; tol defaults to 1e-10.
 */
Eigen::Index numeric_rank(const Eigen::MatrixXcd& mat, double tol = 1e-10);

/// log2 det(I + p * A * A^H) through a Cholesky factorization; p >= 0.
double logdet2_eye_plus_scaled_gram(const Eigen::MatrixXcd& a, double p);

/// log2 det(I + M) for Hermitian positive semidefinite M.
double logdet2_eye_plus(const Eigen::MatrixXcd& psd);

/// Ordinary least squares fit y = slope * x + intercept.
struct SlopeEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
};

SlopeEstimate fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// dB -> linear power.
inline double db_to_power(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace anadof
