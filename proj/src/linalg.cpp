#include "anadof/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace anadof {

Eigen::Index numeric_rank(const Eigen::MatrixXcd& mat, double tol) {
  if (mat.rows() == 0 || mat.cols() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(mat);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * sv(0) * static_cast<double>(std::max(mat.rows(), mat.cols()));
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

double logdet2_eye_plus(const Eigen::MatrixXcd& psd) {
  if (psd.rows() != psd.cols()) throw std::invalid_argument("logdet2_eye_plus: matrix not square");
  if (psd.rows() == 0) return 0.0;
  Eigen::MatrixXcd m = psd;
  m.diagonal().array() += 1.0;
  const Eigen::LLT<Eigen::MatrixXcd> llt(m);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("logdet2_eye_plus: Cholesky factorization failed");
  double acc = 0.0;
  const auto& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) acc += std::log2(l(i, i).real());
  return 2.0 * acc;
}

double logdet2_eye_plus_scaled_gram(const Eigen::MatrixXcd& a, double p) {
  if (p < 0.0) throw std::invalid_argument("logdet2_eye_plus_scaled_gram: negative power");
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  // det(I + p A A^H) = prod(1 + p s_i^2) over the singular values of A.
  // Going through the singular values instead of a Cholesky factor of the
  // Gram matrix stays stable for rank-deficient A at arbitrarily large p,
  // where the exact trailing pivots of I + p A A^H are unit-sized but would
  // be computed as differences of huge intermediates.
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  constexpr double inv_ln2 = 1.4426950408889634;  // 1 / ln 2
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::log1p(p * sv(i) * sv(i)) * inv_ln2;
  return acc;
}

SlopeEstimate fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  SlopeEstimate est;
  est.slope = sxy / sxx;
  est.intercept = my - est.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (est.slope * x[i] + est.intercept);
    rss += r * r;
  }
  est.residual_rms = std::sqrt(rss / n);
  return est;
}

}  // namespace anadof
