#include "lc/linalg.hpp"

#include <cmath>

#include "lc/errors.hpp"

namespace lc {

SymMatrix::SymMatrix(Eigen::MatrixXd m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
    throw DimensionMismatch("SymMatrix: matrix must be square with dim >= 1");
  }
  const double scale = mat_.cwiseAbs().maxCoeff();
  const double asym = (mat_ - mat_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(scale, 1e-300)) {
    throw DomainError("SymMatrix: input is not symmetric");
  }
  mat_ = ((mat_ + mat_.transpose()) / 2.0).eval();
}

SymMatrix SymMatrix::identity(int dim) {
  return SymMatrix(Eigen::MatrixXd::Identity(dim, dim));
}

Eigen::MatrixXd cholesky(const SymMatrix& s) {
  const int p = s.dim();
  const Eigen::MatrixXd& a = s.mat();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= 1e-12) {
      throw NotPositiveDefinite("cholesky: pivot <= 1e-12 at column " +
                                std::to_string(j));
    }
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < p; ++i) {
      double v = a(i, j);
      for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return l;
}

SymMatrix jitter_to_spd(const SymMatrix& s) {
  const int p = s.dim();
  const double tr = s.mat().trace();
  double eps = 0.0;  // first attempt: the matrix as given
  const Eigen::MatrixXd& m = s.mat();
  for (int attempt = 0; attempt < 14; ++attempt) {
    try {
      SymMatrix candidate(m + eps * Eigen::MatrixXd::Identity(p, p));
      cholesky(candidate);
      return candidate;
    } catch (const NotPositiveDefinite&) {
      if (eps == 0.0) {
        eps = (tr > 0.0) ? 1e-8 * tr / p : 1e-8;
      } else {
        eps *= 10.0;
      }
    }
  }
  throw NotPositiveDefinite("jitter_to_spd: could not stabilize matrix");
}

}  // namespace lc
