#pragma once

#include <Eigen/Dense>

namespace lc {

// Symmetric real matrix. The constructor validates squareness and
// symmetry (1e-12 relative tolerance) and stores an exactly
// symmetrized copy.
class SymMatrix {
 public:
  explicit SymMatrix(Eigen::MatrixXd m);

  static SymMatrix identity(int dim);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXd& mat() const { return mat_; }
  double operator()(int i, int j) const { return mat_(i, j); }

 private:
  Eigen::MatrixXd mat_;
};

// Lower-triangular Cholesky factor L with L*L^T = S. Throws
// NotPositiveDefinite when a pivot is <= 1e-12.
Eigen::MatrixXd cholesky(const SymMatrix& s);

// Adds ridge to the diagonal until cholesky succeeds, starting at
// 1e-8 * mean diagonal (1e-8 absolute for a zero matrix), escalating
// tenfold. Returns the jittered SPD matrix.
SymMatrix jitter_to_spd(const SymMatrix& s);

}  // namespace lc
