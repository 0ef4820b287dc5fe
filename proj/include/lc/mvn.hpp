#pragma once

#include <Eigen/Dense>

#include "lc/linalg.hpp"
#include "lc/rng.hpp"

namespace lc {

// i.i.d. rows from N(mean, cov). Rows consume the stream in order, so
// the first m rows of a longer draw equal a draw of size m from the
// same stream.
Eigen::MatrixXd sample_mvn(const Eigen::VectorXd& mean, const SymMatrix& cov,
                           int m, RngStream rng);

// Same but with a precomputed Cholesky factor of the covariance.
Eigen::MatrixXd sample_mvn_chol(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& chol_lower, int m,
                                RngStream& rng);

struct MvnAr1Fit {
  Eigen::VectorXd mu;
  double sigma2 = 0.0;
  double rho = 0.0;
  bool at_boundary = false;  // rho search hit +-0.999
};

// Gaussian ML under Sigma_ij = sigma^2 * rho^|i-j|: mu = column means,
// sigma^2 profiled in closed form, rho by golden-section search.
MvnAr1Fit fit_mvn_ar1(const Eigen::MatrixXd& x);

// Profile log-likelihood of the AR(1) model at a given rho (up to an
// additive constant). Exposed for the local-optimality property test.
double ar1_profile_loglik(const Eigen::MatrixXd& x, double rho);

struct MvnFullFit {
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;  // plug-in covariance, divisor n
};

// Plug-in Gaussian fit with unrestricted covariance. Requires n > p;
// throws SingularCovariance when the smallest eigenvalue of the
// covariance falls below 1e-10 times the largest.
MvnFullFit fit_mvn_full(const Eigen::MatrixXd& x);

// Correlation matrix with AR(1) profile r^|i-j|.
SymMatrix ar1_matrix(int p, double r);

}  // namespace lc
