#include "lc/mvn.hpp"

#include <cmath>

#include "lc/errors.hpp"

namespace lc {

Eigen::MatrixXd sample_mvn_chol(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& chol_lower, int m,
                                RngStream& rng) {
  const int p = static_cast<int>(mean.size());
  Eigen::MatrixXd out(m, p);
  Eigen::VectorXd z(p);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) z(j) = rng.next_normal();
    out.row(i) = (mean + chol_lower * z).transpose();
  }
  return out;
}

Eigen::MatrixXd sample_mvn(const Eigen::VectorXd& mean, const SymMatrix& cov,
                           int m, RngStream rng) {
  if (m < 1) throw DomainError("sample_mvn: m must be >= 1");
  if (mean.size() != cov.dim()) {
    throw DimensionMismatch("sample_mvn: mean/cov dimension mismatch");
  }
  const Eigen::MatrixXd l = cholesky(cov);
  return sample_mvn_chol(mean, l, m, rng);
}

namespace {

struct Ar1Stats {
  int n = 0;
  int p = 0;
  double s_all = 0.0;    // sum of squared centered entries
  double s_inner = 0.0;  // same, excluding first and last column
  double s_lag = 0.0;    // sum of lag-1 products
};

Ar1Stats ar1_stats(const Eigen::MatrixXd& x) {
  Ar1Stats st;
  st.n = static_cast<int>(x.rows());
  st.p = static_cast<int>(x.cols());
  const Eigen::RowVectorXd mu = x.colwise().mean();
  const Eigen::MatrixXd d = x.rowwise() - mu;
  st.s_all = d.squaredNorm();
  st.s_inner = st.s_all - d.col(0).squaredNorm() - d.col(st.p - 1).squaredNorm();
  for (int j = 0; j + 1 < st.p; ++j) st.s_lag += d.col(j).dot(d.col(j + 1));
  return st;
}

// Average Mahalanobis quadratic form under the AR(1) correlation
// inverse (tridiagonal), divided by n*p: the profiled sigma^2.
double ar1_sigma2(const Ar1Stats& st, double rho) {
  const double q = (st.s_all + rho * rho * st.s_inner - 2.0 * rho * st.s_lag) /
                   (1.0 - rho * rho);
  return q / (static_cast<double>(st.n) * st.p);
}

double ar1_profile(const Ar1Stats& st, double rho) {
  const double s2 = ar1_sigma2(st, rho);
  return -0.5 * st.n *
         (st.p * std::log(s2) + (st.p - 1) * std::log(1.0 - rho * rho));
}

}  // namespace

double ar1_profile_loglik(const Eigen::MatrixXd& x, double rho) {
  return ar1_profile(ar1_stats(x), rho);
}

MvnAr1Fit fit_mvn_ar1(const Eigen::MatrixXd& x) {
  const int n = static_cast<int>(x.rows());
  const int p = static_cast<int>(x.cols());
  if (n < 3 || p < 2) throw DomainError("fit_mvn_ar1: need n >= 3 and p >= 2");
  const Ar1Stats st = ar1_stats(x);
  if (st.s_all / (static_cast<double>(n) * p) < 1e-12) {
    throw DegenerateData("fit_mvn_ar1: pooled variance below 1e-12");
  }

  // Golden-section maximization of the profile likelihood over
  // (-0.999, 0.999) to 1e-5.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = -0.999, b = 0.999;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = ar1_profile(st, c);
  double fd = ar1_profile(st, d);
  while (b - a > 1e-5) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = ar1_profile(st, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = ar1_profile(st, d);
    }
  }
  MvnAr1Fit fit;
  fit.rho = (a + b) / 2.0;
  fit.sigma2 = ar1_sigma2(st, fit.rho);
  fit.mu = x.colwise().mean().transpose();
  fit.at_boundary = std::fabs(fit.rho) > 0.9985;
  return fit;
}

MvnFullFit fit_mvn_full(const Eigen::MatrixXd& x) {
  const int n = static_cast<int>(x.rows());
  const int p = static_cast<int>(x.cols());
  if (n <= p) throw DomainError("fit_mvn_full: need n > p");
  MvnFullFit fit;
  fit.mu = x.colwise().mean().transpose();
  const Eigen::MatrixXd d = x.rowwise() - fit.mu.transpose();
  fit.sigma = (d.transpose() * d) / static_cast<double>(n);
  fit.sigma = ((fit.sigma + fit.sigma.transpose()) / 2.0).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fit.sigma,
                                                    Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (hi <= 0.0 || lo < 1e-10 * hi) {
    throw SingularCovariance("fit_mvn_full: covariance numerically singular");
  }
  return fit;
}

SymMatrix ar1_matrix(int p, double r) {
  if (p < 1) throw DomainError("ar1_matrix: p must be >= 1");
  if (!(std::fabs(r) < 1.0)) throw DomainError("ar1_matrix: |r| must be < 1");
  Eigen::MatrixXd m(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) m(i, j) = std::pow(r, std::abs(i - j));
  }
  return SymMatrix(std::move(m));
}

}  // namespace lc
