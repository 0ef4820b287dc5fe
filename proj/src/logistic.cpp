#include "lc/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lc/errors.hpp"
#include "lc/normal.hpp"

namespace lc {
namespace {

constexpr double kScoreTol = 1e-8;
constexpr double kBetaBlowup = 1e4;
// Finite stand-in for an infinite intercept in the constant-class rule.
constexpr double kSaturatedIntercept = 25.0;

Eigen::MatrixXd design(const Eigen::MatrixXd& x, bool include_intercept) {
  if (!include_intercept) return x;
  Eigen::MatrixXd z(x.rows(), x.cols() + 1);
  z.col(0).setOnes();
  z.rightCols(x.cols()) = x;
  return z;
}

bool labels_constant(const std::vector<int>& y, int* value) {
  const int first = y.front();
  for (int v : y) {
    if (v != first) return false;
  }
  *value = first;
  return true;
}

}  // namespace

double LogisticFit::score(const Eigen::VectorXd& x) const {
  const int p = static_cast<int>(beta.size()) - (include_intercept ? 1 : 0);
  if (x.size() != p) {
    throw DimensionMismatch("logistic: feature vector has length " +
                            std::to_string(x.size()) + ", expected " +
                            std::to_string(p));
  }
  if (include_intercept) return beta(0) + beta.tail(p).dot(x);
  return beta.dot(x);
}

LogisticFit irls_fit(const Eigen::MatrixXd& x, const std::vector<int>& y,
                     bool include_intercept, double lambda, double kappa,
                     int max_iter) {
  const Eigen::MatrixXd z = design(x, include_intercept);
  const int n = static_cast<int>(z.rows());
  const int p = static_cast<int>(z.cols());

  Eigen::VectorXd yv(n);
  for (int i = 0; i < n; ++i) yv(i) = y[i];

  LogisticFit fit;
  fit.kappa = kappa;
  fit.include_intercept = include_intercept;
  fit.ridge_lambda_used = lambda;
  fit.beta = Eigen::VectorXd::Zero(p);

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd pi(n), w(n);
  for (int iter = 1; iter <= max_iter; ++iter) {
    const Eigen::VectorXd eta = z * beta;
    for (int i = 0; i < n; ++i) {
      pi(i) = sigmoid(eta(i));
      w(i) = pi(i) * (1.0 - pi(i));
    }
    Eigen::VectorXd g = z.transpose() * (yv - pi) - lambda * beta;
    fit.iterations = iter;
    if (g.lpNorm<Eigen::Infinity>() < kScoreTol) {
      fit.converged = true;
      break;
    }
    Eigen::MatrixXd h = z.transpose() * w.asDiagonal() * z;
    h.diagonal().array() += lambda;
    const Eigen::VectorXd step = h.ldlt().solve(g);
    if (!step.allFinite()) break;
    beta += step;
    if (!beta.allFinite() || beta.norm() > kBetaBlowup) {
      fit.converged = false;
      break;
    }
    fit.beta = beta;
  }
  return fit;
}

LogisticFit fit_logistic(const Dataset& d, bool include_intercept,
                         double kappa) {
  if (d.n() < 2) throw DomainError("fit_logistic: need n >= 2");

  int constant;
  if (labels_constant(d.labels, &constant)) {
    if (!include_intercept) {
      throw OneClassOnly("fit_logistic: labels are constant");
    }
    LogisticFit fit;
    fit.kappa = kappa;
    fit.include_intercept = true;
    fit.beta = Eigen::VectorXd::Zero(d.p() + 1);
    fit.beta(0) = constant == 1 ? kSaturatedIntercept : -kSaturatedIntercept;
    fit.converged = true;
    return fit;
  }

  LogisticFit fit = irls_fit(d.features, d.labels, include_intercept, 0.0, kappa);
  if (fit.converged && fit.beta.norm() <= kBetaBlowup) return fit;

  for (double lambda : {1e-6, 1e-4, 1e-2}) {
    fit = irls_fit(d.features, d.labels, include_intercept, lambda, kappa);
    if (fit.converged) return fit;
  }
  return fit;  // converged=false, last ridge attempt
}

double predict_prob(const LogisticFit& fit, const Eigen::VectorXd& x) {
  return sigmoid(fit.score(x));
}

int classify(const LogisticFit& fit, const Eigen::VectorXd& x) {
  return fit.score(x) > fit.kappa ? 1 : 0;
}

ClassRule fit_rule(const Dataset& d, bool include_intercept, double kappa) {
  int constant;
  if (labels_constant(d.labels, &constant)) {
    return ClassRule{std::nullopt, constant};
  }
  return ClassRule{fit_logistic(d, include_intercept, kappa), -1};
}

double loocv_error(const Dataset& d, bool include_intercept, double kappa) {
  const int n = d.n();
  if (n < 3) throw DomainError("loocv_error: need n >= 3");
  std::vector<int> rows(n - 1);
  int errors = 0;
  for (int hold = 0; hold < n; ++hold) {
    int k = 0;
    for (int i = 0; i < n; ++i) {
      if (i != hold) rows[k++] = i;
    }
    const ClassRule rule = fit_rule(d.subset(rows), include_intercept, kappa);
    if (rule.predict(d.features.row(hold).transpose()) != d.labels[hold]) {
      ++errors;
    }
  }
  return static_cast<double>(errors) / n;
}

double subsample_error(const Dataset& d, int m_prime, int b_draws,
                       RngStream rng, bool include_intercept, double kappa) {
  const int n = d.n();
  if (m_prime < 2 || m_prime > n - 2) {
    throw DomainError("subsample_error: need 2 <= m_prime <= n-2");
  }
  if (b_draws < 1) throw DomainError("subsample_error: need B >= 1");

  std::vector<int> perm(n);
  double total = 0.0;
  for (int b = 0; b < b_draws; ++b) {
    std::iota(perm.begin(), perm.end(), 0);
    // Partial Fisher-Yates: first m_prime entries form the subsample.
    for (int i = 0; i < m_prime; ++i) {
      const int j = i + static_cast<int>(rng.next_below(n - i));
      std::swap(perm[i], perm[j]);
    }
    const std::vector<int> train(perm.begin(), perm.begin() + m_prime);
    const ClassRule rule = fit_rule(d.subset(train), include_intercept, kappa);
    int errors = 0;
    for (int i = m_prime; i < n; ++i) {
      const int row = perm[i];
      if (rule.predict(d.features.row(row).transpose()) != d.labels[row]) {
        ++errors;
      }
    }
    total += static_cast<double>(errors) / (n - m_prime);
  }
  return total / b_draws;
}

}  // namespace lc
