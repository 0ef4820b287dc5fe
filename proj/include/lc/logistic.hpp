#pragma once

#include <Eigen/Dense>
#include <optional>

#include "lc/dataset.hpp"
#include "lc/rng.hpp"

namespace lc {

struct LogisticFit {
  // Coefficients; when include_intercept, the intercept is beta(0) and
  // feature coefficients follow.
  Eigen::VectorXd beta;
  double kappa = 0.0;
  bool converged = false;
  double ridge_lambda_used = 0.0;
  int iterations = 0;
  bool include_intercept = false;

  double score(const Eigen::VectorXd& x) const;
};

// Newton/IRLS at a fixed ridge penalty. Stops when the penalized score
// has sup-norm < 1e-8 or after max_iter iterations; bails out early
// when ||beta|| exceeds 1e4 (treated as non-converged).
LogisticFit irls_fit(const Eigen::MatrixXd& x, const std::vector<int>& y,
                     bool include_intercept, double lambda, double kappa = 0.0,
                     int max_iter = 50);

// Maximum-likelihood fit with automatic ridge escalation through
// {1e-6, 1e-4, 1e-2} when the unpenalized fit fails to converge
// (separation). Constant labels: returns the trivial intercept-only
// rule when include_intercept, else throws OneClassOnly.
LogisticFit fit_logistic(const Dataset& d, bool include_intercept,
                         double kappa = 0.0);

double predict_prob(const LogisticFit& fit, const Eigen::VectorXd& x);

// 1 iff x'beta > kappa (strict inequality; boundary maps to class 0).
int classify(const LogisticFit& fit, const Eigen::VectorXd& x);

// A fitted rule or the constant-class fallback used when a training
// draw contains a single label value.
struct ClassRule {
  std::optional<LogisticFit> fit;
  int constant_class = -1;

  int predict(const Eigen::VectorXd& x) const {
    return fit ? classify(*fit, x) : constant_class;
  }
};

// fit_logistic with the constant-class fallback instead of OneClassOnly.
ClassRule fit_rule(const Dataset& d, bool include_intercept,
                   double kappa = 0.0);

// Leave-one-out cross-validation misclassification estimate; each fold
// uses the same ridge-escalation policy, degenerate folds fall back to
// the constant-class rule.
double loocv_error(const Dataset& d, bool include_intercept,
                   double kappa = 0.0);

// Mean over B subsample draws (size m_prime, without replacement) of
// the misclassification rate of the subset fit on the complement.
double subsample_error(const Dataset& d, int m_prime, int b_draws,
                       RngStream rng, bool include_intercept,
                       double kappa = 0.0);

}  // namespace lc
