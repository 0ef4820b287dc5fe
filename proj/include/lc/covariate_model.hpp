#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "lc/linalg.hpp"
#include "lc/rng.hpp"

namespace lc {

enum class CovariateKind { MvnAr1, MvnFull, GaussianMixture, GaussianCopula };

const char* covariate_kind_name(CovariateKind k);
CovariateKind covariate_kind_from_string(const std::string& name);

struct MvnAr1Model {
  Eigen::VectorXd mu;
  double sigma2 = 1.0;
  double rho = 0.0;
  Eigen::MatrixXd chol;  // factor of sigma2 * R(rho)
};

struct MvnFullModel {
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;
  Eigen::MatrixXd chol;
};

// Binary-pattern-stratified Gaussian mixture: one component per
// observed joint pattern of the binary columns, stratum means for the
// remaining columns, a common pooled covariance.
struct MixtureStratification {
  std::vector<int> binary_columns;
  std::vector<int> continuous_columns;
  std::vector<std::vector<int>> stratum_labels;  // binary patterns
  std::vector<Eigen::VectorXd> stratum_means;    // continuous part
  Eigen::MatrixXd pooled_cov;
  Eigen::MatrixXd pooled_chol;
  std::vector<double> weights;  // empirical pattern frequencies
};

// Gaussian copula with empirical marginals: latent correlation from
// normal scores, sampling maps latent coordinates back through each
// column's observed order statistics.
struct CopulaModel {
  std::vector<std::vector<double>> sorted_columns;
  Eigen::MatrixXd latent_correlation;
  Eigen::MatrixXd latent_chol;
};

struct CovariateModel {
  CovariateKind kind = CovariateKind::MvnFull;
  int p = 0;
  std::vector<std::string> warnings;
  std::variant<MvnAr1Model, MvnFullModel, MixtureStratification, CopulaModel>
      impl;

  // Draws one row; consumes a fixed number of stream values per row,
  // so prefixes of a longer draw are themselves valid draws.
  void sample_row(Eigen::Ref<Eigen::RowVectorXd> out, RngStream& rng) const;
};

// Fits the requested feature-distribution model. binary_columns is
// required for the Gaussian mixture (those columns must be 0/1-valued)
// and ignored otherwise. Near-singular covariances are stabilized by
// the ridge-jitter policy; strata with fewer than two observations are
// dropped with a warning.
CovariateModel fit_covariate_model(CovariateKind kind,
                                   const Eigen::MatrixXd& x,
                                   const std::vector<int>& binary_columns = {});

Eigen::MatrixXd sample_covariates(const CovariateModel& model, int m,
                                  RngStream rng);

}  // namespace lc
