#pragma once

namespace lc {

// Standard normal CDF, accurate to machine precision via erfc.
double std_normal_cdf(double x);

// Standard normal quantile (inverse CDF), |error| < 1e-9 over (0,1).
// Throws DomainError for q outside the open interval (0,1).
double std_normal_quantile(double q);

// Logistic link 1/(1+exp(-t)), overflow-safe.
double sigmoid(double t);

}  // namespace lc
