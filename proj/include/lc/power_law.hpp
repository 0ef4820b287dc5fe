#pragma once

#include <vector>

namespace lc {

// One directly estimated error rate at training size m.
struct CurveSample {
  int m = 0;
  double tau_hat = 0.0;
  double weight = 1.0;
};

// Constrained inverse-power-law fit tau(m) = a + b * m^(-alpha) with
// a free, b >= 0, alpha >= 0.
struct PowerLawFit {
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  double sse = 0.0;

  double evaluate(double m) const;
};

// Weighted least squares over the constraint set: alpha scanned on the
// grid {0, 0.01, ..., 2.00} with (a, b) solved in closed form per alpha
// (b clipped at zero), then one golden-section refinement of alpha
// around the best grid point. Requires >= 3 distinct sizes.
PowerLawFit fit_power_law(const std::vector<CurveSample>& points);

}  // namespace lc
