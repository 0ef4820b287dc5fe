#pragma once

#include <vector>

#include "lc/curve.hpp"

namespace lc {

// Weighted least-squares projection onto non-increasing sequences
// (pool-adjacent-violators). Exact solution.
std::vector<double> pava_nonincreasing(const std::vector<double>& values,
                                       const std::vector<double>& weights);

// Applies the antitonic smoother to a raw imputation curve.
LearningCurve monotone_smooth(const LearningCurve& curve,
                              const std::vector<double>& weights);

}  // namespace lc
