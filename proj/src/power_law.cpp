#include "lc/power_law.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lc/errors.hpp"

namespace lc {

double PowerLawFit::evaluate(double m) const {
  return a + b * std::pow(m, -alpha);
}

namespace {

struct InnerFit {
  double a;
  double b;
  double sse;
};

// Weighted least squares of tau on m^(-alpha) with the slope clipped
// at zero (a refits to the weighted mean when the clip engages).
InnerFit solve_for_alpha(const std::vector<CurveSample>& pts, double alpha) {
  double w_sum = 0.0, u_mean = 0.0, t_mean = 0.0;
  std::vector<double> u(pts.size());
  for (size_t k = 0; k < pts.size(); ++k) {
    u[k] = std::exp(-alpha * std::log(static_cast<double>(pts[k].m)));
    w_sum += pts[k].weight;
    u_mean += pts[k].weight * u[k];
    t_mean += pts[k].weight * pts[k].tau_hat;
  }
  u_mean /= w_sum;
  t_mean /= w_sum;

  double s_uu = 0.0, s_ut = 0.0;
  for (size_t k = 0; k < pts.size(); ++k) {
    const double du = u[k] - u_mean;
    s_uu += pts[k].weight * du * du;
    s_ut += pts[k].weight * du * (pts[k].tau_hat - t_mean);
  }

  InnerFit f;
  if (s_uu < 1e-14 || s_ut <= 0.0) {
    f.b = 0.0;
    f.a = t_mean;
  } else {
    f.b = s_ut / s_uu;
    f.a = t_mean - f.b * u_mean;
  }
  f.sse = 0.0;
  for (size_t k = 0; k < pts.size(); ++k) {
    const double r = pts[k].tau_hat - f.a - f.b * u[k];
    f.sse += pts[k].weight * r * r;
  }
  return f;
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<CurveSample>& points) {
  std::set<int> sizes;
  for (const CurveSample& pt : points) {
    if (pt.m < 1) throw DomainError("fit_power_law: sizes must be >= 1");
    if (!(pt.weight > 0.0)) {
      throw DomainError("fit_power_law: weights must be positive");
    }
    sizes.insert(pt.m);
  }
  if (sizes.size() < 3) {
    throw InsufficientPoints("fit_power_law: need >= 3 distinct sizes");
  }

  double best_alpha = 0.0;
  InnerFit best = solve_for_alpha(points, 0.0);
  for (int g = 1; g <= 200; ++g) {
    const double alpha = 0.01 * g;
    const InnerFit f = solve_for_alpha(points, alpha);
    if (f.sse < best.sse) {
      best = f;
      best_alpha = alpha;
    }
  }

  // Golden-section refinement of alpha around the winning grid point.
  double lo = std::max(0.0, best_alpha - 0.01);
  double hi = std::min(2.0, best_alpha + 0.01);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  InnerFit fc = solve_for_alpha(points, c);
  InnerFit fd = solve_for_alpha(points, d);
  while (hi - lo > 1e-5) {
    if (fc.sse < fd.sse) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = solve_for_alpha(points, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = solve_for_alpha(points, d);
    }
  }
  const double refined_alpha = (lo + hi) / 2.0;
  const InnerFit refined = solve_for_alpha(points, refined_alpha);
  if (refined.sse < best.sse) {
    best = refined;
    best_alpha = refined_alpha;
  }

  PowerLawFit fit;
  fit.a = best.a;
  fit.b = best.b;
  fit.alpha = best.b == 0.0 ? 0.0 : best_alpha;  // canonical flat form
  fit.sse = best.sse;
  return fit;
}

}  // namespace lc
