#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace lc {

enum class Provenance { ImpintRaw, ImpintSmoothed, Brie, Subex, Oracle };

const char* provenance_name(Provenance p);

struct CurvePoint {
  int m = 0;
  double value = 0.0;
  // Standard error across replicates when available (NaN otherwise).
  double std_error;
  // True when the raw value lies outside [0,1] and reporting clamps it.
  bool clamped = false;

  CurvePoint();
  CurvePoint(int m_, double value_);
  CurvePoint(int m_, double value_, double se);
};

// Ordered error-rate estimates tagged with their estimator. Values are
// stored raw; Brie points may lie outside [0,1] until clamped_value()
// is used for reporting.
struct LearningCurve {
  std::vector<CurvePoint> points;  // m strictly increasing
  Provenance provenance = Provenance::ImpintRaw;
  // (n-1, tau_cv) recentering pair, recorded by the Brie construction.
  std::optional<std::pair<int, double>> anchor;

  void sort_and_check();

  bool has_size(int m) const;

  // Value at m; linear interpolation between adjacent sizes when m is
  // not an estimated size (interpolated flag set on *interpolated).
  // Throws OutOfRange outside the estimated span.
  double value_at(int m, bool* interpolated = nullptr) const;

  static double clamp01(double v) {
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  }
};

struct DeltaEstimate {
  double value = 0.0;
  bool interpolated = false;
};

// delta(n, m) = curve(n) - curve(m), the expected error-rate
// improvement from growing the training set from n to m. Uses raw
// (unclamped) values; any recentering shift cancels.
DeltaEstimate delta_estimate(const LearningCurve& curve, int n, int m);

}  // namespace lc
