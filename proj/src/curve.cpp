#include "lc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lc/errors.hpp"

namespace lc {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

CurvePoint::CurvePoint() : std_error(kNan) {}
CurvePoint::CurvePoint(int m_, double value_)
    : m(m_), value(value_), std_error(kNan) {}
CurvePoint::CurvePoint(int m_, double value_, double se)
    : m(m_), value(value_), std_error(se) {}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::ImpintRaw: return "impint-raw";
    case Provenance::ImpintSmoothed: return "impint-smoothed";
    case Provenance::Brie: return "brie";
    case Provenance::Subex: return "subex";
    case Provenance::Oracle: return "oracle";
  }
  return "?";
}

void LearningCurve::sort_and_check() {
  std::sort(points.begin(), points.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.m < b.m; });
  for (size_t i = 1; i < points.size(); ++i) {
    if (points[i].m == points[i - 1].m) {
      throw DomainError("LearningCurve: duplicate size " +
                        std::to_string(points[i].m));
    }
  }
}

bool LearningCurve::has_size(int m) const {
  return std::any_of(points.begin(), points.end(),
                     [m](const CurvePoint& pt) { return pt.m == m; });
}

double LearningCurve::value_at(int m, bool* interpolated) const {
  if (interpolated) *interpolated = false;
  if (points.empty()) throw OutOfRange("LearningCurve: empty curve");
  if (m < points.front().m || m > points.back().m) {
    throw OutOfRange("LearningCurve: size " + std::to_string(m) +
                     " outside estimated span [" +
                     std::to_string(points.front().m) + ", " +
                     std::to_string(points.back().m) + "]");
  }
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].m == m) return points[i].value;
    if (points[i].m > m) {
      const CurvePoint& lo = points[i - 1];
      const CurvePoint& hi = points[i];
      if (interpolated) *interpolated = true;
      const double t = static_cast<double>(m - lo.m) / (hi.m - lo.m);
      return lo.value + t * (hi.value - lo.value);
    }
  }
  throw OutOfRange("LearningCurve: unreachable");
}

DeltaEstimate delta_estimate(const LearningCurve& curve, int n, int m) {
  bool in = false, im = false;
  const double vn = curve.value_at(n, &in);
  const double vm = curve.value_at(m, &im);
  return DeltaEstimate{vn - vm, in || im};
}

}  // namespace lc
