#include "lc/isotonic.hpp"

#include "lc/errors.hpp"

namespace lc {

std::vector<double> pava_nonincreasing(const std::vector<double>& values,
                                       const std::vector<double>& weights) {
  const size_t n = values.size();
  if (n == 0) throw DomainError("pava: needs at least one point");
  if (weights.size() != n) throw DimensionMismatch("pava: weight count mismatch");
  for (double w : weights) {
    if (!(w > 0.0)) throw DomainError("pava: weights must be positive");
  }

  struct Block {
    double mean;
    double weight;
    size_t count;
  };
  std::vector<Block> blocks;
  blocks.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    blocks.push_back({values[i], weights[i], 1});
    // A later block with a larger mean violates non-increasingness;
    // merge backwards until the stack is monotone again.
    while (blocks.size() > 1 &&
           blocks[blocks.size() - 2].mean < blocks.back().mean) {
      const Block top = blocks.back();
      blocks.pop_back();
      Block& prev = blocks.back();
      const double w = prev.weight + top.weight;
      prev.mean = (prev.mean * prev.weight + top.mean * top.weight) / w;
      prev.weight = w;
      prev.count += top.count;
    }
  }

  std::vector<double> out;
  out.reserve(n);
  for (const Block& b : blocks) {
    out.insert(out.end(), b.count, b.mean);
  }
  return out;
}

LearningCurve monotone_smooth(const LearningCurve& curve,
                              const std::vector<double>& weights) {
  std::vector<double> values;
  values.reserve(curve.points.size());
  for (const CurvePoint& pt : curve.points) values.push_back(pt.value);
  const std::vector<double> fitted = pava_nonincreasing(values, weights);

  LearningCurve out = curve;
  out.provenance = Provenance::ImpintSmoothed;
  for (size_t i = 0; i < fitted.size(); ++i) out.points[i].value = fitted[i];
  return out;
}

}  // namespace lc
