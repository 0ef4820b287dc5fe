#include "lc/dataset.hpp"

#include <cmath>

#include "lc/errors.hpp"

namespace lc {

void Dataset::validate() const {
  if (n() < 1) throw DataError("dataset: needs at least one row");
  if (static_cast<int>(labels.size()) != n()) {
    throw DataError("dataset: label count does not match row count");
  }
  for (int i = 0; i < n(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw DataError("dataset: label at row " + std::to_string(i) +
                      " is not 0 or 1");
    }
  }
  if (!features.allFinite()) {
    throw DataError("dataset: non-finite feature entry");
  }
  if (!column_names.empty() && static_cast<int>(column_names.size()) != p()) {
    throw DataError("dataset: column name count does not match feature count");
  }
}

Dataset Dataset::subset(const std::vector<int>& rows) const {
  Dataset out;
  out.features.resize(static_cast<int>(rows.size()), p());
  out.labels.reserve(rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    out.features.row(static_cast<int>(k)) = features.row(rows[k]);
    out.labels.push_back(labels[rows[k]]);
  }
  out.column_names = column_names;
  return out;
}

}  // namespace lc
