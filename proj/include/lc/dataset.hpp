#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace lc {

// Feature matrix plus binary labels in {0,1}.
struct Dataset {
  Eigen::MatrixXd features;        // n x p
  std::vector<int> labels;         // length n, values 0/1
  std::vector<std::string> column_names;  // optional, size p when present

  int n() const { return static_cast<int>(features.rows()); }
  int p() const { return static_cast<int>(features.cols()); }

  // Throws DataError on empty data, label values outside {0,1}, or
  // non-finite feature entries.
  void validate() const;

  Dataset subset(const std::vector<int>& rows) const;
};

}  // namespace lc
