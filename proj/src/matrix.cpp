// SPDX-License-Identifier: Apache-2.0

#include "tpgraph/matrix.hpp"

#include <cmath>
#include <unordered_set>

namespace tpgraph {

ObservationMatrix::ObservationMatrix(
    std::size_t n_rows, std::size_t n_cols, std::vector<double> row_major,
    std::optional<std::vector<std::string>> column_names)
    : n_rows_(n_rows), n_cols_(n_cols), column_names_(std::move(column_names)) {
  if (n_rows < 1) throw ValueError("observation matrix needs at least 1 row");
  if (n_cols < 2)
    throw ValueError("observation matrix needs at least 2 columns");
  if (row_major.size() != n_rows * n_cols)
    throw ValueError("observation matrix: data size does not match shape");
  for (double v : row_major) {
    if (!std::isfinite(v))
      throw ValueError("observation matrix: non-finite entry");
  }
  if (column_names_) {
    if (column_names_->size() != n_cols)
      throw ValueError("observation matrix: expected one name per column");
    std::unordered_set<std::string> seen;
    for (const auto& name : *column_names_) {
      if (!seen.insert(name).second)
        throw ValueError("observation matrix: duplicate column name '" + name +
                         "'");
    }
  }
  cols_.resize(n_rows * n_cols);
  for (std::size_t r = 0; r < n_rows; ++r)
    for (std::size_t c = 0; c < n_cols; ++c)
      cols_[c * n_rows + r] = row_major[r * n_cols + c];
}

}  // namespace tpgraph
