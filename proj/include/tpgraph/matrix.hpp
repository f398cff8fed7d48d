// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tpgraph/errors.hpp"

namespace tpgraph {

// Dense row-major matrix of doubles. Only small (at most p x p) matrices
// pass through here; no sparse storage anywhere in the library.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }

  bool operator==(const Matrix& other) const = default;

  // Max |a_ij - b_ij|; shapes must match.
  double max_abs_diff(const Matrix& other) const {
    double m = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
      m = std::max(m, std::abs(data_[k] - other.data_[k]));
    return m;
  }

  bool is_symmetric(double rel_tol = 1e-12) const {
    if (rows_ != cols_) return false;
    double scale = 0.0;
    for (double v : data_) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (std::abs((*this)(i, j) - (*this)(j, i)) > rel_tol * scale)
          return false;
    return true;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// N x p sample matrix, one observation per row. Stored column-major so the
// covariance kernels stream each variable contiguously.
class ObservationMatrix {
public:
  // `rows` is row-major (as read from CSV); validated and transposed here.
  // Throws ValueError on non-finite entries, N < 1, p < 2, or bad names.
  ObservationMatrix(std::size_t n_rows, std::size_t n_cols,
                    std::vector<double> row_major,
                    std::optional<std::vector<std::string>> column_names = {});

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }

  std::span<const double> col(std::size_t c) const {
    return {cols_.data() + c * n_rows_, n_rows_};
  }

  double at(std::size_t row, std::size_t c) const {
    return cols_[c * n_rows_ + row];
  }

  const std::optional<std::vector<std::string>>& column_names() const {
    return column_names_;
  }

private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<double> cols_;  // column-major
  std::optional<std::vector<std::string>> column_names_;
};

}  // namespace tpgraph
