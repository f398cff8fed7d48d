// SPDX-License-Identifier: Apache-2.0

#include "tpgraph/stat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tpgraph/kernels.hpp"

namespace tpgraph {

namespace {

double max_diagonal(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) m = std::max(m, a(i, i));
  return m;
}

}  // namespace

Matrix cholesky(const Matrix& a, double rel_tol) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw ValueError("cholesky: matrix must be square");
  if (!a.is_symmetric()) throw ValueError("cholesky: matrix must be symmetric");

  const double pivot_floor = rel_tol * max_diagonal(a);
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0) || d < pivot_floor)
      throw SingularMatrixError(
          "cholesky: pivot " + std::to_string(j) + " below tolerance", j);
    const double root = std::sqrt(d);
    l(j, j) = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = a(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / root;
    }
  }
  return l;
}

Matrix spd_inverse(const Matrix& a, double rel_tol) {
  const std::size_t n = a.rows();
  const Matrix l = cholesky(a, rel_tol);

  // W = L^{-1} by forward substitution, then A^{-1} = W^T W.
  Matrix w(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    w(j, j) = 1.0 / l(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = 0.0;
      for (std::size_t k = j; k < i; ++k) v -= l(i, k) * w(k, j);
      w(i, j) = v / l(i, i);
    }
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double v = 0.0;
      for (std::size_t k = j; k < n; ++k) v += w(k, i) * w(k, j);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

CovarianceMatrix empirical_covariance(const ObservationMatrix& data,
                                      std::span<const std::size_t> columns,
                                      std::span<const std::uint32_t> rows,
                                      bool centered) {
  const std::size_t q = columns.size();
  const std::size_t m = rows.size();
  if (q == 0) throw ValueError("empirical_covariance: no columns selected");
  if (m == 0) throw ValueError("empirical_covariance: empty row set");
  if (centered && m < 2)
    throw ValueError("empirical_covariance: centering needs at least 2 rows");
  for (std::size_t c : columns) {
    if (c >= data.n_cols())
      throw ValueError("empirical_covariance: column index out of range");
  }
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      if (columns[a] == columns[b])
        throw ValueError("empirical_covariance: duplicate column index");
  for (std::uint32_t r : rows) {
    if (r >= data.n_rows())
      throw ValueError("empirical_covariance: row index out of range");
  }

  // Rows are gathered in sorted order so the accumulation order (and hence
  // the result, bit for bit) does not depend on how the caller ordered them.
  std::vector<std::uint32_t> sorted_rows(rows.begin(), rows.end());
  std::sort(sorted_rows.begin(), sorted_rows.end());

  std::vector<double> scratch(q * m);
  for (std::size_t a = 0; a < q; ++a) {
    kernels::gather(data.col(columns[a]).data(), sorted_rows.data(), m,
                    scratch.data() + a * m);
  }
  if (centered) {
    for (std::size_t a = 0; a < q; ++a) {
      double* buf = scratch.data() + a * m;
      const double mean = kernels::reduce_sum(buf, m) / static_cast<double>(m);
      kernels::subtract_scalar(buf, m, mean);
    }
  }

  CovarianceMatrix cov;
  cov.values = Matrix(q, q);
  cov.variables.assign(columns.begin(), columns.end());
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a; b < q; ++b) {
      const double v =
          kernels::dot(scratch.data() + a * m, scratch.data() + b * m, m) *
          inv_m;
      cov.values(a, b) = v;
      cov.values(b, a) = v;
    }
  }
  return cov;
}

CovarianceMatrix empirical_covariance(const ObservationMatrix& data,
                                      bool centered) {
  std::vector<std::size_t> columns(data.n_cols());
  for (std::size_t c = 0; c < columns.size(); ++c) columns[c] = c;
  std::vector<std::uint32_t> rows(data.n_rows());
  for (std::size_t r = 0; r < rows.size(); ++r)
    rows[r] = static_cast<std::uint32_t>(r);
  return empirical_covariance(data, columns, rows, centered);
}

namespace {

double clamp_correlation(double rho) {
  if (std::isnan(rho))
    throw NumericError("partial correlation evaluated to NaN");
  if (rho > 1.0) {
    if (rho > 1.0 + 1e-8)
      throw NumericError("partial correlation " + std::to_string(rho) +
                         " exceeds 1 beyond rounding tolerance");
    return 1.0;
  }
  if (rho < -1.0) {
    if (rho < -1.0 - 1e-8)
      throw NumericError("partial correlation " + std::to_string(rho) +
                         " below -1 beyond rounding tolerance");
    return -1.0;
  }
  return rho;
}

}  // namespace

double partial_correlation(const CovarianceMatrix& cov, std::size_t i,
                           std::size_t j, std::span<const std::size_t> s) {
  if (i == j) throw ValueError("partial_correlation: i and j must differ");
  for (std::size_t v : s) {
    if (v == i || v == j)
      throw ValueError("partial_correlation: conditioning set contains i or j");
  }

  auto local_index = [&](std::size_t node) -> std::size_t {
    for (std::size_t k = 0; k < cov.variables.size(); ++k)
      if (cov.variables[k] == node) return k;
    throw ValueError("partial_correlation: node " + std::to_string(node) +
                     " not covered by covariance");
  };

  std::vector<std::size_t> m_local;
  m_local.reserve(s.size() + 2);
  m_local.push_back(local_index(i));
  m_local.push_back(local_index(j));
  for (std::size_t v : s) m_local.push_back(local_index(v));
  std::sort(m_local.begin(), m_local.end());
  for (std::size_t k = 1; k < m_local.size(); ++k)
    if (m_local[k] == m_local[k - 1])
      throw ValueError("partial_correlation: duplicate conditioning node");

  const std::size_t li = local_index(i);
  const std::size_t lj = local_index(j);

  if (m_local.size() == 2) {
    // rho_{ij|empty} is the plain correlation; no inversion, so perfectly
    // collinear pairs still evaluate (to +-1).
    const double vi = cov.values(li, li);
    const double vj = cov.values(lj, lj);
    if (!(vi > 0.0))
      throw SingularMatrixError("partial_correlation: variable i has no variance", 0);
    if (!(vj > 0.0))
      throw SingularMatrixError("partial_correlation: variable j has no variance", 1);
    return clamp_correlation(cov.values(li, lj) / std::sqrt(vi * vj));
  }

  Matrix sub(m_local.size(), m_local.size());
  for (std::size_t a = 0; a < m_local.size(); ++a)
    for (std::size_t b = 0; b < m_local.size(); ++b)
      sub(a, b) = cov.values(m_local[a], m_local[b]);

  const Matrix k = spd_inverse(sub);

  const std::size_t a =
      static_cast<std::size_t>(std::lower_bound(m_local.begin(), m_local.end(), li) -
                               m_local.begin());
  const std::size_t b =
      static_cast<std::size_t>(std::lower_bound(m_local.begin(), m_local.end(), lj) -
                               m_local.begin());
  return clamp_correlation(-k(a, b) / std::sqrt(k(a, a) * k(b, b)));
}

PrecisionModel PrecisionModel::from_theta(Matrix theta) {
  if (theta.rows() != theta.cols() || theta.rows() < 2)
    throw ValueError("precision matrix must be square with p >= 2");
  if (!theta.is_symmetric())
    throw ValueError("precision matrix must be symmetric");

  PrecisionModel model;
  model.sigma = spd_inverse(theta);
  model.theta = std::move(theta);

  const std::size_t p = model.theta.rows();
  bool m_matrix = true;
  for (std::size_t i = 0; i < p && m_matrix; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (i != j && model.theta(i, j) > 1e-12) {
        m_matrix = false;
        break;
      }
  model.is_m_matrix = m_matrix;
  return model;
}

PrecisionModel PrecisionModel::from_sigma(Matrix sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() < 2)
    throw ValueError("covariance matrix must be square with p >= 2");
  if (!sigma.is_symmetric())
    throw ValueError("covariance matrix must be symmetric");

  PrecisionModel model;
  model.theta = spd_inverse(sigma);
  model.sigma = std::move(sigma);

  const std::size_t p = model.theta.rows();
  bool m_matrix = true;
  for (std::size_t i = 0; i < p && m_matrix; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (i != j && model.theta(i, j) > 1e-12) {
        m_matrix = false;
        break;
      }
  model.is_m_matrix = m_matrix;
  return model;
}

ObservationMatrix sample_gaussian(const PrecisionModel& model, std::size_t n,
                                  std::uint64_t seed) {
  if (n < 1) throw ValueError("sample_gaussian: n must be at least 1");
  const std::size_t p = model.p();
  const Matrix l = cholesky(model.sigma);

  rng::Stream stream(seed, rng::Domain::gaussian, 0);
  std::vector<double> row_major(n * p);
  std::vector<double> z(p);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < p; ++k) z[k] = stream.next_normal();
    // x = L z, accumulated in a fixed scalar order; with contraction
    // disabled this makes the samples bitwise stable across platforms.
    for (std::size_t i = 0; i < p; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k <= i; ++k) acc += l(i, k) * z[k];
      row_major[r * p + i] = acc;
    }
  }
  return ObservationMatrix(n, p, std::move(row_major));
}

}  // namespace tpgraph
