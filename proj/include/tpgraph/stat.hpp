// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tpgraph/matrix.hpp"
#include "tpgraph/rng.hpp"

// Dense small-matrix statistics: covariance estimation over row subsets,
// partial correlations via SPD submatrix inversion, and seeded multivariate
// Gaussian sampling. All functions are pure; safe to call concurrently.

namespace tpgraph {

// Relative Cholesky pivot threshold treated as numerically singular.
inline constexpr double kSingularTol = 1e-12;

// Symmetric covariance over an ordered subset of variables. `variables[k]`
// is the node index that row/column k of `values` refers to.
struct CovarianceMatrix {
  Matrix values;
  std::vector<std::size_t> variables;
};

// Precision matrix with its inverse. Construct through the factories, which
// enforce symmetry, positive definiteness and the inverse pairing.
struct PrecisionModel {
  Matrix theta;
  Matrix sigma;
  bool is_m_matrix = false;

  std::size_t p() const { return theta.rows(); }

  static PrecisionModel from_theta(Matrix theta);
  static PrecisionModel from_sigma(Matrix sigma);
};

// Lower-triangular Cholesky factor of an SPD matrix. Throws
// SingularMatrixError (with the pivot index) when a pivot falls below
// rel_tol times the largest diagonal entry of the input.
Matrix cholesky(const Matrix& a, double rel_tol = kSingularTol);

// Inverse of an SPD matrix via its Cholesky factor; result exactly
// symmetric. Same singularity contract as cholesky().
Matrix spd_inverse(const Matrix& a, double rel_tol = kSingularTol);

// (1/|rows|) * sum of outer products over the selected rows and columns.
// When centered, the per-column mean over the selected rows is subtracted
// first (the divisor stays |rows|). Row order does not affect the result;
// permuting `columns` permutes the output consistently.
CovarianceMatrix empirical_covariance(const ObservationMatrix& data,
                                      std::span<const std::size_t> columns,
                                      std::span<const std::uint32_t> rows,
                                      bool centered);

// Convenience: all rows, all columns.
CovarianceMatrix empirical_covariance(const ObservationMatrix& data,
                                      bool centered);

// Partial correlation rho_{ij|S}, computed from the inverse of the covariance
// submatrix on S u {i,j}. Exactly symmetric in (i, j). Values within 1e-8 of
// [-1, 1] are clamped; anything further out is a numeric error. Throws
// SingularMatrixError when the submatrix is not numerically invertible.
double partial_correlation(const CovarianceMatrix& cov, std::size_t i,
                           std::size_t j, std::span<const std::size_t> s);

// n i.i.d. rows from N(0, model.sigma). Deterministic and bitwise
// reproducible for a given (model, n, seed), independent of platform.
ObservationMatrix sample_gaussian(const PrecisionModel& model, std::size_t n,
                                  std::uint64_t seed);

}  // namespace tpgraph
