// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tpgraph/graph.hpp"
#include "tpgraph/matrix.hpp"
#include "tpgraph/rng.hpp"

// Structure learning by sign-testing partial correlations on random batches.
// Starting from the complete graph, level ell = 0, 1, 2, ... sweeps visit
// every ordered adjacent pair (i, j) with |adj_i \ {j}| >= ell; for each
// subset S of adj_i \ {j} with |S| = ell and each witness k outside
// S u {i, j}, a fresh batch of M = floor(N^gamma) rows is drawn and the edge
// is deleted as soon as one empirical partial correlation is strictly
// negative. Under total positivity no tuning threshold is needed: the sign
// carries the test.

namespace tpgraph {

enum class SingularPolicy {
  skip,   // singular batch covariance counts as a non-deletion, with a counter
  error,  // propagate instead
};

struct LearnerConfig {
  double gamma = 7.0 / 9.0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_level;
  bool centered = false;
  SingularPolicy singular_policy = SingularPolicy::skip;
  // Widens the accepted gamma range from (3/4, 1) to (0, 1).
  bool unsafe_gamma = false;
};

// One batch of distinct row indices, sorted ascending.
struct BatchDraw {
  std::vector<std::uint32_t> indices;
  std::size_t m() const { return indices.size(); }
};

struct LearnRecord {
  std::size_t tests_run = 0;
  std::vector<std::size_t> edges_deleted_per_level;
  std::size_t singular_skips = 0;
  std::size_t final_level = 0;
};

struct LearnResult {
  Graph graph;
  LearnRecord record;
  LearnResult() : graph(2) {}
};

// Batch `stream_id` for sample count n: floor(n^gamma) distinct uniform row
// indices. Fully determined by (seed, stream_id).
BatchDraw draw_batch(std::size_t n, double gamma, std::uint64_t seed,
                     std::uint64_t stream_id);

// Batch size M = floor(n^gamma).
std::size_t batch_size(std::size_t n, double gamma);

// Empirical partial correlation of columns i and j given `cond`, computed on
// the batch rows. Throws SingularMatrixError when the batch covariance
// submatrix is singular; the caller applies its policy.
double ci_test(const ObservationMatrix& data, const BatchDraw& rows,
               std::size_t i, std::size_t j, std::span<const std::size_t> cond,
               bool centered);

// Full run of the level-wise sweep. Deterministic given (data, config).
LearnResult learn_structure(const ObservationMatrix& data,
                            const LearnerConfig& config);

// Validates the gamma range; throws ValueError outside (3/4, 1) (or (0, 1)
// with unsafe_gamma).
void validate_gamma(double gamma, bool unsafe_gamma);

}  // namespace tpgraph
