// SPDX-License-Identifier: Apache-2.0

#include "tpgraph/learner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tpgraph/stat.hpp"

namespace tpgraph {

void validate_gamma(double gamma, bool unsafe_gamma) {
  if (unsafe_gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
      throw ValueError("gamma must lie in (0, 1)");
    return;
  }
  if (!(gamma > 0.75 && gamma < 1.0))
    throw ValueError("gamma must lie in (3/4, 1); pass the unsafe-gamma "
                     "override to widen the range to (0, 1)");
}

std::size_t batch_size(std::size_t n, double gamma) {
  return static_cast<std::size_t>(
      std::floor(std::pow(static_cast<double>(n), gamma)));
}

BatchDraw draw_batch(std::size_t n, double gamma, std::uint64_t seed,
                     std::uint64_t stream_id) {
  const std::size_t m = batch_size(n, gamma);
  if (m < 2) throw ValueError("draw_batch: batch size floor(n^gamma) < 2");
  rng::Stream stream(seed, rng::Domain::batch, stream_id);
  BatchDraw draw;
  draw.indices = rng::sample_without_replacement(stream, n, m);
  return draw;
}

double ci_test(const ObservationMatrix& data, const BatchDraw& rows,
               std::size_t i, std::size_t j, std::span<const std::size_t> cond,
               bool centered) {
  if (cond.size() + 2 > rows.m() - 1)
    throw NumericError("ci_test: batch of " + std::to_string(rows.m()) +
                       " rows is too small for " +
                       std::to_string(cond.size() + 2) + " variables");
  std::vector<std::size_t> columns;
  columns.reserve(cond.size() + 2);
  columns.push_back(i);
  columns.push_back(j);
  columns.insert(columns.end(), cond.begin(), cond.end());
  std::sort(columns.begin(), columns.end());
  const CovarianceMatrix cov =
      empirical_covariance(data, columns, rows.indices, centered);
  return partial_correlation(cov, i, j, cond);
}

namespace {

// Lexicographically next |S|-combination of positions into `pool`;
// returns false when exhausted.
bool next_combination(std::vector<std::size_t>& pos, std::size_t pool_size) {
  const std::size_t k = pos.size();
  if (k == 0) return false;
  std::size_t idx = k;
  while (idx > 0) {
    --idx;
    if (pos[idx] + (k - idx) <= pool_size) {
      ++pos[idx];
      if (pos[idx] + (k - idx) > pool_size) continue;
      for (std::size_t t = idx + 1; t < k; ++t) pos[t] = pos[t - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

LearnResult learn_structure(const ObservationMatrix& data,
                            const LearnerConfig& config) {
  validate_gamma(config.gamma, config.unsafe_gamma);
  const std::size_t n = data.n_rows();
  const std::size_t p = data.n_cols();
  if (n < 2) throw ValueError("learn_structure: need at least 2 samples");

  const std::size_t m = batch_size(n, config.gamma);

  LearnResult result;
  result.graph = Graph::complete(p);
  Graph& g = result.graph;
  LearnRecord& record = result.record;

  std::size_t level = 0;
  for (;; ++level) {
    if (config.max_level && level > *config.max_level) {
      record.final_level = level - 1;
      return result;
    }
    record.edges_deleted_per_level.push_back(0);

    bool any_pair_qualified = false;
    bool level_size_checked = false;

    // Ordered pairs in lexicographic order; adjacency is re-read at visit
    // time, so deletions earlier in this sweep shrink later candidate sets.
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        if (i == j || !g.has_edge(i, j)) continue;

        // Sorted snapshot of adj_i \ {j}; only edge i-j can change while
        // this pair is under test, so the snapshot stays exact.
        std::vector<std::size_t> pool(g.neighbors(i).begin(),
                                      g.neighbors(i).end());
        pool.erase(std::remove(pool.begin(), pool.end(), j), pool.end());
        if (pool.size() < level) continue;
        any_pair_qualified = true;

        if (!level_size_checked) {
          // Tests at this level condition on ell+1 nodes: ell+3 variables
          // need at least ell+4 batch rows.
          if (m < level + 4)
            throw NumericError(
                "batch size M=" + std::to_string(m) +
                " is too small for level " + std::to_string(level) +
                " (needs at least " + std::to_string(level + 4) +
                "); lower the level cap or raise gamma/N");
          level_size_checked = true;
        }

        bool deleted = false;
        std::vector<std::size_t> pos(level);
        for (std::size_t t = 0; t < level; ++t) pos[t] = t;
        std::vector<std::size_t> cond(level + 1);
        do {
          // S = pool[pos], then witnesses k ascending.
          bool in_s[2] = {false, false};
          for (std::size_t t = 0; t < level; ++t) cond[t] = pool[pos[t]];
          (void)in_s;
          for (std::size_t k = 0; k < p; ++k) {
            if (k == i || k == j) continue;
            if (std::find(cond.begin(), cond.end() - 1, k) !=
                cond.end() - 1)
              continue;
            cond[level] = k;

            const BatchDraw batch =
                draw_batch(n, config.gamma, config.seed, record.tests_run);
            ++record.tests_run;
            double rho;
            try {
              rho = ci_test(data, batch, i, j, cond, config.centered);
            } catch (const SingularMatrixError&) {
              if (config.singular_policy == SingularPolicy::error) throw;
              ++record.singular_skips;
              continue;
            }
            if (rho < 0.0) {
              g.remove_edge(i, j);
              ++record.edges_deleted_per_level[level];
              deleted = true;
              break;
            }
          }
        } while (!deleted && next_combination(pos, pool.size()));
      }
    }

    // Stop once no adjacent ordered pair can supply a conditioning set of
    // the next size.
    bool all_below = true;
    for (std::size_t i = 0; i < p && all_below; ++i) {
      for (std::size_t j : g.neighbors(i)) {
        (void)j;
        if (g.degree(i) - 1 >= level + 1) {
          all_below = false;
          break;
        }
      }
    }
    if (all_below && !any_pair_qualified) {
      record.final_level = level;
      return result;
    }
    if (all_below) {
      record.final_level = level;
      return result;
    }
  }
}

}  // namespace tpgraph
