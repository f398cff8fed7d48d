// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <utility>
#include <vector>

#include "tpgraph/matrix.hpp"
#include "tpgraph/stat.hpp"

// Undirected simple graph on p labeled nodes (0-based). Edges are stored
// canonically with i < j; adjacency sets stay consistent with the edge set
// through every mutation.

namespace tpgraph {

class Graph {
public:
  explicit Graph(std::size_t p);

  static Graph complete(std::size_t p);

  std::size_t p() const { return p_; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(std::size_t i, std::size_t j) const;
  void add_edge(std::size_t i, std::size_t j);
  // Removing a missing edge is a no-op.
  void remove_edge(std::size_t i, std::size_t j);

  const std::set<std::size_t>& neighbors(std::size_t i) const {
    return adjacency_.at(i);
  }
  std::size_t degree(std::size_t i) const { return adjacency_.at(i).size(); }

  // Edges sorted lexicographically, each with first < second.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool operator==(const Graph& other) const;

private:
  void check_pair(std::size_t i, std::size_t j) const;

  std::size_t p_;
  std::size_t edge_count_ = 0;
  std::vector<std::set<std::size_t>> adjacency_;
};

// Edge-level confusion counts over the p(p-1)/2 unordered pairs.
struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
};

Graph complete_graph(std::size_t p);

// Edge (i,j) present iff |theta_ij| > tol. Ground-truth oracle for the
// synthetic generators.
Graph graph_from_precision(const PrecisionModel& model, double tol = 1e-10);

ConfusionCounts confusion(const Graph& estimated, const Graph& truth);

// Edge-list file: header "# p=<count>", then one "<i>\t<j>" line per edge
// with i < j, sorted; '#'-prefixed lines after the header are comments.
// Equal graphs serialize to identical bytes.
void write_edge_list(const Graph& g, const std::filesystem::path& path);
Graph read_edge_list(const std::filesystem::path& path);

}  // namespace tpgraph
