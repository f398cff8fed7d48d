// SPDX-License-Identifier: Apache-2.0

#include "tpgraph/graph.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace tpgraph {

Graph::Graph(std::size_t p) : p_(p), adjacency_(p) {
  if (p < 2) throw ValueError("graph needs at least 2 nodes");
}

Graph Graph::complete(std::size_t p) {
  Graph g(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) g.add_edge(i, j);
  return g;
}

void Graph::check_pair(std::size_t i, std::size_t j) const {
  if (i >= p_ || j >= p_) throw ValueError("graph: node index out of range");
  if (i == j) throw ValueError("graph: self-loops are not allowed");
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
  check_pair(i, j);
  return adjacency_[i].count(j) > 0;
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  check_pair(i, j);
  if (adjacency_[i].insert(j).second) {
    adjacency_[j].insert(i);
    ++edge_count_;
  }
}

void Graph::remove_edge(std::size_t i, std::size_t j) {
  check_pair(i, j);
  if (adjacency_[i].erase(j) > 0) {
    adjacency_[j].erase(i);
    --edge_count_;
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < p_; ++i)
    for (std::size_t j : adjacency_[i])
      if (j > i) out.emplace_back(i, j);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return p_ == other.p_ && adjacency_ == other.adjacency_;
}

Graph complete_graph(std::size_t p) { return Graph::complete(p); }

Graph graph_from_precision(const PrecisionModel& model, double tol) {
  if (tol < 0.0) throw ValueError("graph_from_precision: tol must be >= 0");
  const std::size_t p = model.p();
  Graph g(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (std::abs(model.theta(i, j)) > tol) g.add_edge(i, j);
  return g;
}

ConfusionCounts confusion(const Graph& estimated, const Graph& truth) {
  if (estimated.p() != truth.p())
    throw ValueError("confusion: graphs have different node counts");
  ConfusionCounts c;
  const std::size_t p = estimated.p();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const bool in_est = estimated.has_edge(i, j);
      const bool in_truth = truth.has_edge(i, j);
      if (in_est && in_truth) ++c.tp;
      else if (in_est && !in_truth) ++c.fp;
      else if (!in_est && in_truth) ++c.fn;
      else ++c.tn;
    }
  }
  return c;
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValueError("cannot open for writing: " + path.string());
  out << "# p=" << g.p() << "\n";
  for (const auto& [i, j] : g.edges()) out << i << "\t" << j << "\n";
  if (!out) throw ValueError("write failed: " + path.string());
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValueError("cannot open: " + path.string());

  std::string line;
  if (!std::getline(in, line))
    throw ValueError(path.string() + ": empty edge-list file");
  std::size_t p = 0;
  if (std::sscanf(line.c_str(), "# p=%zu", &p) != 1)
    throw ValueError(path.string() + ": expected header '# p=<count>'");

  Graph g(p);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long long i = -1, j = -1;
    std::string extra;
    if (!(fields >> i >> j) || (fields >> extra) || i < 0 || j < 0)
      throw ValueError(path.string() + ":" + std::to_string(line_no) +
                       ": malformed edge line '" + line + "'");
    auto a = static_cast<std::size_t>(i);
    auto b = static_cast<std::size_t>(j);
    if (a >= p || b >= p)
      throw ValueError(path.string() + ":" + std::to_string(line_no) +
                       ": node index out of range");
    if (a == b)
      throw ValueError(path.string() + ":" + std::to_string(line_no) +
                       ": self-loop");
    if (g.has_edge(a, b))
      throw ValueError(path.string() + ":" + std::to_string(line_no) +
                       ": duplicate edge");
    g.add_edge(a, b);
  }
  return g;
}

}  // namespace tpgraph
