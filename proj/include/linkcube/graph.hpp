#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkcube/rng.hpp"

namespace linkcube {

struct InvalidProbability : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CycleTooShort : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class GraphModel { complete, gnp, tripartite331, disjoint_cycles, custom };

// Simple undirected graph: no self-loops, no duplicate edges, vertices 0..n-1.
class Graph {
 public:
  static Graph complete(int n);
  static Graph gnp(int n, double p, const SeedSpec& seed, std::uint64_t attempt = 0);
  static Graph tripartite331();
  // Disjoint union of a k-cycle (vertices 0..k-1) and an l-cycle (k..k+l-1).
  static Graph disjoint_cycles(int k, int l);
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                          GraphModel model = GraphModel::custom);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int i, int j) const { return edge_index_[idx(i, j)] >= 0; }
  // Position of {i,j} in edges(), -1 if absent.
  int edge_index(int i, int j) const { return edge_index_[idx(i, j)]; }

  GraphModel model() const { return model_; }
  double edge_probability() const { return p_; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }
  void build_adjacency();

  int n_ = 0;
  GraphModel model_ = GraphModel::custom;
  double p_ = 1.0;
  std::vector<std::pair<int, int>> edges_;       // i < j, lexicographic
  std::vector<std::vector<int>> adj_;            // ascending
  std::vector<int> edge_index_;                  // n x n, -1 if no edge
};

}  // namespace linkcube
