#include "linkcube/graph.hpp"

#include <algorithm>

namespace linkcube {

void Graph::build_adjacency() {
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(n_, {});
  edge_index_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [i, j] = edges_[e];
    adj_[i].push_back(j);
    adj_[j].push_back(i);
    edge_index_[idx(i, j)] = static_cast<int>(e);
    edge_index_[idx(j, i)] = static_cast<int>(e);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges, GraphModel model) {
  if (n < 1) throw std::invalid_argument("graph needs n >= 1");
  Graph g;
  g.n_ = n;
  g.model_ = model;
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i == j) throw std::invalid_argument("self-loop");
    if (i < 0 || j >= n) throw std::invalid_argument("vertex index out of range");
  }
  g.edges_ = std::move(edges);
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
    throw std::invalid_argument("duplicate edge");
  g.build_adjacency();
  return g;
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return from_edges(n, std::move(edges), GraphModel::complete);
}

Graph Graph::gnp(int n, double p, const SeedSpec& seed, std::uint64_t attempt) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidProbability("gnp needs p in (0,1)");
  Pcg32 rng = sample_rng(seed, attempt);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < p) edges.emplace_back(i, j);
  Graph g = from_edges(n, std::move(edges), GraphModel::gnp);
  g.p_ = p;
  return g;
}

Graph Graph::tripartite331() {
  // Parts {0,1,2}, {3,4,5}, {6}; edges between distinct parts only.
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
    edges.emplace_back(a, 6);
  }
  for (int b = 3; b < 6; ++b) edges.emplace_back(b, 6);
  return from_edges(7, std::move(edges), GraphModel::tripartite331);
}

Graph Graph::disjoint_cycles(int k, int l) {
  if (k < 3 || l < 3) throw CycleTooShort("cycles need >= 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  for (int i = 0; i < l; ++i) edges.emplace_back(k + i, k + (i + 1) % l);
  return from_edges(k + l, std::move(edges), GraphModel::disjoint_cycles);
}

}  // namespace linkcube
