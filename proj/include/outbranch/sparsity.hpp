#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "outbranch/digraph.hpp"

namespace outbranch {

// Simple undirected graph as sorted adjacency lists.
struct UndirectedGraph {
  std::vector<std::vector<VertexId>> adj;

  VertexId size() const { return static_cast<VertexId>(adj.size()); }
  std::size_t edge_count() const;
};

UndirectedGraph underlying_graph(const RootedDigraph &d);

// Drops loops and duplicate edges.
UndirectedGraph graph_from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges);

struct DegeneracyOrdering {
  std::vector<VertexId> order;  // removal order
  int degeneracy = 0;
};

// Repeatedly removes a vertex of minimum remaining degree (bucket queue).
DegeneracyOrdering degeneracy(const UndirectedGraph &g);

struct NeighborhoodClassing {
  std::vector<VertexId> modulator;  // X, sorted
  int p = 0;                        // light means |N(v) ∩ X| < 2p
  std::map<std::vector<VertexId>, std::vector<VertexId>> classes;  // key N(v) ∩ X
  std::vector<VertexId> heavy;

  // |heavy| <= 2p|X|
  std::size_t heavy_bound() const { return 2 * static_cast<std::size_t>(p) * modulator.size(); }
  bool heavy_bound_holds() const { return heavy.size() <= heavy_bound(); }
  // distinct light neighbourhoods <= (4^p + 2p)|X|
  double class_bound() const;
  bool class_bound_holds() const { return static_cast<double>(classes.size()) <= class_bound(); }
};

// Buckets every vertex outside X by its neighbourhood in X. The two counts
// are only guaranteed when p is at least the graph's depth-1 grad.
NeighborhoodClassing classify_by_modulator(const UndirectedGraph &g, std::span<const VertexId> X,
                                           int p);

struct HeavyDegreeSum {
  long long sum = 0;    // sum of deg(y) over y with deg(y) > 2d
  long long bound = 0;  // 2d|X|
  bool holds() const { return sum <= bound; }
};

// Bipartite graph given from the Y side: y_neighbors[y] lists neighbours in X.
// The inequality holds whenever d is at least the degeneracy.
HeavyDegreeSum heavy_degree_sum(std::size_t x_count,
                                std::span<const std::vector<VertexId>> y_neighbors, int d);

inline bool heavy_degree_sum_check(std::size_t x_count,
                                   std::span<const std::vector<VertexId>> y_neighbors, int d) {
  return heavy_degree_sum(x_count, y_neighbors, d).holds();
}

// Degeneracy of the bipartite graph X ∪ Y described by y_neighbors.
int bipartite_degeneracy(std::size_t x_count, std::span<const std::vector<VertexId>> y_neighbors);

} // namespace outbranch
