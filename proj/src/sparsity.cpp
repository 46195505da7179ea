#include "outbranch/sparsity.hpp"

#include <algorithm>
#include <cmath>

namespace outbranch {

std::size_t UndirectedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto &list : adj)
    twice += list.size();
  return twice / 2;
}

UndirectedGraph graph_from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges) {
  UndirectedGraph g;
  g.adj.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge endpoint out of range");
    if (u == v)
      continue;
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto &list : g.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

UndirectedGraph underlying_graph(const RootedDigraph &d) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(d.arc_count());
  for (Arc a : d.arcs())
    edges.push_back({a.tail, a.head});
  return graph_from_edges(d.size(), edges);
}

DegeneracyOrdering degeneracy(const UndirectedGraph &g) {
  const VertexId n = g.size();
  DegeneracyOrdering result;
  if (n == 0)
    return result;
  std::vector<int> deg(n);
  int max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(g.adj[v].size());
    max_deg = std::max(max_deg, deg[v]);
  }
  // bucket queue with lazy deletion
  std::vector<std::vector<VertexId>> buckets(max_deg + 1);
  for (VertexId v = 0; v < n; ++v)
    buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  int low = 0;
  while (static_cast<VertexId>(result.order.size()) < n) {
    while (buckets[low].empty())
      ++low;
    VertexId v = buckets[low].back();
    buckets[low].pop_back();
    if (removed[v] || deg[v] != low)
      continue;
    removed[v] = 1;
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, low);
    for (VertexId w : g.adj[v])
      if (!removed[w]) {
        --deg[w];
        buckets[deg[w]].push_back(w);
        low = std::min(low, deg[w]);
      }
  }
  return result;
}

double NeighborhoodClassing::class_bound() const {
  return (std::pow(4.0, p) + 2.0 * p) * static_cast<double>(modulator.size());
}

NeighborhoodClassing classify_by_modulator(const UndirectedGraph &g, std::span<const VertexId> X,
                                           int p) {
  NeighborhoodClassing result;
  result.p = p;
  result.modulator.assign(X.begin(), X.end());
  std::sort(result.modulator.begin(), result.modulator.end());
  result.modulator.erase(std::unique(result.modulator.begin(), result.modulator.end()),
                         result.modulator.end());
  std::vector<char> in_x(g.size(), 0);
  for (VertexId x : result.modulator) {
    if (x < 0 || x >= g.size())
      throw InputError("modulator vertex out of range");
    in_x[x] = 1;
  }
  for (VertexId v = 0; v < g.size(); ++v) {
    if (in_x[v])
      continue;
    std::vector<VertexId> key;
    for (VertexId w : g.adj[v])
      if (in_x[w])
        key.push_back(w);
    if (static_cast<int>(key.size()) >= 2 * p)
      result.heavy.push_back(v);
    else
      result.classes[std::move(key)].push_back(v);
  }
  return result;
}

HeavyDegreeSum heavy_degree_sum(std::size_t x_count,
                                std::span<const std::vector<VertexId>> y_neighbors, int d) {
  HeavyDegreeSum result;
  result.bound = 2LL * d * static_cast<long long>(x_count);
  for (const auto &list : y_neighbors)
    if (static_cast<long long>(list.size()) > 2LL * d)
      result.sum += static_cast<long long>(list.size());
  return result;
}

int bipartite_degeneracy(std::size_t x_count, std::span<const std::vector<VertexId>> y_neighbors) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  const auto offset = static_cast<VertexId>(x_count);
  for (std::size_t y = 0; y < y_neighbors.size(); ++y)
    for (VertexId x : y_neighbors[y])
      edges.push_back({x, offset + static_cast<VertexId>(y)});
  return degeneracy(graph_from_edges(offset + static_cast<VertexId>(y_neighbors.size()), edges))
      .degeneracy;
}

} // namespace outbranch
