#include "doctest.h"

#include "outbranch/generators.hpp"
#include "outbranch/sparsity.hpp"
#include "support/graphs.hpp"

using namespace outbranch;

namespace {

UndirectedGraph complete(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      e.emplace_back(u, v);
  return graph_from_edges(n, e);
}

} // namespace

TEST_CASE("degeneracy of standard graphs") {
  CHECK(degeneracy(complete(1)).degeneracy == 0);
  CHECK(degeneracy(complete(5)).degeneracy == 4);
  CHECK(degeneracy(underlying_graph(gen_path(6))).degeneracy == 1);
  CHECK(degeneracy(underlying_graph(gen_star(6))).degeneracy == 1);
  std::vector<std::pair<VertexId, VertexId>> cycle = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 0}, {1, 0}};
  auto g = graph_from_edges(4, cycle);
  CHECK(g.edge_count() == 4);
  auto o = degeneracy(g);
  CHECK(o.degeneracy == 2);
  CHECK(o.order.size() == 4);
}

TEST_CASE("planar triangulations are 5-degenerate") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    auto n = static_cast<VertexId>(rng.uniform(3, 80));
    auto edges = sweep_triangulation(n, rng);
    auto g = graph_from_edges(n, edges);
    CHECK(degeneracy(g).degeneracy <= 5);
    CHECK(g.edge_count() <= static_cast<std::size_t>(3 * n - 6));
  }
}

TEST_CASE("classes by modulator") {
  // Vertices 2..5 see both of X = {0,1}; vertex 6 sees only 0.
  auto g = graph_from_edges(7, std::vector<std::pair<VertexId, VertexId>>{
                                   {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4},
                                   {0, 5}, {1, 5}, {0, 6}});
  std::vector<VertexId> x = {1, 0};
  auto c = classify_by_modulator(g, x, 1);
  CHECK(c.modulator == std::vector<VertexId>{0, 1});
  CHECK(c.heavy == std::vector<VertexId>{2, 3, 4, 5});
  REQUIRE(c.classes.count({0}) == 1);
  CHECK(c.classes.at({0}) == std::vector<VertexId>{6});
  CHECK(c.heavy_bound_holds());
  auto c2 = classify_by_modulator(g, x, 2);
  CHECK(c2.heavy.empty());
  CHECK(c2.classes.at({0, 1}).size() == 4);
}

TEST_CASE("heavy degree sum") {
  // Two X vertices; y0 sees both, y1 sees one.
  std::vector<std::vector<VertexId>> y = {{0, 1}, {0}};
  auto h = heavy_degree_sum(2, y, 0);
  CHECK(h.sum == 3);
  CHECK(h.bound == 0);
  CHECK_FALSE(h.holds());
  CHECK(heavy_degree_sum(2, y, 1).sum == 0);
  CHECK(bipartite_degeneracy(2, y) == 1);
  std::vector<std::vector<VertexId>> k33 = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  CHECK(bipartite_degeneracy(3, k33) == 3);
  CHECK(heavy_degree_sum_check(3, k33, 3));
}
