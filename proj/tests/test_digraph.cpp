#include "doctest.h"

#include "outbranch/connectivity.hpp"
#include "outbranch/digraph.hpp"
#include "outbranch/generators.hpp"
#include "support/graphs.hpp"

using namespace outbranch;
using testing_graphs::ids;
using testing_graphs::make;

namespace {
constexpr VertexId r = 0, a = 1, b = 2, c = 3;
}

TEST_CASE("construction rejects malformed arc sets") {
  std::vector<Arc> loop{{1, 1}};
  CHECK_THROWS_AS(RootedDigraph(2, 0, loop), InputError);
  std::vector<Arc> dup{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(RootedDigraph(2, 0, dup), InputError);
  std::vector<Arc> into_root{{1, 0}};
  CHECK_THROWS_AS(RootedDigraph(2, 0, into_root), InputError);
  std::vector<Arc> range{{0, 5}};
  CHECK_THROWS_AS(RootedDigraph(2, 0, range), InputError);
  auto d = RootedDigraph::simplified(2, 0, std::vector<Arc>{{0, 1}, {0, 1}, {1, 1}});
  CHECK(d.arc_count() == 1);
}

TEST_CASE("reachable") {
  auto path = make(3, {{r, a}, {a, b}});
  CHECK(reachable(path, r) == ids({r, a, b}));
  std::vector<VertexId> gone{a};
  CHECK(reachable(path, r, gone) == ids({r}));
  auto tri = make(3, {{r, a}, {r, b}, {a, b}});
  std::vector<Arc> cut{{r, b}};
  CHECK(reachable(tri, r, {}, cut) == ids({r, a, b}));
  CHECK_THROWS_AS(reachable(path, 7), InputError);
  std::vector<VertexId> self{r};
  CHECK_THROWS_AS(reachable(path, r, self), PreconditionError);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(make(3, {{r, a}, {a, b}})));
  CHECK_FALSE(is_connected(make(4, {{r, a}})));
  CHECK(is_connected(RootedDigraph()));
}

TEST_CASE("cut vertices and cut edges") {
  auto path = make(3, {{r, a}, {a, b}});
  CHECK(cut_vertices(path) == ids({a}));
  CHECK(cut_edges(path) == std::vector<Arc>{{r, a}, {a, b}});
  CHECK(lonely_cut_edges(cut_edges(path)).size() == 2);

  auto tri = make(3, {{r, a}, {r, b}, {a, b}});
  CHECK(cut_vertices(tri).empty());
  CHECK(cut_edges(tri) == std::vector<Arc>{{r, a}});

  auto star = make(4, {{r, a}, {r, b}, {r, c}});
  CHECK(cut_vertices(star).empty());

  auto fork = make(4, {{r, a}, {a, b}, {a, c}});
  auto cut = cut_edges(fork);
  CHECK(cut == std::vector<Arc>{{r, a}, {a, b}, {a, c}});
  CHECK(lonely_cut_edges(cut) == std::vector<Arc>{{r, a}});

  CHECK_THROWS_AS(cut_vertices(make(4, {{r, a}})), PreconditionError);
}

TEST_CASE("private neighbours") {
  CHECK(private_neighbors(make(3, {{r, a}, {a, b}}), a) == ids({b}));
  CHECK(private_neighbors(make(3, {{r, a}, {r, b}}), r) == ids({a, b}));
  auto diamond = make(4, {{r, a}, {r, b}, {a, c}, {b, c}});
  CHECK(private_neighbors(diamond, a).empty());
}

TEST_CASE("contract_arc") {
  auto s = contract_arc(make(3, {{r, a}, {a, b}}), {r, a});
  CHECK(s.graph == make(2, {{0, 1}}));
  CHECK(s.old_to_new == ids({0, 0, 1}));

  auto t = contract_arc(make(3, {{r, a}, {a, b}, {r, b}}), {a, b});
  CHECK(t.graph == make(2, {{0, 1}}));

  auto pair = make(4, {{r, a}, {a, b}, {b, a}, {b, c}});
  auto p = contract_arc(pair, {a, b});
  CHECK(p.graph == make(3, {{0, 1}, {1, 2}}));

  CHECK_THROWS_AS(contract_arc(pair, {c, r}), InputError);
  // merging the root with a vertex that has another in-neighbour
  auto back = make(3, {{r, a}, {a, b}, {b, a}});
  CHECK_THROWS_AS(contract_arc(back, {r, a}), PreconditionError);
}

TEST_CASE("shortcut_vertex") {
  CHECK(shortcut_vertex(make(3, {{r, a}, {a, b}}), a).graph == make(2, {{0, 1}}));
  CHECK(shortcut_vertex(make(4, {{r, a}, {a, b}, {a, c}}), a).graph ==
        make(3, {{0, 1}, {0, 2}}));
  auto s = shortcut_vertex(make(3, {{r, a}, {b, a}, {a, b}}), a);
  CHECK(s.graph == make(2, {{0, 1}}));
  CHECK(s.old_to_new == ids({0, kNoVertex, 1}));
  CHECK_THROWS_AS(shortcut_vertex(make(2, {{r, a}}), r), InputError);
}

TEST_CASE("planarity witness") {
  std::vector<Arc> k5;
  for (VertexId u = 1; u < 5; ++u) {
    k5.push_back({0, u});
    for (VertexId v = 1; v < 5; ++v)
      if (u != v)
        k5.push_back({u, v});
  }
  CHECK_FALSE(planarity_witness_check(RootedDigraph(5, 0, k5)));
  CHECK(planarity_witness_check(gen_path(10)));
  std::vector<Arc> grid;
  auto id = [](int i, int j) { return static_cast<VertexId>(3 * i + j); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i + 1 < 3) {
        grid.push_back({id(i, j), id(i + 1, j)});
        if (id(i, j) != 0)
          grid.push_back({id(i + 1, j), id(i, j)});
      }
      if (j + 1 < 3) {
        grid.push_back({id(i, j), id(i, j + 1)});
        if (id(i, j) != 0)
          grid.push_back({id(i, j + 1), id(i, j)});
      }
    }
  auto g = RootedDigraph(9, 0, grid);
  CHECK(undirected_edge_count(g) == 12);
  CHECK(planarity_witness_check(g));
}

TEST_CASE("cut structure: parallel kernel matches the definitional reference") {
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    Rng rng = Rng::for_trial(17, trial);
    VertexId n = static_cast<VertexId>(rng.uniform(1, 14));
    auto d = gen_random(n, rng.unit() * 0.3, rng);
    auto fast = cut_structure(d);
    auto slow = cut_structure_serial(d);
    REQUIRE(fast.is_cut_vertex == slow.is_cut_vertex);
    REQUIRE(fast.cut_edges == slow.cut_edges);
    for (Arc e : d.arcs()) {
      std::vector<Arc> one{e};
      bool disconnects = reachable(d, d.root(), {}, one).size() != static_cast<std::size_t>(n);
      REQUIRE(disconnects == fast.is_cut_edge(e));
    }
  }
}

TEST_CASE("reachable is monotone in the removed set") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::for_trial(3, trial);
    auto d = gen_random(9, 0.2, rng);
    std::vector<VertexId> removed;
    auto previous = reachable(d, d.root());
    for (VertexId v = 1; v < d.size(); ++v) {
      if (!rng.chance(0.3))
        continue;
      removed.push_back(v);
      auto now = reachable(d, d.root(), removed);
      CHECK(std::includes(previous.begin(), previous.end(), now.begin(), now.end()));
      previous = now;
    }
  }
}

TEST_CASE("surgeries return simple digraphs with the root kept at in-degree 0") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Rng rng = Rng::for_trial(5, trial);
    auto d = gen_random(8, 0.3, rng);
    for (VertexId v = 1; v < d.size(); ++v) {
      auto s = shortcut_vertex(d, v).graph;
      CHECK(s.in_degree(s.root()) == 0);
      for (VertexId u = 0; u < s.size(); ++u)
        CHECK_FALSE(s.has_arc(u, u));
    }
  }
}
