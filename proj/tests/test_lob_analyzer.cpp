#include "doctest.h"

#include <cmath>

#include "outbranch/connectivity.hpp"
#include "outbranch/generators.hpp"
#include "outbranch/lob_analyzer.hpp"
#include "outbranch/oracle.hpp"
#include "support/graphs.hpp"

using namespace outbranch;
using testing_graphs::ids;
using testing_graphs::make;

namespace {

int maxleaf(const RootedDigraph &d) {
  auto r = solve_branch_and_bound(d, Objective::leaf);
  REQUIRE(r.exact);
  return r.best_value;
}

// r=0, s1=1, s2=2, three parallel bipaths s1 <-> x <-> s2 with x = 3, 4, 5
RootedDigraph parallel_bipaths() {
  return make(6, {{0, 1}, {0, 2}, {1, 3}, {3, 1}, {3, 2}, {2, 3}, {1, 4}, {4, 1}, {4, 2},
                  {2, 4}, {1, 5}, {5, 1}, {5, 2}, {2, 5}});
}

} // namespace

TEST_CASE("special vertices") {
  // 3 has in-arcs from 1, 2 and 4
  auto d = make(5, {{0, 1}, {0, 2}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {4, 3}, {3, 4}, {0, 4}});
  auto sp = special_vertices(d);
  CHECK(std::find(sp.begin(), sp.end(), 3) != sp.end());
  CHECK(std::find(sp.begin(), sp.end(), 1) != sp.end());  // (0,1) has no reverse
  auto chain = make(4, {{0, 1}, {0, 3}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
  auto sc = special_vertices(chain);
  CHECK(std::find(sc.begin(), sc.end(), 2) == sc.end());
}

TEST_CASE("isolated bags") {
  // D: r=0 -> t=1 -> h=2 (bag {1,2}); bag-level links to 3; 3 and 1's bag bidirected
  ContractedGraph cg;
  cg.original = make(5, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {3, 1}, {4, 3}, {0, 4}});
  cg.origin = {0, 1, 1, 2, 3};
  cg.bags = {{{0}, 0, 0}, {{1, 2}, 2, 1}, {{3}, 3, 3}, {{4}, 4, 4}};
  cg.graph = make(4, {{0, 1}, {0, 2}, {1, 2}, {2, 1}, {3, 2}, {0, 3}});
  auto sp = special_vertices(cg.graph);
  // bag 1 has in-arc from root without reverse, so it is special
  CHECK(std::find(sp.begin(), sp.end(), 1) != sp.end());
  CHECK(isolated_vertices(cg).empty());

  // same shape with bag 1 fed only through a bidirected link
  ContractedGraph iso;
  iso.original = make(5, {{0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 1}, {4, 3}, {3, 4}});
  iso.origin = {0, 1, 1, 2, 3};
  iso.bags = {{{0}, 0, 0}, {{1, 2}, 2, 1}, {{3}, 3, 3}, {{4}, 4, 4}};
  iso.graph = make(4, {{0, 2}, {0, 3}, {1, 2}, {2, 1}, {3, 2}, {2, 3}});
  auto sp2 = special_vertices(iso.graph);
  CHECK(std::find(sp2.begin(), sp2.end(), 1) == sp2.end());
  // tail 1 only reaches its own head: isolated
  CHECK(isolated_vertices(iso) == ids({1}));
  // size-1 bags are never isolated
  for (VertexId v : isolated_vertices(iso))
    CHECK(iso.bags[v].members.size() == 2);
}

TEST_CASE("bipath decomposition and masters") {
  auto d = parallel_bipaths();
  auto dec = decompose_bipaths(d, ids({0, 1, 2}));
  REQUIRE(dec.paths.size() == 3);
  CHECK(dec.paths[0] == ids({1, 3, 2}));
  CHECK(decomposition_defects(d, dec).empty());
  auto cls = classify_masters_slaves(dec, d);
  CHECK(cls.slave_count == 1);
  CHECK(cls.bipaths[0].master);
  CHECK(cls.bipaths[1].master);
  CHECK_FALSE(cls.bipaths[2].master);
  CHECK(cls.bipaths[0].outside == ids({1, 2}));
  CHECK(maxleaf(d) >= cls.slave_count);

  auto all = decompose_bipaths(d, ids({0, 1, 2, 3, 4, 5}));
  CHECK(all.paths.empty());
  CHECK_THROWS_AS(decompose_bipaths(d, ids({1, 2})), PreconditionError);
  CHECK_THROWS_AS(decompose_bipaths(d, ids({0, 2})), PreconditionError);
  // a non-seed vertex of in-degree 1
  auto bad = make(3, {{0, 1}, {1, 2}, {0, 2}});
  auto sp = special_vertices(bad);
  CHECK(sp.size() == 2);
}

TEST_CASE("certificate thresholds") {
  LobAnalysis a;
  a.special.resize(60);
  a.contracted.graph = RootedDigraph();
  a.contracted.original = RootedDigraph();
  auto c = certificate(1, a);
  CHECK(c.yes);
  CHECK(c.special_bound == 1);
  auto big = certificate(5, a);
  CHECK_FALSE(big.yes);
  a.classes.slave_count = 5;
  CHECK(certificate(5, a).yes);
  LobAnalysis small;
  small.contracted.original = gen_path(30);
  small.contracted.graph = RootedDigraph();
  CHECK(certificate(3, small, 2.0).yes);
  CHECK_FALSE(certificate(3, small, 20.0).yes);
}

TEST_CASE("build_contracted refuses unreduced input") {
  CHECK_THROWS_AS(build_contracted(gen_path(4)), PreconditionError);
}

TEST_CASE("reduced random and planar instances satisfy the structural lemmas and bounds") {
  int analysed = 0, with_bags = 0;
  for (std::uint64_t trial = 0; trial < 400; ++trial) {
    Rng rng = Rng::for_trial(23, trial);
    RootedDigraph d;
    if (trial % 2 == 0) {
      d = gen_planar({static_cast<VertexId>(rng.uniform(3, 12)), rng.unit(), rng.unit()}, rng);
    } else {
      d = gen_random(static_cast<VertexId>(rng.uniform(2, 10)), rng.unit() * 0.3, rng);
    }
    auto red = reduce_to_fixpoint({d, 1});
    REQUIRE(red.outcome.verdict == Verdict::reduced);
    const RootedDigraph &g = red.outcome.graph;
    auto a = analyze(g);
    ++analysed;
    for (const auto &bag : a.contracted.bags)
      with_bags += bag.members.size() == 2;
    auto defects = structural_defects(a);
    CHECK_MESSAGE(defects.empty(), "trial " << trial << ": " << (defects.empty() ? "" : defects[0]));
    int ml = maxleaf(g);
    CHECK(ml == maxleaf(d));
    CHECK(ml >= (static_cast<int>(a.special.size()) + 59) / 60);
    CHECK(ml >= (static_cast<int>(a.isolated.size()) + 179) / 180);
    CHECK(ml >= a.classes.slave_count);
    CHECK(ml >= maxleaf(a.contracted.graph));
    if (a.contracted.graph.size() > 1) {
      auto cv = cut_structure(a.contracted.graph).cut_vertices().size();
      CHECK(maxleaf(a.contracted.graph) >= static_cast<int>(cv) + 1);
    }
    for (int k = 1; k <= 4; ++k)
      if (certificate(k, a).yes)
        CHECK(ml >= k);
    auto report = size_report(a);
    CHECK(report.bound_violations == 0);
    CHECK(report.minor_heavy_sum <= report.minor_heavy_bound);
    CHECK(report.easy + report.hard == report.contracted_vertices);
  }
  CHECK(analysed == 400);
  CHECK(with_bags > 0);
}
