#include "doctest.h"

#include "outbranch/generators.hpp"
#include "outbranch/lob_reducer.hpp"
#include "outbranch/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/graphs.hpp"

using namespace outbranch;
using testing_graphs::make;

namespace {

std::uint64_t count(const RootedDigraph &d) {
  return enumerate_out_branchings(d, {}, [](const OutBranching &) { return true; }).count;
}

} // namespace

TEST_CASE("enumeration on small examples") {
  CHECK(count(gen_path(3)) == 1);
  auto d = make(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}});
  CHECK(count(d) == 3);
  CHECK(brute::parent_vectors(d).count == 3);
  CHECK(count(RootedDigraph()) == 1);
  CHECK_THROWS_AS(count(make(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("maxleaf and max internal examples") {
  CHECK(maxleaf_exact(gen_star(3)).best_value == 3);
  CHECK(maxleaf_exact(gen_path(4)).best_value == 1);
  auto rule5 = make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 1}, {1, 3}, {2, 4}});
  CHECK(maxleaf_exact(rule5).best_value == 2);
  CHECK(max_internal_exact(gen_path(4)).best_value == 3);
  CHECK(max_internal_exact(gen_star(3)).best_value == 1);
  auto big = gen_path(20);
  CHECK_FALSE(maxleaf_exact(big).exact);
}

TEST_CASE("enumeration agrees with the parent-vector filter (n <= 7)") {
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    Rng rng = Rng::for_trial(7, trial);
    VertexId n = static_cast<VertexId>(rng.uniform(1, 7));
    auto d = gen_random(n, rng.unit() * 0.5, rng);
    auto expect = brute::parent_vectors(d);
    std::uint64_t seen = 0;
    enumerate_out_branchings(d, {}, [&](const OutBranching &t) {
      ++seen;
      REQUIRE(branching_defect(d, t).empty());
      // leaves = 1 + sum over v of max(children - 1, 0), for n >= 2
      if (n >= 2) {
        int sum = 1;
        for (int c : t.child_counts())
          sum += c > 1 ? c - 1 : 0;
        REQUIRE(sum == t.leaf_count());
      }
      return true;
    });
    REQUIRE(seen == expect.count);
    CHECK(maxleaf_exact(d).best_value == expect.max_leaves);
    CHECK(max_internal_exact(d).best_value == expect.max_internal);
    CHECK(max_internal_exact(d).best_value == n - expect.min_leaves);
  }
}

TEST_CASE("branch and bound matches enumeration (n <= 9)") {
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    Rng rng = Rng::for_trial(9, trial);
    VertexId n = static_cast<VertexId>(rng.uniform(1, 9));
    auto d = gen_random(n, rng.unit() * 0.4, rng);
    for (Objective mode : {Objective::leaf, Objective::internal}) {
      auto bb = solve_branch_and_bound(d, mode);
      auto en = mode == Objective::leaf ? maxleaf_exact(d) : max_internal_exact(d);
      REQUIRE(bb.exact);
      REQUIRE(en.exact);
      CHECK(bb.best_value == en.best_value);
      CHECK(branching_defect(d, bb.witness).empty());
      CHECK(objective_value(bb.witness, mode) == bb.best_value);
    }
  }
}

TEST_CASE("branch and bound stops at the target") {
  Rng rng(3);
  auto d = gen_planar({40, 1.0, 0.5}, rng);
  BranchAndBoundOptions o;
  o.target = 1;
  auto r = solve_branch_and_bound(d, Objective::leaf, o);
  CHECK(r.best_value >= 1);
}

TEST_CASE("check_equivalence") {
  auto d = make(3, {{0, 1}, {1, 2}, {2, 1}});
  auto after = apply_rule_6({d, 1}, {1, 2}).instance.graph;
  for (int k = 0; k <= 3; ++k)
    CHECK(check_equivalence(d, after, k, Objective::leaf) == Equivalence::equivalent);
  CHECK(check_equivalence(d, d, 2, Objective::internal) == Equivalence::equivalent);

  // Deleting a random arc is not a valid reduction; the oracle must notice.
  bool caught = false;
  for (std::uint64_t trial = 0; trial < 1000 && !caught; ++trial) {
    Rng rng = Rng::for_trial(11, trial);
    auto g = gen_random(static_cast<VertexId>(rng.uniform(3, 8)), 0.3, rng);
    auto arcs = g.arcs();
    Arc victim = arcs[rng.uniform(0, static_cast<std::int64_t>(arcs.size()) - 1)];
    auto mutated = delete_arc(g, victim).graph;
    int k = static_cast<int>(rng.uniform(1, g.size()));
    caught = check_equivalence(g, mutated, k, Objective::leaf) == Equivalence::differ;
  }
  CHECK(caught);
}
