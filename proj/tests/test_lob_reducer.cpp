#include "doctest.h"

#include "outbranch/generators.hpp"
#include "outbranch/lob_reducer.hpp"
#include "outbranch/oracle.hpp"
#include "support/brute_force.hpp"
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

RuleApplication app(int rule, std::vector<VertexId> locus, RuleAction act, Arc arc) {
  return {rule, std::move(locus), act, arc};
}

} // namespace

TEST_CASE("find_rule priority and loci") {
  auto loose = make(4, {{0, 1}, {3, 1}});
  auto m = find_rule({loose, 1});
  REQUIRE(m);
  CHECK(m->rule == 1);

  auto path = make(3, {{0, 1}, {1, 2}});
  m = find_rule({path, 1});
  REQUIRE(m);
  CHECK(*m == app(2, {1}, RuleAction::contract, {0, 1}));

  // root with two out-neighbours that share nothing: nothing applies
  auto cherry = make(3, {{0, 1}, {0, 2}});
  CHECK_FALSE(find_rule({cherry, 2}));
}

TEST_CASE("rule 1") {
  auto out = apply_rule_1({make(4, {{0, 1}}), 1});
  CHECK(out.verdict == Verdict::no);
  CHECK(apply_rule_1({make(3, {{0, 1}, {2, 1}}), 5}).verdict == Verdict::no);
  CHECK_THROWS_AS(apply_rule_1({make(2, {{0, 1}}), 1}), PreconditionError);
}

TEST_CASE("rule 2") {
  auto r = apply_rule_2({make(3, {{0, 1}, {1, 2}}), 1}, 1);
  CHECK(r.instance.graph == make(2, {{0, 1}}));
  CHECK(r.applied.arc == Arc{0, 1});
  // r=0 a=1 b=2 c=3 e=4
  auto d = make(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
  auto s = apply_rule_2({d, 1}, 3);
  CHECK(s.applied.arc == Arc{3, 4});
  CHECK(s.instance.graph.size() == 4);
  CHECK_THROWS_AS(apply_rule_2({d, 1}, 1), PreconditionError);
}

TEST_CASE("rule 3") {
  // r=0, u1..u5 = 1..5
  auto d = make(6, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {4, 5}, {5, 4}});
  auto m = match_rule(d, 3);
  REQUIRE(m);
  CHECK(m->locus == ids({1, 2, 3, 4, 5}));
  auto path = ids({1, 2, 3, 4, 5});
  auto r = apply_rule_3({d, 1}, path);
  CHECK(r.applied.arc == Arc{2, 3});
  CHECK(r.instance.graph.size() == 5);
  CHECK(maxleaf(d) == maxleaf(r.instance.graph));
  // length 3 only
  auto shorter = make(5, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}});
  CHECK_FALSE(match_rule(shorter, 3));
  auto four = ids({1, 2, 3, 4});
  CHECK_THROWS_AS(apply_rule_3({shorter, 1}, four), PreconditionError);
}

TEST_CASE("rule 4") {
  // r=0 z=1 y=2 x=3
  auto d = make(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  auto r = apply_rule_4({d, 1}, 3, 2);
  CHECK(r.applied.arc == Arc{2, 3});
  CHECK_FALSE(r.instance.graph.has_arc(2, 3));
  CHECK(maxleaf(d) == maxleaf(r.instance.graph));
  // root remark: r=0 x=1 w=2
  auto e = make(3, {{0, 1}, {2, 1}, {0, 2}});
  CHECK(apply_rule_4({e, 1}, 1, 2).applied.arc == Arc{2, 1});
  // guard false: y reachable around N^-(x)
  auto f = make(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(apply_rule_4({f, 1}, 3, 2), PreconditionError);
}

TEST_CASE("rule 5") {
  // r=0 x1=1 x2=2 y1=3 y2=4
  auto d = make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 1}, {1, 3}, {2, 4}});
  auto m = match_rule(d, 5);
  REQUIRE(m);
  CHECK(m->locus == ids({1, 3, 2, 4}));
  auto r = apply_rule_5({d, 2}, {1, 3}, {2, 4});
  CHECK(maxleaf(d) == 2);
  CHECK(maxleaf(r.instance.graph) == 2);
  CHECK_FALSE(match_rule(make(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}}), 5));
  CHECK_THROWS_AS(apply_rule_5({d, 2}, {0, 1}, {2, 4}), PreconditionError);
}

TEST_CASE("rule 6") {
  auto d = make(3, {{0, 1}, {1, 2}, {2, 1}});
  auto r = apply_rule_6({d, 1}, {1, 2});
  CHECK(r.instance.graph == make(3, {{0, 1}, {1, 2}}));
  CHECK(maxleaf(d) == maxleaf(r.instance.graph));
  CHECK_FALSE(match_rule(make(3, {{0, 1}, {1, 2}}), 6));
  CHECK_THROWS_AS(apply_rule_6({make(3, {{0, 1}, {1, 2}}), 1}, {1, 2}), PreconditionError);
}

TEST_CASE("fixpoint driver and trace replay") {
  LobInstance path{gen_path(4), 1};
  auto red = reduce_to_fixpoint(path);
  CHECK(red.outcome.verdict == Verdict::reduced);
  CHECK(red.outcome.graph.size() <= 2);
  CHECK(red.outcome.k == 1);
  for (const auto &s : red.trace.steps)
    CHECK(s.applied.rule == 2);
  std::vector<RuleApplication> steps;
  for (const auto &s : red.trace.steps)
    steps.push_back(s.applied);
  CHECK(replay(path, steps).graph == red.outcome.graph);
  CHECK(parse_trace(red.trace.to_text()) == steps);

  auto no = reduce_to_fixpoint({make(3, {{0, 1}}), 1});
  CHECK(no.outcome.verdict == Verdict::no);

  auto again = reduce_to_fixpoint({red.outcome.graph, 1});
  CHECK(again.trace.steps.empty());
  CHECK(again.outcome.graph == red.outcome.graph);
}

TEST_CASE("trace parsing errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_trace("RULE 2 LOCUS 1 ACTION contract 0 1\nRULE 9 LOCUS 1 ACTION contract 0 1\n"),
                       doctest::Contains("line 2"), InputError);
  CHECK_THROWS_AS(parse_trace("RULE 2 LOCUS 1 ACTION squash 0 1"), InputError);
  CHECK(parse_trace("# comment\n\n").empty());
}

TEST_CASE("bipath chain: rule 3 fires repeatedly") {
  auto red = reduce_to_fixpoint({gen_bipath_chain(20), 2});
  int rule3 = 0;
  for (const auto &s : red.trace.steps)
    rule3 += s.applied.rule == 3;
  CHECK(rule3 >= 10);
  CHECK(maxleaf(red.outcome.graph) == maxleaf(gen_bipath_chain(20)));
}

TEST_CASE("every firing preserves maxleaf exactly (random, n <= 9)") {
  int firings = 0;
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    Rng rng = Rng::for_trial(41, trial);
    VertexId n = static_cast<VertexId>(rng.uniform(2, 9));
    auto d = gen_random(n, rng.unit() * 0.35, rng);
    LobInstance current{d, 1};
    int before = brute::parent_vectors(d).max_leaves;
    REQUIRE(before == maxleaf(d));
    while (auto m = find_rule(current)) {
      REQUIRE(m->rule != 1);
      auto r = apply_rule(current, *m);
      ++firings;
      CHECK(r.instance.graph.in_degree(r.instance.graph.root()) == 0);
      int after = maxleaf(r.instance.graph);
      CHECK_MESSAGE(after == before, "rule " << m->rule << " trial " << trial);
      current = r.instance;
    }
  }
  CHECK(firings > 300);
}
