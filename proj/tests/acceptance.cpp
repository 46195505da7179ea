// Runs the acceptance checks and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <string>

#include "outbranch/generators.hpp"
#include "outbranch/oracle.hpp"
#include "outbranch/verify.hpp"
#include "support/brute_force.hpp"

using namespace outbranch;

namespace {

using Clock = std::chrono::steady_clock;

int failed = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string &title, bool ok, const std::string &detail) {
  std::printf("criterion %d %-28s %s  %s\n", id, title.c_str(), ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!ok)
    ++failed;
}

std::string counts(const SuiteResult &r) {
  std::string s = "instances=" + std::to_string(r.instances) +
                  " checks=" + std::to_string(r.checks) +
                  " violations=" + std::to_string(r.violations);
  if (!r.failures.empty())
    s += " first failure: " + r.failures.front();
  return s;
}

std::string metric(const SuiteResult &r, const std::string &key) {
  auto it = r.metrics.find(key);
  if (it == r.metrics.end())
    return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", it->second);
  return buf;
}

double value(const SuiteResult &r, const std::string &key) {
  auto it = r.metrics.find(key);
  return it == r.metrics.end() ? 0 : it->second;
}

// Enumeration against an independent parent-vector count, and
// branch-and-bound against enumeration.
SuiteResult oracle_cross_check(std::uint64_t seed) {
  SuiteResult r;
  r.name = "oracle";
  auto fail = [&](const std::string &msg) {
    ++r.violations;
    if (r.failures.size() < 4)
      r.failures.push_back(msg);
  };
  for (int t = 0; t < 800; ++t) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
    bool small = t % 2 == 0;
    auto n = static_cast<VertexId>(rng.uniform(1, small ? 7 : 9));
    RootedDigraph d = gen_random(n, (small ? 0.8 : 0.35) * rng.unit(), rng);
    ++r.instances;
    if (small) {
      brute::Tally b = brute::parent_vectors(d);
      auto stats = enumerate_out_branchings(d, {}, [](const OutBranching &) { return true; });
      ++r.checks;
      if (stats.count != b.count)
        fail("trial " + std::to_string(t) + ": enumeration " + std::to_string(stats.count) +
             " vs " + std::to_string(b.count));
    }
    for (Objective mode : {Objective::leaf, Objective::internal}) {
      SolveResult e = mode == Objective::leaf ? maxleaf_exact(d) : max_internal_exact(d);
      SolveResult bb = solve_branch_and_bound(d, mode);
      ++r.checks;
      if (!e.exact || !bb.exact || e.best_value != bb.best_value)
        fail("trial " + std::to_string(t) + ": " + objective_name(mode) + " enumeration " +
             std::to_string(e.best_value) + " vs branch-and-bound " +
             std::to_string(bb.best_value));
    }
  }
  r.passed = r.violations == 0;
  return r;
}

} // namespace

int main() {
  const std::uint64_t seed = 20240601;

  auto t0 = Clock::now();
  SuiteResult rules = verify_rules({1000, 9, seed});
  double secs = seconds_since(t0);
  report(1, "rule soundness", rules.passed && rules.instances >= 1000 && secs < 300,
         counts(rules) + " firings=" + metric(rules, "firings") + " time=" +
             std::to_string(secs) + "s");

  SuiteResult bounds = verify_bounds({300, 12, seed});
  report(2, "lower-bound certificates", bounds.passed && bounds.instances >= 300, counts(bounds));

  SuiteResult structure = verify_structure({300, 12, seed});
  report(3, "structural lemmas", structure.passed && structure.instances >= 300,
         counts(structure) + " hard_bipaths=" + metric(structure, "hard_bipaths"));

  SuiteResult ls = verify_local_search({1000, 40, seed});
  report(4, "iob local search", ls.passed && ls.instances >= 1000,
         counts(ls) + " covers=" + metric(ls, "covers") + " solutions=" + metric(ls, "solutions"));

  SuiteResult crown = verify_crown({2500, 9, seed});
  report(5, "crown equivalence", crown.passed && value(crown, "firings") >= 500,
         counts(crown) + " firings=" + metric(crown, "firings"));

  SuiteResult iob = verify_iob_size({3, 0, seed});
  report(6, "iob kernel size", iob.passed,
         counts(iob) + " slope_d2=" + metric(iob, "slope_d2") + " r2_d2=" + metric(iob, "r2_d2") +
             " slope_d3=" + metric(iob, "slope_d3") + " r2_d3=" + metric(iob, "r2_d3"));

  t0 = Clock::now();
  SuiteResult lob = verify_lob_size({10, 0, seed});
  secs = seconds_since(t0);
  report(7, "lob kernel size", lob.passed && metric(lob, "r2") != "n/a" && secs < 600,
         counts(lob) + " slope=" + metric(lob, "slope") + " r2=" + metric(lob, "r2") +
             " max_ratio=" + metric(lob, "max_ratio") +
             " r2_instances=" + metric(lob, "r2_instances"));

  SuiteResult counting = verify_counting({200, 400, seed});
  report(8, "counting lemmas", counting.passed, counts(counting));

  SuiteResult oracle = oracle_cross_check(seed);
  SuiteResult lib_oracle = verify_oracle({600, 0, seed});
  report(9, "oracle self-consistency", oracle.passed && lib_oracle.passed,
         counts(oracle) + "; library suite " + counts(lib_oracle));

  return failed == 0 ? 0 : 1;
}
