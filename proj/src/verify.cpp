#include "outbranch/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "outbranch/generators.hpp"
#include "outbranch/iob_kernel.hpp"
#include "outbranch/lob_analyzer.hpp"
#include "outbranch/lob_reducer.hpp"
#include "outbranch/oracle.hpp"
#include "outbranch/rng.hpp"
#include "outbranch/sparsity.hpp"

namespace outbranch {

namespace {

constexpr std::size_t kKeptFailures = 8;

// What one trial contributes; merged in trial order so reports do not depend
// on the thread schedule.
struct Tally {
  long long instances = 0;
  long long checks = 0;
  long long violations = 0;
  std::vector<std::string> failures;
  std::map<std::string, double> counters;

  void check(bool ok, const std::function<std::string()> &what) {
    ++checks;
    if (ok)
      return;
    ++violations;
    if (failures.size() < kKeptFailures)
      failures.push_back(what());
  }

  void merge(const Tally &t) {
    instances += t.instances;
    checks += t.checks;
    violations += t.violations;
    for (const auto &f : t.failures)
      if (failures.size() < kKeptFailures)
        failures.push_back(f);
    for (const auto &[key, v] : t.counters) {
      if (key.ends_with("_max"))
        counters[key] = std::max(counters[key], v);
      else
        counters[key] += v;
    }
  }
};

Tally run_trials(int trials, const std::function<void(int, Tally &)> &body) {
  std::vector<Tally> parts(trials);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    try {
      body(t, parts[t]);
    } catch (const std::exception &e) {
      parts[t].check(false, [&] { return "trial " + std::to_string(t) + ": " + e.what(); });
    }
  }
  Tally all;
  for (const Tally &p : parts)
    all.merge(p);
  return all;
}

SuiteResult finish(const std::string &name, Tally &&t) {
  SuiteResult r;
  r.name = name;
  r.instances = t.instances;
  r.checks = t.checks;
  r.violations = t.violations;
  r.failures = std::move(t.failures);
  r.metrics = std::move(t.counters);
  r.passed = r.violations == 0 && r.checks > 0;
  return r;
}

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

std::string tag(int t, const RootedDigraph &d) {
  return "trial " + std::to_string(t) + " (n=" + std::to_string(d.size()) +
         ", m=" + std::to_string(d.arc_count()) + ")";
}

int exact_value(const RootedDigraph &d, Objective mode) {
  SolveResult r = solve_branch_and_bound(d, mode);
  if (!r.exact)
    throw std::runtime_error("oracle timed out");
  return r.best_value;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Small planar digraphs: triangulation-based on even trials, subdivided
// skeletons (rich in bipaths) on odd ones.
RootedDigraph small_planar(Rng &rng, int t, VertexId max_n) {
  max_n = std::max<VertexId>(max_n, 4);
  if (t % 2 == 0) {
    PlanarParams p;
    p.n = static_cast<VertexId>(rng.uniform(4, max_n));
    p.keep_prob = 0.4 + 0.6 * rng.unit();
    p.bidirect_prob = 0.2 + 0.7 * rng.unit();
    return gen_planar(p, rng);
  }
  while (true) {
    SubdividedParams p;
    p.skeleton = static_cast<VertexId>(rng.uniform(2, std::min<VertexId>(6, max_n)));
    p.cycles = static_cast<VertexId>(rng.uniform(0, 3));
    p.max_subdivision = static_cast<VertexId>(rng.uniform(1, 3));
    RootedDigraph d = gen_subdivided_planar(p, rng);
    if (d.size() <= max_n)
      return d;
  }
}

RootedDigraph reduced_planar(std::uint64_t seed, int t, VertexId max_n) {
  Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
  RootedDigraph d = small_planar(rng, t, max_n);
  return reduce_to_fixpoint({d, d.size()}).outcome.graph;
}

} // namespace

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << name << ": " << (passed ? "PASS" : "FAIL") << " instances=" << instances
     << " checks=" << checks << " violations=" << violations;
  for (const auto &[key, v] : metrics)
    os << ' ' << key << '=' << v;
  return os.str();
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  LinearFit f;
  const std::size_t n = std::min(x.size(), y.size());
  if (n == 0)
    return f;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  f.slope = sxx > 0 ? sxy / sxx : 0;
  f.intercept = my - f.slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = y[i] - (f.slope * x[i] + f.intercept);
    sse += e * e;
  }
  f.r2 = syy > 0 ? 1 - sse / syy : (sse == 0 ? 1 : 0);
  return f;
}

SuiteResult verify_rules(const SuiteOptions &o) {
  const int trials = pick(o.trials, 1000);
  const VertexId max_n = static_cast<VertexId>(pick(o.max_n, 9));
  Tally all = run_trials(trials, [&](int t, Tally &tally) {
    Rng rng = Rng::for_trial(o.seed, static_cast<std::uint64_t>(t));
    RootedDigraph d;
    if (t % 3 == 0) {
      auto n = static_cast<VertexId>(rng.uniform(2, std::max<VertexId>(2, max_n)));
      d = gen_random(n, 0.05 + 0.45 * rng.unit(), rng);
    } else {
      d = small_planar(rng, t, max_n);
    }
    ++tally.instances;
    LobInstance cur{d, d.size()};
    int before = exact_value(cur.graph, Objective::leaf);
    while (auto m = find_rule(cur)) {
      if (m->rule == 1) {
        tally.check(false, [&] { return tag(t, d) + ": rule 1 fired on a connected input"; });
        break;
      }
      RuleResult next = apply_rule(cur, *m);
      int after = exact_value(next.instance.graph, Objective::leaf);
      tally.counters["firings"] += 1;
      tally.counters["rule" + std::to_string(m->rule)] += 1;
      tally.check(before == after, [&] {
        return tag(t, d) + ": " + format_application(*m) + " changed maxleaf " +
               std::to_string(before) + " -> " + std::to_string(after);
      });
      before = after;
      cur = std::move(next.instance);
    }
  });
  return finish("rules", std::move(all));
}

SuiteResult verify_bounds(const SuiteOptions &o) {
  const int trials = pick(o.trials, 300);
  const VertexId max_n = static_cast<VertexId>(pick(o.max_n, 12));
  Tally all = run_trials(trials, [&](int t, Tally &tally) {
    RootedDigraph g = reduced_planar(o.seed, t, max_n);
    ++tally.instances;
    LobAnalysis a = analyze(g);
    int ml = exact_value(g, Objective::leaf);
    int sp = static_cast<int>(a.special.size()), iso = static_cast<int>(a.isolated.size());
    int sl = a.classes.slave_count;
    tally.counters["special_max"] = std::max(tally.counters["special_max"], double(sp));
    tally.counters["isolated_max"] = std::max(tally.counters["isolated_max"], double(iso));
    tally.counters["slaves_total"] += sl;
    auto where = [&] { return tag(t, g) + ": maxleaf " + std::to_string(ml); };
    tally.check(ml >= ceil_div(sp, 60), [&] { return where() + " < ceil(special/60)"; });
    tally.check(ml >= ceil_div(iso, 180), [&] { return where() + " < ceil(isolated/180)"; });
    tally.check(ml >= sl, [&] { return where() + " < slaves " + std::to_string(sl); });
    LobCertificate c = certificate(ml + 1, a);
    tally.check(!c.yes, [&] { return where() + ": certificate claims k=maxleaf+1 (" + c.reason + ")"; });
  });
  return finish("bounds", std::move(all));
}

SuiteResult verify_structure(const SuiteOptions &o) {
  const int trials = pick(o.trials, 300);
  const VertexId max_n = static_cast<VertexId>(pick(o.max_n, 12));
  Tally all = run_trials(trials, [&](int t, Tally &tally) {
    RootedDigraph g = reduced_planar(o.seed, t, max_n);
    ++tally.instances;
    LobAnalysis a = analyze(g);
    auto defects = structural_defects(a);
    tally.check(defects.empty(), [&] { return tag(t, g) + ": " + defects.front(); });
    tally.counters["hard_bipaths"] += static_cast<double>(a.classes.bipaths.size());
    if (g.size() > 1)
      tally.counters["nontrivial"] += 1;
  });
  return finish("structure", std::move(all));
}

SuiteResult verify_local_search(const SuiteOptions &o) {
  const int trials = pick(o.trials, 1000);
  const VertexId max_n = static_cast<VertexId>(pick(o.max_n, 40));
  Tally all = run_trials(trials, [&](int t, Tally &tally) {
    Rng rng = Rng::for_trial(o.seed, static_cast<std::uint64_t>(t));
    auto n = static_cast<VertexId>(rng.uniform(1, std::max<VertexId>(1, max_n)));
    RootedDigraph d;
    switch (t % 3) {
    case 0:
      d = gen_random(n, std::min(1.0, 3.0 / n) * rng.unit(), rng);
      break;
    case 1:
      d = gen_planar({std::max<VertexId>(n, 3), rng.unit(), rng.unit()}, rng);
      break;
    default: {
      auto core = static_cast<VertexId>(std::max<VertexId>(1, n / 3));
      d = gen_degenerate({core, n - core, static_cast<int>(rng.uniform(1, 3)), 3, 0.3}, rng);
    }
    }
    int k = static_cast<int>(rng.uniform(0, d.size()));
    ++tally.instances;
    VcOrSolution r = vc_or_solution({d, k});
    if (r.solution) {
      tally.counters["solutions"] += 1;
      std::string defect = branching_defect(d, *r.solution);
      tally.check(defect.empty(), [&] { return tag(t, d) + ": " + defect; });
      tally.check(r.solution->internal_count() >= k,
                  [&] { return tag(t, d) + ": solution below k"; });
    } else {
      tally.counters["covers"] += 1;
      tally.check(is_vertex_cover(d, r.cover), [&] { return tag(t, d) + ": not a cover"; });
      tally.check(static_cast<long long>(r.cover.size()) <= 2LL * k - 1, [&] {
        return tag(t, d) + ": cover of size " + std::to_string(r.cover.size()) + " for k=" +
               std::to_string(k);
      });
      tally.check(std::binary_search(r.cover.begin(), r.cover.end(), d.root()),
                  [&] { return tag(t, d) + ": root missing from cover"; });
    }
  });
  return finish("local-search", std::move(all));
}

SuiteResult verify_crown(const SuiteOptions &o) {
  const int trials = pick(o.trials, 2500);
  const VertexId max_n = static_cast<VertexId>(std::min(pick(o.max_n, 9), 9));
  Tally all = run_trials(trials, [&](int t, Tally &tally) {
    Rng rng = Rng::for_trial(o.seed, static_cast<std::uint64_t>(t));
    auto core = static_cast<VertexId>(rng.uniform(1, 3));
    auto pend = static_cast<VertexId>(rng.uniform(1, std::max<VertexId>(1, max_n - core)));
    RootedDigraph d = gen_degenerate(
        {core, pend, static_cast<int>(rng.uniform(1, 3)), static_cast<int>(rng.uniform(1, 3)),
         0.6 * rng.unit()},
        rng);
    int k = static_cast<int>(rng.uniform(1, d.size()));
    ++tally.instances;
    IobInstance cur{d, k};
    const int tau = default_threshold(d);
    while (is_connected(cur.graph)) {
      IobRound round = iob_round(cur, tau);
      if (round.kind != IobRound::Kind::crown)
        break;
      auto defects = crown_defects(round.aux, round.crown);
      tally.check(defects.empty(), [&] { return tag(t, d) + ": " + defects.front(); });
      const RootedDigraph &next = round.removal->instance.graph;
      Equivalence e = check_equivalence(cur.graph, next, k, Objective::internal);
      tally.counters["firings"] += 1;
      tally.check(e == Equivalence::equivalent, [&] {
        return tag(t, d) + ": crown removal for k=" + std::to_string(k) + " is " +
               equivalence_name(e);
      });
      cur = round.removal->instance;
    }
  });
  return finish("crown", std::move(all));
}

std::vector<IobSizeRow> iob_size_rows(int degeneracy, int k_lo, int k_hi, int k_step, int reps,
                                      std::uint64_t seed) {
  std::vector<std::pair<int, int>> jobs;
  for (int k = k_lo; k <= k_hi; k += std::max(k_step, 1))
    for (int rep = 0; rep < reps; ++rep)
      jobs.push_back({k, rep});
  std::vector<IobSizeRow> rows(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [k, rep] = jobs[i];
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(degeneracy * 1'000'000 + k * 1000 + rep));
    DegenerateParams p;
    p.core = static_cast<VertexId>(std::max(2, 2 * k / 3));
    p.pendants = static_cast<VertexId>(20 * k);
    p.degeneracy = degeneracy;
    p.pool = std::max(1, k);
    p.back_prob = 0.2;
    RootedDigraph d = gen_degenerate(p, rng);
    auto t0 = std::chrono::steady_clock::now();
    IobKernelResult r = kernelize_iob({d, k});
    IobSizeRow &row = rows[i];
    row.millis = millis_since(t0);
    row.degeneracy = degeneracy;
    row.k = k;
    row.rep = rep;
    row.n = d.size();
    row.arcs = d.arc_count();
    row.verdict = r.outcome.verdict;
    row.reduced = r.outcome.verdict == Verdict::reduced ? r.outcome.graph.size() : d.size();
    row.cover = r.report.cover;
    row.small = r.report.small;
    row.big = r.report.big;
    row.crowns = r.trace.steps.size();
    if (r.outcome.verdict == Verdict::reduced) {
      row.cover_ok = r.report.cover_within_bound;
      row.classes_ok = std::all_of(r.report.classes.begin(), r.report.classes.end(),
                                   [](const IobClassRecord &c) { return c.within_bound; });
      row.heavy_ok = r.report.heavy_sum <= r.report.heavy_bound;
    }
  }
  return rows;
}

SuiteResult verify_iob_size(const SuiteOptions &o) {
  const int reps = pick(o.trials, 3);
  Tally all;
  for (int d : {2, 3}) {
    auto rows = iob_size_rows(d, 4, 40, 4, reps, o.seed);
    std::vector<double> xs, ys;
    for (const IobSizeRow &row : rows) {
      ++all.instances;
      if (row.verdict != Verdict::reduced)
        continue;
      std::string where = "d=" + std::to_string(d) + " k=" + std::to_string(row.k) +
                          " rep=" + std::to_string(row.rep);
      all.check(row.cover_ok, [&] { return where + ": |U| = " + std::to_string(row.cover); });
      all.check(row.classes_ok, [&] { return where + ": class above 2(|N|^2+|N|)"; });
      all.check(row.heavy_ok, [&] { return where + ": heavy degree sum above tau|U|"; });
      xs.push_back(row.k);
      ys.push_back(row.reduced);
    }
    LinearFit f = fit_line(xs, ys);
    std::string s = "_d" + std::to_string(d);
    all.counters["slope" + s] = f.slope;
    all.counters["intercept" + s] = f.intercept;
    all.counters["r2" + s] = f.r2;
    all.counters["reduced_rows" + s] = static_cast<double>(xs.size());
    all.check(xs.size() * 2 >= rows.size(),
              [&] { return "d=" + std::to_string(d) + ": fewer than half the rows were reduced"; });
    all.check(f.r2 >= 0.9, [&] {
      return "d=" + std::to_string(d) + ": linear fit R^2 " + std::to_string(f.r2);
    });
  }
  return finish("iob-size", std::move(all));
}

std::vector<LobSizeRow> lob_size_rows(int k_lo, int k_hi, int reps, std::uint64_t seed,
                                      bool with_oracle) {
  std::vector<std::pair<int, int>> jobs;
  for (int k = k_lo; k <= k_hi; ++k)
    for (int rep = 0; rep < reps; ++rep)
      jobs.push_back({k, rep});
  std::vector<LobSizeRow> rows(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [k, rep] = jobs[i];
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(k * 1000 + rep));
    SubdividedParams p;
    p.skeleton = static_cast<VertexId>(k + 2);
    p.cycles = static_cast<VertexId>(k / 2);
    p.max_subdivision = 20;
    RootedDigraph d = gen_subdivided_planar(p, rng);
    auto t0 = std::chrono::steady_clock::now();
    LobReduction red = reduce_to_fixpoint({d, k});
    LobSizeRow &row = rows[i];
    row.millis = millis_since(t0);
    row.k = k;
    row.rep = rep;
    row.n = d.size();
    row.arcs = d.arc_count();
    row.verdict = red.outcome.verdict;
    row.reduced = red.outcome.graph.size();
    if (with_oracle && red.outcome.verdict == Verdict::reduced) {
      SolveResult s = solve_branch_and_bound(red.outcome.graph, Objective::leaf);
      row.maxleaf = s.best_value;
      row.exact = s.exact;
    }
  }
  return rows;
}

SuiteResult verify_lob_size(const SuiteOptions &o) {
  const int reps = pick(o.trials, 10);
  const int k_lo = 2, k_hi = 10;
  auto rows = lob_size_rows(k_lo, k_hi, reps, o.seed);
  Tally all;
  std::vector<double> xs, ys;
  std::vector<double> sum_x(k_hi + 1, 0), sum_y(k_hi + 1, 0), cnt(k_hi + 1, 0);
  double worst = 0;
  for (const LobSizeRow &row : rows) {
    ++all.instances;
    std::string where = "k=" + std::to_string(row.k) + " rep=" + std::to_string(row.rep);
    all.check(row.n <= 400, [&] { return where + ": input above 400 vertices"; });
    all.check(row.verdict == Verdict::reduced && row.exact,
              [&] { return where + ": no exact oracle value"; });
    double x = std::max(1, row.maxleaf);
    xs.push_back(x);
    ys.push_back(row.reduced);
    sum_x[row.k] += x;
    sum_y[row.k] += row.reduced;
    cnt[row.k] += 1;
    worst = std::max(worst, row.reduced / x);
  }
  // One point per k: mean reduced size against mean maxleaf.
  std::vector<double> mx, my;
  for (int k = k_lo; k <= k_hi; ++k)
    if (cnt[k] > 0) {
      mx.push_back(sum_x[k] / cnt[k]);
      my.push_back(sum_y[k] / cnt[k]);
    }
  LinearFit f = fit_line(mx, my);
  LinearFit per_instance = fit_line(xs, ys);
  all.counters["slope"] = f.slope;
  all.counters["intercept"] = f.intercept;
  all.counters["r2"] = f.r2;
  all.counters["r2_instances"] = per_instance.r2;
  all.counters["max_ratio"] = worst;
  all.check(f.r2 >= 0.9, [&] { return "linear fit R^2 " + std::to_string(f.r2) + " < 0.9"; });
  return finish("lob-size", std::move(all));
}

SuiteResult verify_counting(const SuiteOptions &o) {
  const int trials = pick(o.trials, 200);
  const VertexId max_n = static_cast<VertexId>(pick(o.max_n, 400));
  constexpr int p = 3;
  Tally all = run_trials(trials, [&](int t, Tally &tally) {
    Rng rng = Rng::for_trial(o.seed, static_cast<std::uint64_t>(t));
    auto n = static_cast<VertexId>(rng.uniform(20, std::max<VertexId>(20, max_n)));
    RootedDigraph d = gen_planar({n, 0.5 + 0.5 * rng.unit(), rng.unit()}, rng);
    UndirectedGraph g = underlying_graph(d);
    ++tally.instances;

    std::vector<std::vector<VertexId>> modulators;
    std::vector<VertexId> all_v(n);
    for (VertexId v = 0; v < n; ++v)
      all_v[v] = v;
    rng.shuffle(all_v);
    auto size = static_cast<std::size_t>(rng.uniform(1, std::max<VertexId>(1, n / 4)));
    modulators.emplace_back(all_v.begin(), all_v.begin() + static_cast<std::ptrdiff_t>(size));
    modulators.push_back(vc_or_solution({d, n}).cover);

    for (const auto &X : modulators) {
      std::vector<int> pos(n, -1);
      for (std::size_t i = 0; i < X.size(); ++i)
        pos[X[i]] = static_cast<int>(i);
      std::vector<std::vector<VertexId>> yn;
      for (VertexId v = 0; v < n; ++v) {
        if (pos[v] >= 0)
          continue;
        std::vector<VertexId> list;
        for (VertexId w : g.adj[v])
          if (pos[w] >= 0)
            list.push_back(pos[w]);
        yn.push_back(std::move(list));
      }
      int dg = bipartite_degeneracy(X.size(), yn);
      HeavyDegreeSum h = heavy_degree_sum(X.size(), yn, dg);
      tally.check(h.holds(), [&] {
        return tag(t, d) + ": heavy degree sum " + std::to_string(h.sum) + " > " +
               std::to_string(h.bound);
      });
      NeighborhoodClassing c = classify_by_modulator(g, X, p);
      tally.check(c.heavy_bound_holds(), [&] {
        return tag(t, d) + ": " + std::to_string(c.heavy.size()) + " heavy vertices";
      });
      tally.check(c.class_bound_holds(), [&] {
        return tag(t, d) + ": " + std::to_string(c.classes.size()) + " classes";
      });
      tally.counters["bipartite_degeneracy_max"] =
          std::max(tally.counters["bipartite_degeneracy_max"], double(dg));
    }
  });
  return finish("counting", std::move(all));
}

SuiteResult verify_oracle(const SuiteOptions &o) {
  const int trials = pick(o.trials, 600);
  Tally all = run_trials(trials, [&](int t, Tally &tally) {
    Rng rng = Rng::for_trial(o.seed, static_cast<std::uint64_t>(t));
    bool small = t % 2 == 0;
    auto n = static_cast<VertexId>(rng.uniform(1, small ? 7 : 9));
    RootedDigraph d = gen_random(n, (small ? 0.7 : 0.35) * rng.unit(), rng);
    ++tally.instances;
    EnumerationBudget budget;
    SolveResult leaf = maxleaf_exact(d, budget), internal = max_internal_exact(d, budget);
    tally.check(leaf.exact && internal.exact, [&] { return tag(t, d) + ": enumeration incomplete"; });
    if (small) {
      ParentVectorTally pv = parent_vector_tally(d);
      auto stats = enumerate_out_branchings(d, budget, [](const OutBranching &) { return true; });
      tally.check(stats.count == pv.count, [&] {
        return tag(t, d) + ": enumeration " + std::to_string(stats.count) + " vs parent vectors " +
               std::to_string(pv.count);
      });
      tally.check(leaf.best_value == pv.max_leaves && internal.best_value == pv.max_internal,
                  [&] { return tag(t, d) + ": optimum differs from parent vectors"; });
      tally.counters["branchings"] += static_cast<double>(pv.count);
    }
    for (Objective mode : {Objective::leaf, Objective::internal}) {
      int expect = mode == Objective::leaf ? leaf.best_value : internal.best_value;
      SolveResult bb = solve_branch_and_bound(d, mode);
      tally.check(bb.exact && bb.best_value == expect, [&] {
        return tag(t, d) + ": branch-and-bound " + objective_name(mode) + " " +
               std::to_string(bb.best_value) + " vs " + std::to_string(expect);
      });
      tally.check(branching_defect(d, bb.witness).empty() &&
                      objective_value(bb.witness, mode) == bb.best_value,
                  [&] { return tag(t, d) + ": bad branch-and-bound witness"; });
    }
  });
  return finish("oracle", std::move(all));
}

SuiteResult verify_pipeline(const SuiteOptions &o) {
  const int trials = pick(o.trials, 200);
  const VertexId max_n = static_cast<VertexId>(pick(o.max_n, 10));
  Tally all = run_trials(trials, [&](int t, Tally &tally) {
    Rng rng = Rng::for_trial(o.seed, static_cast<std::uint64_t>(t));
    auto n = static_cast<VertexId>(rng.uniform(1, std::max<VertexId>(1, max_n)));
    RootedDigraph d = t % 2 ? gen_random(n, 0.4 * rng.unit(), rng)
                            : gen_degenerate({std::max<VertexId>(1, n / 3), n - std::max<VertexId>(1, n / 3),
                                              2, 2, 0.3},
                                             rng);
    int k = static_cast<int>(rng.uniform(1, d.size()));
    ++tally.instances;

    int ml = exact_value(d, Objective::leaf);
    LobReduction red = reduce_to_fixpoint({d, k});
    bool lob_yes = red.outcome.verdict == Verdict::reduced
                       ? exact_value(red.outcome.graph, Objective::leaf) >= k
                       : red.outcome.verdict == Verdict::yes;
    tally.check(lob_yes == (ml >= k), [&] { return tag(t, d) + ": lob answer changed"; });

    int mi = exact_value(d, Objective::internal);
    IobKernelResult ker = kernelize_iob({d, k});
    bool iob_yes = ker.outcome.verdict == Verdict::reduced
                       ? exact_value(ker.outcome.graph, Objective::internal) >= k
                       : ker.outcome.verdict == Verdict::yes;
    tally.check(iob_yes == (mi >= k), [&] { return tag(t, d) + ": iob answer changed"; });
    if (ker.outcome.witness)
      tally.check(branching_defect(d, *ker.outcome.witness).empty() &&
                      ker.outcome.witness->internal_count() >= k,
                  [&] { return tag(t, d) + ": bad iob witness"; });
  });
  return finish("pipeline", std::move(all));
}

std::vector<std::string> suite_names() {
  return {"rules",    "bounds",   "structure", "local-search", "crown",
          "iob-size", "lob-size", "counting",  "oracle",       "pipeline"};
}

SuiteResult run_suite(const std::string &name, const SuiteOptions &o) {
  if (name == "rules")
    return verify_rules(o);
  if (name == "bounds")
    return verify_bounds(o);
  if (name == "structure")
    return verify_structure(o);
  if (name == "local-search")
    return verify_local_search(o);
  if (name == "crown")
    return verify_crown(o);
  if (name == "iob-size")
    return verify_iob_size(o);
  if (name == "lob-size")
    return verify_lob_size(o);
  if (name == "counting")
    return verify_counting(o);
  if (name == "oracle")
    return verify_oracle(o);
  if (name == "pipeline")
    return verify_pipeline(o);
  throw InputError("unknown suite '" + name + "'");
}

} // namespace outbranch
