#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "outbranch/generators.hpp"
#include "outbranch/instance_io.hpp"
#include "outbranch/iob_kernel.hpp"
#include "outbranch/lob_analyzer.hpp"
#include "outbranch/lob_reducer.hpp"
#include "outbranch/oracle.hpp"
#include "outbranch/verify.hpp"

using namespace outbranch;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitYes = 10;
constexpr int kExitNo = 20;

using Clock = std::chrono::steady_clock;

int exit_code(Verdict v) {
  switch (v) {
  case Verdict::yes:
    return kExitYes;
  case Verdict::no:
    return kExitNo;
  case Verdict::reduced:
    return kExitOk;
  }
  return kExitError;
}

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> lines_of(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    out.push_back(line);
  return out;
}

json graph_stats(const RootedDigraph &d) {
  return {{"n", d.size()}, {"m", d.arc_count()}, {"root", d.root()}};
}

json parents(const OutBranching &t) {
  json a = json::array();
  for (VertexId p : t.parent)
    a.push_back(p);
  return a;
}

std::string parent_line(const OutBranching &t) {
  std::string s;
  for (VertexId p : t.parent)
    s += ' ' + std::to_string(p);
  return s;
}

// Skeleton shared by every command so the JSON keys stay the same.
json base_report(const std::string &command, const InstanceFile &f) {
  json r;
  r["command"] = command;
  r["problem"] = problem_name(f.problem);
  r["input"] = graph_stats(f.graph);
  r["input"]["k"] = f.k;
  r["warnings"] = f.warnings;
  r["outcome"] = nullptr;
  r["trace"] = json::array();
  r["certificate"] = nullptr;
  r["iob"] = nullptr;
  r["witness"] = nullptr;
  r["mapping"] = nullptr;
  r["instance"] = nullptr;
  r["timing_ms"] = 0.0;
  return r;
}

void print_warnings(const InstanceFile &f) {
  for (const std::string &w : f.warnings)
    std::cerr << "warning: " << w << '\n';
}

struct ReduceArgs {
  std::string file;
  std::optional<double> accept_constant;
  std::optional<int> k;
  bool json = false;
  std::string dot;
  std::string out;
  std::string trace;
  int solve_max_n = 12;
};

int cmd_reduce(const ReduceArgs &a) {
  InstanceFile f = load_instance(a.file);
  print_warnings(f);
  if (a.k)
    f.k = *a.k;
  auto t0 = Clock::now();
  LobReduction red = reduce_to_fixpoint({f.graph, f.k});
  KernelOutcome out = red.outcome;
  json report = base_report("reduce", f);
  std::optional<LobAnalysis> analysis;
  if (out.verdict == Verdict::reduced) {
    analysis = analyze(out.graph);
    LobCertificate c = certificate(f.k, *analysis, a.accept_constant);
    report["certificate"] = {{"special", c.special},
                             {"isolated", c.isolated},
                             {"slaves", c.slaves},
                             {"cut_vertices", c.cut_vertices},
                             {"special_bound", c.special_bound},
                             {"isolated_bound", c.isolated_bound},
                             {"yes", c.yes},
                             {"reason", c.reason}};
    if (c.yes) {
      out.verdict = Verdict::yes;
      out.reason = "certificate: " + c.reason;
    } else if (out.graph.size() <= a.solve_max_n) {
      BranchAndBoundOptions o;
      o.target = f.k;
      SolveResult s = solve_branch_and_bound(out.graph, Objective::leaf, o);
      if (s.best_value >= f.k) {
        out.verdict = Verdict::yes;
        out.reason = "reduced instance has a branching with " + std::to_string(s.best_value) +
                     " leaves";
      } else if (s.exact) {
        out.verdict = Verdict::no;
        out.reason = "reduced instance has maxleaf " + std::to_string(s.best_value);
      }
    }
  }
  double ms = millis_since(t0);

  InstanceFile reduced{Problem::lob, out.graph, f.k, {}, {}};
  std::string trace_text = red.trace.to_text();
  report["outcome"] = {{"verdict", verdict_name(out.verdict)}, {"reason", out.reason}};
  report["outcome"].update(graph_stats(out.graph));
  report["trace"] = lines_of(trace_text);
  report["mapping"] = red.original_to_current;
  report["instance"] = instance_to_string(reduced);
  report["timing_ms"] = ms;
  if (analysis) {
    SizeReport size = size_report(*analysis);
    report["size"] = {{"vertices", size.vertices},
                      {"contracted_vertices", size.contracted_vertices},
                      {"easy", size.easy},
                      {"hard", size.hard},
                      {"bipaths", size.bipaths.size()},
                      {"bound_violations", size.bound_violations}};
  }

  if (!a.out.empty())
    save_instance(a.out, reduced);
  if (!a.trace.empty())
    write_text(a.trace, trace_text);
  if (!a.dot.empty())
    write_text(a.dot, to_dot(out.graph, analysis ? &*analysis : nullptr));

  if (a.json) {
    std::cout << report.dump(2) << '\n';
  } else {
    reduced.comments = {"verdict " + std::string(verdict_name(out.verdict)),
                        "reason " + out.reason,
                        "input n=" + std::to_string(f.graph.size()) +
                            " m=" + std::to_string(f.graph.arc_count()) +
                            " steps=" + std::to_string(red.trace.steps.size())};
    for (const std::string &line : lines_of(trace_text))
      reduced.comments.push_back(line);
    write_instance(std::cout, reduced);
  }
  return exit_code(out.verdict);
}

struct KernelizeArgs {
  std::string file;
  std::optional<int> threshold;
  std::optional<int> k;
  bool json = false;
  std::string out;
  std::string trace;
  std::string dot;
};

int cmd_kernelize(const KernelizeArgs &a) {
  InstanceFile f = load_instance(a.file);
  print_warnings(f);
  if (a.k)
    f.k = *a.k;
  auto t0 = Clock::now();
  IobKernelResult r = kernelize_iob({f.graph, f.k}, a.threshold);
  double ms = millis_since(t0);
  const KernelOutcome &out = r.outcome;

  json report = base_report("kernelize", f);
  report["outcome"] = {{"verdict", verdict_name(out.verdict)}, {"reason", out.reason}};
  report["outcome"].update(graph_stats(out.graph));
  std::string trace_text = r.trace.to_text();
  report["trace"] = lines_of(trace_text);
  json classes = json::array();
  for (const IobClassRecord &c : r.report.classes)
    classes.push_back({{"neighbourhood", c.neighbourhood},
                       {"members", c.members},
                       {"head_side", c.head_side},
                       {"within_bound", c.within_bound}});
  report["iob"] = {{"threshold", r.report.threshold},
                   {"cover", r.report.cover},
                   {"small", r.report.small},
                   {"big", r.report.big},
                   {"classes", classes},
                   {"heavy_sum", r.report.heavy_sum},
                   {"heavy_bound", r.report.heavy_bound},
                   {"cover_within_bound", r.report.cover_within_bound},
                   {"rounds", r.report.rounds}};
  if (out.witness)
    report["witness"] = parents(*out.witness);
  report["mapping"] = r.current_to_original;
  InstanceFile reduced{Problem::iob, out.graph, f.k, {}, {}};
  report["instance"] = instance_to_string(reduced);
  report["timing_ms"] = ms;

  if (!a.out.empty())
    save_instance(a.out, reduced);
  if (!a.trace.empty())
    write_text(a.trace, trace_text);
  if (!a.dot.empty())
    write_text(a.dot, to_dot(out.graph));

  if (a.json) {
    std::cout << report.dump(2) << '\n';
  } else {
    reduced.comments = {"verdict " + std::string(verdict_name(out.verdict)),
                        "reason " + out.reason,
                        "cover " + std::to_string(r.report.cover) + " small " +
                            std::to_string(r.report.small) + " big " +
                            std::to_string(r.report.big) + " crowns " +
                            std::to_string(r.trace.steps.size())};
    if (out.witness)
      reduced.comments.push_back("witness parent" + parent_line(*out.witness));
    for (const std::string &line : lines_of(trace_text))
      reduced.comments.push_back(line);
    std::string map = "map";
    for (VertexId v : r.current_to_original)
      map += ' ' + std::to_string(v);
    reduced.comments.push_back(map);
    write_instance(std::cout, reduced);
  }
  return exit_code(out.verdict);
}

struct SolveArgs {
  std::string file;
  std::string mode = "auto";
  double budget = 60;
  bool json = false;
};

int cmd_solve(const SolveArgs &a) {
  InstanceFile f = load_instance(a.file);
  print_warnings(f);
  Objective mode;
  if (a.mode == "leaf")
    mode = Objective::leaf;
  else if (a.mode == "internal")
    mode = Objective::internal;
  else
    mode = f.problem == Problem::lob ? Objective::leaf : Objective::internal;
  json report = base_report("solve", f);
  report["mode"] = objective_name(mode);
  if (!is_connected(f.graph)) {
    report["outcome"] = {{"verdict", "NO"}, {"reason", "some vertex is unreachable"}};
    if (a.json)
      std::cout << report.dump(2) << '\n';
    else
      std::cout << "no out-branching: some vertex is unreachable from the root\n";
    return kExitNo;
  }
  auto t0 = Clock::now();
  BranchAndBoundOptions o;
  o.timeout = std::chrono::milliseconds(static_cast<long long>(a.budget * 1000));
  SolveResult s = solve_branch_and_bound(f.graph, mode, o);
  report["timing_ms"] = millis_since(t0);
  report["outcome"] = {{"value", s.best_value}, {"exact", s.exact}};
  report["witness"] = parents(s.witness);
  if (a.json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << objective_name(mode) << ' ' << s.best_value << (s.exact ? "" : " (budget hit)")
              << '\n'
              << "parent" << parent_line(s.witness) << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  int trials = 0;
  int max_n = 0;
  std::optional<std::uint64_t> seed;
  std::string suite = "all";
  bool json = false;
};

int cmd_verify(const VerifyArgs &a) {
  SuiteOptions o{a.trials, static_cast<VertexId>(a.max_n), resolve_seed(a.seed)};
  std::vector<std::string> names;
  if (a.suite == "all")
    names = suite_names();
  else
    names = {a.suite};
  bool ok = true;
  json all = json::array();
  for (const std::string &name : names) {
    auto t0 = Clock::now();
    SuiteResult r = run_suite(name, o);
    double ms = millis_since(t0);
    ok = ok && r.passed;
    if (a.json) {
      all.push_back({{"suite", r.name},
                     {"passed", r.passed},
                     {"instances", r.instances},
                     {"checks", r.checks},
                     {"violations", r.violations},
                     {"failures", r.failures},
                     {"metrics", r.metrics},
                     {"seed", o.seed},
                     {"timing_ms", ms}});
    } else {
      std::cout << r.summary() << '\n';
      for (const std::string &failure : r.failures)
        std::cout << "  " << failure << '\n';
    }
  }
  if (a.json)
    std::cout << all.dump(2) << '\n';
  return ok ? kExitOk : kExitError;
}

struct GenArgs {
  std::string family;
  std::string problem = "lob";
  int n = 20;
  int k = 3;
  std::optional<std::uint64_t> seed;
  std::string out;
  double arc_prob = 0.2;
  double keep = 1.0;
  double bidirect = 0.5;
  int core = 8;
  int pendants = 40;
  int degeneracy = 2;
  int pool = 4;
  double back = 0.3;
  int cycles = 2;
  int max_subdivision = 6;
};

int cmd_gen(const GenArgs &a) {
  std::uint64_t seed = resolve_seed(a.seed);
  Rng rng(seed);
  RootedDigraph d;
  std::string params;
  if (a.n < 1)
    throw InputError("--n must be positive");
  const auto n = static_cast<VertexId>(a.n);
  if (a.family == "path") {
    d = gen_path(n);
    params = "n=" + std::to_string(a.n);
  } else if (a.family == "star") {
    d = gen_star(n);
    params = "leaves=" + std::to_string(a.n);
  } else if (a.family == "bipath-chain") {
    d = gen_bipath_chain(n);
    params = "length=" + std::to_string(a.n);
  } else if (a.family == "planar") {
    d = gen_planar({n, a.keep, a.bidirect}, rng);
    params = "n=" + std::to_string(a.n) + " keep=" + std::to_string(a.keep) +
             " bidirect=" + std::to_string(a.bidirect);
  } else if (a.family == "subdivided") {
    d = gen_subdivided_planar({n, static_cast<VertexId>(a.cycles),
                               static_cast<VertexId>(a.max_subdivision)},
                              rng);
    params = "skeleton=" + std::to_string(a.n) + " cycles=" + std::to_string(a.cycles) +
             " max_subdivision=" + std::to_string(a.max_subdivision);
  } else if (a.family == "degenerate") {
    d = gen_degenerate({static_cast<VertexId>(a.core), static_cast<VertexId>(a.pendants),
                        a.degeneracy, a.pool, a.back},
                       rng);
    params = "core=" + std::to_string(a.core) + " pendants=" + std::to_string(a.pendants) +
             " degeneracy=" + std::to_string(a.degeneracy) + " pool=" + std::to_string(a.pool) +
             " back=" + std::to_string(a.back);
  } else if (a.family == "random") {
    d = gen_random(n, a.arc_prob, rng);
    params = "n=" + std::to_string(a.n) + " arc_prob=" + std::to_string(a.arc_prob);
  } else {
    throw InputError("unknown family '" + a.family + "'");
  }
  InstanceFile f;
  f.problem = a.problem == "iob" ? Problem::iob : Problem::lob;
  f.graph = std::move(d);
  f.k = a.k;
  f.comments = {"gen " + a.family + " seed=" + std::to_string(seed) + " " + params};
  if (a.out.empty())
    write_instance(std::cout, f);
  else
    save_instance(a.out, f);
  return kExitOk;
}

struct BenchArgs {
  std::string family = "planar";
  std::string k_range = "2:10";
  int reps = 3;
  std::optional<std::uint64_t> seed;
  std::string out;
  int degeneracy = 2;
  bool oracle = true;
};

void parse_range(const std::string &s, int &lo, int &hi, int &step) {
  step = 1;
  int parts[3] = {0, 0, 1};
  int count = 0;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ':')) {
    if (count == 3)
      throw InputError("--k-range expects lo:hi[:step]");
    try {
      std::size_t used = 0;
      parts[count] = std::stoi(tok, &used);
      if (used != tok.size())
        throw InputError("");
    } catch (const std::exception &) {
      throw InputError("bad --k-range '" + s + "'");
    }
    ++count;
  }
  if (count < 2 || parts[0] > parts[1] || parts[2] < 1)
    throw InputError("--k-range expects lo:hi[:step] with lo <= hi");
  lo = parts[0];
  hi = parts[1];
  step = parts[2];
}

int cmd_bench(const BenchArgs &a) {
  int lo, hi, step;
  parse_range(a.k_range, lo, hi, step);
  std::uint64_t seed = resolve_seed(a.seed);
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file)
      throw InputError("cannot write '" + a.out + "'");
  }
  std::ostream &os = a.out.empty() ? std::cout : file;
  std::vector<double> xs, ys;
  if (a.family == "planar") {
    os << "family,k,rep,seed,n,m,reduced_n,verdict,maxleaf,exact,ratio,millis\n";
    std::vector<LobSizeRow> rows;
    for (int k = lo; k <= hi; k += step) {
      auto part = lob_size_rows(k, k, a.reps, seed, a.oracle);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    for (const LobSizeRow &r : rows) {
      double x = std::max(1, r.maxleaf);
      os << "planar," << r.k << ',' << r.rep << ',' << seed << ',' << r.n << ',' << r.arcs << ','
         << r.reduced << ',' << verdict_name(r.verdict) << ',' << r.maxleaf << ','
         << (r.exact ? 1 : 0) << ',' << (r.maxleaf >= 0 ? r.reduced / x : 0.0) << ','
         << r.millis << '\n';
      if (r.maxleaf >= 0) {
        xs.push_back(x);
        ys.push_back(r.reduced);
      }
    }
    if (!xs.empty()) {
      LinearFit fit = fit_line(xs, ys);
      std::cerr << "reduced_n ~ " << fit.slope << " * maxleaf + " << fit.intercept
                << "  R^2=" << fit.r2 << '\n';
    }
  } else if (a.family == "degenerate") {
    os << "family,degeneracy,k,rep,seed,n,m,reduced_n,verdict,cover,small,big,crowns,"
          "cover_ok,classes_ok,heavy_ok,millis\n";
    auto rows = iob_size_rows(a.degeneracy, lo, hi, step, a.reps, seed);
    bool cover_ok = true;
    for (const IobSizeRow &r : rows) {
      os << "degenerate," << r.degeneracy << ',' << r.k << ',' << r.rep << ',' << seed << ','
         << r.n << ',' << r.arcs << ',' << r.reduced << ',' << verdict_name(r.verdict) << ','
         << r.cover << ',' << r.small << ',' << r.big << ',' << r.crowns << ','
         << (r.cover_ok ? 1 : 0) << ',' << (r.classes_ok ? 1 : 0) << ',' << (r.heavy_ok ? 1 : 0)
         << ',' << r.millis << '\n';
      cover_ok = cover_ok && r.cover_ok;
      if (r.verdict == Verdict::reduced) {
        xs.push_back(r.k);
        ys.push_back(r.reduced);
      }
    }
    if (!xs.empty()) {
      LinearFit fit = fit_line(xs, ys);
      std::cerr << "reduced_n ~ " << fit.slope << " * k + " << fit.intercept
                << "  R^2=" << fit.r2 << (cover_ok ? "" : "  (cover bound violated)") << '\n';
    }
  } else {
    throw InputError("bench family must be planar or degenerate");
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Kernels and exact solvers for rooted leaf / internal out-branching problems"};
  app.require_subcommand(1);

  ReduceArgs ra;
  auto *reduce = app.add_subcommand("reduce", "Apply the leaf reduction rules and certificates");
  reduce->add_option("file", ra.file, "instance file")->required();
  reduce->add_option("--accept-constant", ra.accept_constant,
                     "answer yes when the reduced instance has more than c*k vertices");
  reduce->add_option("--k", ra.k, "override k from the file");
  reduce->add_flag("--json", ra.json, "print a JSON report");
  reduce->add_option("--dot", ra.dot, "write the reduced graph as Graphviz");
  reduce->add_option("--out", ra.out, "write the reduced instance");
  reduce->add_option("--trace", ra.trace, "write the rule trace");
  reduce->add_option("--solve-max-n", ra.solve_max_n,
                     "decide exactly when the reduced instance has at most this many vertices");

  KernelizeArgs ka;
  auto *kernelize = app.add_subcommand("kernelize", "Run the internal out-branching kernel");
  kernelize->add_option("file", ka.file, "instance file")->required();
  kernelize->add_option("--threshold", ka.threshold, "degree threshold (default 2*degeneracy)");
  kernelize->add_option("--k", ka.k, "override k from the file");
  kernelize->add_flag("--json", ka.json, "print a JSON report");
  kernelize->add_option("--out", ka.out, "write the reduced instance");
  kernelize->add_option("--trace", ka.trace, "write the crown trace");
  kernelize->add_option("--dot", ka.dot, "write the reduced graph as Graphviz");

  SolveArgs sa;
  auto *solve = app.add_subcommand("solve", "Exact optimum by branch-and-bound");
  solve->add_option("file", sa.file, "instance file")->required();
  solve->add_option("--mode", sa.mode, "leaf, internal or auto (from the file)")
      ->check(CLI::IsMember({"leaf", "internal", "auto"}));
  solve->add_option("--budget", sa.budget, "time budget in seconds");
  solve->add_flag("--json", sa.json, "print a JSON report");

  VerifyArgs va;
  auto *verify = app.add_subcommand("verify", "Run property suites against the oracles");
  verify->add_option("--trials", va.trials, "trials per suite (0: suite default)");
  verify->add_option("--max-n", va.max_n, "largest instance (0: suite default)");
  verify->add_option("--seed", va.seed, "seed (default: SPARSE_OUTBRANCH_SEED or 1)");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", va.suite, "suite name or all")->check(CLI::IsMember(suites));
  verify->add_flag("--json", va.json, "print a JSON report");

  GenArgs ga;
  auto *gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("family", ga.family,
                  "path, star, bipath-chain, planar, subdivided, degenerate or random")
      ->required()
      ->check(CLI::IsMember(
          {"path", "star", "bipath-chain", "planar", "subdivided", "degenerate", "random"}));
  gen->add_option("--problem", ga.problem, "lob or iob")->check(CLI::IsMember({"lob", "iob"}));
  gen->add_option("--n", ga.n, "size (vertices, leaves, path length or skeleton size)");
  gen->add_option("--k", ga.k, "k written to the header");
  gen->add_option("--seed", ga.seed, "seed (default: SPARSE_OUTBRANCH_SEED or 1)");
  gen->add_option("--out", ga.out, "output file (default stdout)");
  gen->add_option("--arc-prob", ga.arc_prob, "random: extra arc probability");
  gen->add_option("--keep", ga.keep, "planar: edge keep probability");
  gen->add_option("--bidirect", ga.bidirect, "planar: probability an edge gets both arcs");
  gen->add_option("--core", ga.core, "degenerate: core vertices");
  gen->add_option("--pendants", ga.pendants, "degenerate: pendant vertices");
  gen->add_option("--degeneracy", ga.degeneracy, "degenerate: degeneracy");
  gen->add_option("--pool", ga.pool, "degenerate: distinct pendant neighbourhoods");
  gen->add_option("--back", ga.back, "degenerate: back-arc probability");
  gen->add_option("--cycles", ga.cycles, "subdivided: extra skeleton edges");
  gen->add_option("--max-subdivision", ga.max_subdivision, "subdivided: inner vertices per edge");

  BenchArgs ba;
  auto *bench = app.add_subcommand("bench", "Kernel size against k as CSV");
  bench->add_option("--family", ba.family, "planar or degenerate")
      ->check(CLI::IsMember({"planar", "degenerate"}));
  bench->add_option("--k-range", ba.k_range, "lo:hi[:step]");
  bench->add_option("--reps", ba.reps, "instances per k");
  bench->add_option("--seed", ba.seed, "seed (default: SPARSE_OUTBRANCH_SEED or 1)");
  bench->add_option("--out", ba.out, "CSV file (default stdout)");
  bench->add_option("--degeneracy", ba.degeneracy, "degenerate family: degeneracy");
  bench->add_flag("!--no-oracle", ba.oracle, "planar family: skip the exact maxleaf column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*reduce)
      return cmd_reduce(ra);
    if (*kernelize)
      return cmd_kernelize(ka);
    if (*solve)
      return cmd_solve(sa);
    if (*verify)
      return cmd_verify(va);
    if (*gen)
      return cmd_gen(ga);
    if (*bench)
      return cmd_bench(ba);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
