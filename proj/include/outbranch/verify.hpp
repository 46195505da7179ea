#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "outbranch/out_branching.hpp"

namespace outbranch {

struct SuiteOptions {
  int trials = 0;        // 0: the suite's default
  VertexId max_n = 0;    // 0: the suite's default
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  long long instances = 0;
  long long checks = 0;
  long long violations = 0;
  std::vector<std::string> failures;         // first few, for diagnostics
  std::map<std::string, double> metrics;     // suite-specific numbers
  bool passed = false;

  std::string summary() const;
};

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

// Least squares y = slope*x + intercept. r2 is 1 when y is constant and
// fitted exactly.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

// Every firing of Rules 2-6 on random connected digraphs keeps maxleaf.
SuiteResult verify_rules(const SuiteOptions &o);
// maxleaf >= ceil(sp/60), ceil(iso/180), slaves on reduced planar instances,
// and no certificate says yes for k = maxleaf + 1.
SuiteResult verify_bounds(const SuiteOptions &o);
// Structural lemmas on the same reduced planar corpus.
SuiteResult verify_structure(const SuiteOptions &o);
// vc_or_solution: witness with >= k internal vertices, or a cover of size
// <= 2k-1 containing the root.
SuiteResult verify_local_search(const SuiteOptions &o);
// Crown validity and answer preservation for the run's k on n <= 9.
SuiteResult verify_crown(const SuiteOptions &o);
// IOB kernel size on degenerate families, d in {2,3}.
SuiteResult verify_iob_size(const SuiteOptions &o);
// LOB reduced size against oracle maxleaf on subdivided planar instances.
SuiteResult verify_lob_size(const SuiteOptions &o);
// Heavy degree sum and neighbourhood class counts on planar graphs, p = 3.
SuiteResult verify_counting(const SuiteOptions &o);
// Enumeration vs parent vectors (n <= 7), branch-and-bound vs enumeration (n <= 9).
SuiteResult verify_oracle(const SuiteOptions &o);
// Kernel-then-solve answers equal solve-alone answers for both problems.
SuiteResult verify_pipeline(const SuiteOptions &o);

std::vector<std::string> suite_names();
// Throws InputError on an unknown name.
SuiteResult run_suite(const std::string &name, const SuiteOptions &o);

struct LobSizeRow {
  int k = 0;
  int rep = 0;
  VertexId n = 0;
  std::size_t arcs = 0;
  VertexId reduced = 0;
  Verdict verdict = Verdict::reduced;
  int maxleaf = -1;       // oracle value on the reduced instance
  bool exact = false;
  double millis = 0;      // reduction time
};

// Subdivided planar instances sized by k, reduced with budget k.
std::vector<LobSizeRow> lob_size_rows(int k_lo, int k_hi, int reps, std::uint64_t seed,
                                      bool with_oracle = true);

struct IobSizeRow {
  int degeneracy = 0;
  int k = 0;
  int rep = 0;
  VertexId n = 0;
  std::size_t arcs = 0;
  VertexId reduced = 0;
  Verdict verdict = Verdict::reduced;
  std::size_t cover = 0;
  std::size_t small = 0;
  std::size_t big = 0;
  std::size_t crowns = 0;
  bool cover_ok = true;
  bool classes_ok = true;
  bool heavy_ok = true;
  double millis = 0;
};

std::vector<IobSizeRow> iob_size_rows(int degeneracy, int k_lo, int k_hi, int k_step, int reps,
                                      std::uint64_t seed);

} // namespace outbranch
