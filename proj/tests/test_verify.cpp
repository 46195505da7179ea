#include "doctest.h"

#include <vector>

#include "outbranch/oracle.hpp"
#include "outbranch/generators.hpp"
#include "outbranch/verify.hpp"
#include "support/brute_force.hpp"

using namespace outbranch;

TEST_CASE("fit_line") {
  std::vector<double> x = {1, 2, 3, 4};
  std::vector<double> y = {3, 5, 7, 9};
  auto f = fit_line(x, y);
  CHECK(f.slope == doctest::Approx(2));
  CHECK(f.intercept == doctest::Approx(1));
  CHECK(f.r2 == doctest::Approx(1));
  std::vector<double> noisy = {1, 3, 2, 4};
  CHECK(fit_line(x, noisy).r2 < 1);
}

TEST_CASE("every suite passes a small run") {
  for (const auto &name : suite_names()) {
    if (name == "iob-size" || name == "lob-size")
      continue;
    CAPTURE(name);
    auto r = run_suite(name, {20, 0, 17});
    CHECK(r.passed);
    CHECK(r.instances > 0);
    CHECK(r.summary().find(name) != std::string::npos);
  }
  CHECK_THROWS_AS(run_suite("nope", {}), InputError);
}

TEST_CASE("lob size rows") {
  auto rows = lob_size_rows(2, 3, 1, 5, true);
  CHECK(rows.size() == 2);
  for (const auto &r : rows) {
    CHECK(r.reduced <= r.n);
    CHECK(r.exact);
  }
}

TEST_CASE("parent vector tally agrees with the test brute force") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    auto d = gen_random(static_cast<VertexId>(rng.uniform(1, 7)), 0.6 * rng.unit(), rng);
    auto a = parent_vector_tally(d);
    auto b = brute::parent_vectors(d);
    CHECK(a.count == b.count);
    CHECK(a.max_leaves == b.max_leaves);
    CHECK(a.max_internal == b.max_internal);
  }
  CHECK_THROWS_AS(parent_vector_tally(gen_path(10)), PreconditionError);
}
