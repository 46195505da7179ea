#include "doctest.h"

#include <sstream>
#include <string>

#include "outbranch/generators.hpp"
#include "outbranch/instance_io.hpp"
#include "support/graphs.hpp"

using namespace outbranch;
using testing_graphs::make;

namespace {

std::string error_of(const std::string &text) {
  try {
    parse_instance_string(text);
  } catch (const InputError &e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_CASE("parse a small instance") {
  auto f = parse_instance_string("c hello\np lob 3 2 0 2\na 0 1\na 0 2\n");
  CHECK(f.problem == Problem::lob);
  CHECK(f.k == 2);
  CHECK(f.graph == make(3, {{0, 1}, {0, 2}}));
  REQUIRE(f.comments.size() == 1);
  CHECK(f.comments[0] == "hello");
  CHECK(f.warnings.empty());
}

TEST_CASE("round trip through text") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    InstanceFile f;
    f.problem = t % 2 ? Problem::iob : Problem::lob;
    f.graph = gen_random(static_cast<VertexId>(rng.uniform(1, 12)), 0.3, rng);
    f.k = static_cast<int>(rng.uniform(1, 6));
    f.comments = {"trial " + std::to_string(t)};
    auto text = instance_to_string(f);
    auto g = parse_instance_string(text);
    CHECK(g == f);
    CHECK(g.comments == f.comments);
    CHECK(instance_to_string(g) == text);
  }
}

TEST_CASE("malformed input names the line") {
  CHECK(error_of("p lob 2 1 0 1\na 0 x\n").find("line 2") != std::string::npos);
  CHECK(error_of("a 0 1\n").find("line 1") != std::string::npos);
  CHECK(error_of("p lob 2 1 0 1\np lob 2 1 0 1\n").find("line 2") != std::string::npos);
  CHECK(error_of("p lob 2 1 0 1\na 0 5\n").find("line 2") != std::string::npos);
  CHECK(error_of("p lob 2 1 0 1\na 1 1\n").find("line 2") != std::string::npos);
  CHECK(error_of("p lob 2 2 0 1\na 0 1\na 0 1\n").find("line 3") != std::string::npos);
  CHECK(error_of("p lob 3 1 0 1\na 0 1\na 0 2\n") != "");
  CHECK(error_of("p lob 3 2 0 1\na 0 1\n") != "");
  CHECK(error_of("p xyz 2 1 0 1\na 0 1\n") != "");
  CHECK(error_of("c only comments\n") != "");
  CHECK(error_of("p lob 2 2 0 1\na 0 1\na 1 0\n").find("line 3") != std::string::npos);
}

TEST_CASE("iob drops arcs into the root with a warning") {
  auto f = parse_instance_string("p iob 2 2 0 1\na 0 1\na 1 0\n");
  CHECK(f.graph == make(2, {{0, 1}}));
  CHECK(f.warnings.size() == 1);
}

TEST_CASE("dot export") {
  auto dot = to_dot(make(3, {{0, 1}, {1, 2}}));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("0 -> 1") != std::string::npos);
  CHECK(dot.find("1 -> 2") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
}
