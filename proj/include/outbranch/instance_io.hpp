#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "outbranch/digraph.hpp"
#include "outbranch/lob_analyzer.hpp"

namespace outbranch {

enum class Problem { lob, iob };

const char *problem_name(Problem p);

// Text format:
//   c <comment>
//   p <lob|iob> <n> <m> <root> <k>
//   a <u> <v>      (m lines, 0-based ids)
struct InstanceFile {
  Problem problem = Problem::lob;
  RootedDigraph graph;
  int k = 0;
  std::vector<std::string> comments;  // without the leading "c "
  std::vector<std::string> warnings;  // filled by the parser

  friend bool operator==(const InstanceFile &a, const InstanceFile &b) {
    return a.problem == b.problem && a.graph == b.graph && a.k == b.k;
  }
};

// Throws InputError "line N: ..." on malformed input. For iob instances arcs
// entering the root are dropped with a warning; for lob they are an error.
InstanceFile parse_instance(std::istream &in);
InstanceFile parse_instance_string(const std::string &text);
InstanceFile load_instance(const std::string &path);

// Comments first, then the header, then arcs in (tail, head) order.
void write_instance(std::ostream &out, const InstanceFile &f);
std::string instance_to_string(const InstanceFile &f);
void save_instance(const std::string &path, const InstanceFile &f);

// Graphviz digraph. With an analysis, special vertices, isolated bags and
// hard bipath internals are coloured (by D vertex).
std::string to_dot(const RootedDigraph &d, const LobAnalysis *analysis = nullptr);

} // namespace outbranch
