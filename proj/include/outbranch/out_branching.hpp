#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outbranch/digraph.hpp"

namespace outbranch {

// Spanning out-tree given by parent pointers; parent[root] == kNoVertex.
struct OutBranching {
  VertexId root = 0;
  std::vector<VertexId> parent;

  VertexId size() const { return static_cast<VertexId>(parent.size()); }
  std::vector<int> child_counts() const;
  int leaf_count() const;
  int internal_count() const { return size() - leaf_count(); }
  std::vector<VertexId> internal_vertices() const;
  std::vector<VertexId> leaves() const;
};

// Empty string when `t` is a spanning out-branching of d rooted at d.root(),
// otherwise a description of the first defect found.
std::string branching_defect(const RootedDigraph &d, const OutBranching &t);

// BFS tree from the root; requires every vertex to be reachable.
OutBranching bfs_branching(const RootedDigraph &d);

enum class Verdict { reduced, yes, no };

const char *verdict_name(Verdict v);

// Result of either kernelization pipeline.
struct KernelOutcome {
  Verdict verdict = Verdict::reduced;
  RootedDigraph graph;  // the reduced instance when verdict == reduced
  int k = 0;
  std::string reason;
  std::optional<OutBranching> witness;
};

} // namespace outbranch
