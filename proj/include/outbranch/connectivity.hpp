#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "outbranch/digraph.hpp"

namespace outbranch {

// Reusable BFS scratch space. Marks are epoch-stamped so consecutive searches
// on the same graph do not pay for clearing.
class ReachWorkspace {
public:
  explicit ReachWorkspace(VertexId n = 0);

  void resize(VertexId n);

  // Blocks a vertex for the next search only.
  void block(VertexId v);

  // BFS from `from`, skipping blocked vertices and the optional arc. Returns
  // the number of vertices reached. A blocked `from` reaches nothing.
  VertexId search(const RootedDigraph &d, VertexId from, const Arc *skip = nullptr);

  // Valid after search() until the next block()/search() pair begins.
  bool reached(VertexId v) const { return seen_[v] == epoch_; }

  // Starts a new round: forgets blocks and marks from the previous round.
  void reset();

private:
  std::uint32_t epoch_ = 1;
  std::vector<std::uint32_t> seen_;
  std::vector<std::uint32_t> blocked_;
  std::vector<VertexId> queue_;
};

// Rooted cut structure of a connected digraph.
struct CutStructure {
  std::vector<char> is_cut_vertex;  // indexed by vertex
  std::vector<Arc> cut_edges;       // sorted

  std::vector<VertexId> cut_vertices() const;
  bool is_cut_edge(Arc a) const;
};

// One removal-BFS per vertex, spread over OpenMP threads. For v != root let
// R_v be the set reachable from the root in D - v: v is a cut-vertex iff
// |R_v| < n - 1, and the in-arcs of v contain a cut-edge iff exactly one
// in-neighbour of v lies in R_v (that arc is then the cut-edge).
// Throws PreconditionError on a disconnected digraph.
CutStructure cut_structure(const RootedDigraph &d);

// Definitional reference: removes every vertex and every arc in turn and
// checks connectivity. Quadratic in m; kept for tests and benchmarking.
CutStructure cut_structure_serial(const RootedDigraph &d);

} // namespace outbranch
