#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace outbranch {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

struct Arc {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;

  friend auto operator<=>(const Arc &, const Arc &) = default;
};

// Malformed input: bad ids, loops, duplicate arcs, unparsable files.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on a value that does not satisfy its guard.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Simple digraph with a designated root of in-degree 0. Immutable once built;
// adjacency lists are kept sorted so membership tests are binary searches.
class RootedDigraph {
public:
  // Single root vertex, no arcs.
  RootedDigraph();

  // Strict construction: throws InputError on out-of-range ids, loops,
  // duplicate arcs or an arc entering the root.
  RootedDigraph(VertexId n, VertexId root, std::span<const Arc> arcs);

  // Drops loops and duplicates instead of rejecting them. An arc into the
  // root is still an error.
  static RootedDigraph simplified(VertexId n, VertexId root,
                                  std::span<const Arc> arcs);

  VertexId size() const { return static_cast<VertexId>(out_.size()); }
  VertexId root() const { return root_; }
  std::size_t arc_count() const { return arc_count_; }
  bool valid(VertexId v) const { return v >= 0 && v < size(); }

  std::span<const VertexId> out(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in(VertexId v) const { return in_[v]; }
  int out_degree(VertexId v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(VertexId v) const { return static_cast<int>(in_[v].size()); }

  bool has_arc(VertexId tail, VertexId head) const;
  bool has_arc(Arc a) const { return has_arc(a.tail, a.head); }

  // All arcs in (tail, head) order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const RootedDigraph &, const RootedDigraph &) = default;

private:
  struct Unchecked {};
  RootedDigraph(Unchecked, VertexId n, VertexId root, std::vector<Arc> arcs);

  VertexId root_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
};

// Result of a graph surgery. old_to_new maps every vertex of the input to its
// id in `graph`, or kNoVertex when the vertex was removed.
struct Surgery {
  RootedDigraph graph;
  std::vector<VertexId> old_to_new;
};

// Identifies the endpoints of `a` into one vertex, dropping loops and parallel
// arcs. The merged vertex takes the smaller of the two ids; ids above the
// larger one shift down by one. If the root is an endpoint the merged vertex
// is the root.
Surgery contract_arc(const RootedDigraph &d, Arc a);

// Removes v and adds (x, y) for every path x -> v -> y with x != y.
Surgery shortcut_vertex(const RootedDigraph &d, VertexId v);

Surgery delete_arc(const RootedDigraph &d, Arc a);

// Induced subgraph on the vertices not listed in `removed`. The root may not
// be removed.
Surgery remove_vertices(const RootedDigraph &d, std::span<const VertexId> removed);

// Composes two id maps: first then second.
std::vector<VertexId> compose_maps(std::span<const VertexId> first,
                                   std::span<const VertexId> second);

// Vertices reachable from `from` by directed paths that avoid the removed
// vertices and arcs. Sorted; always contains `from`.
std::vector<VertexId> reachable(const RootedDigraph &d, VertexId from,
                                std::span<const VertexId> removed_vertices = {},
                                std::span<const Arc> removed_arcs = {});

bool is_connected(const RootedDigraph &d);
std::vector<VertexId> unreachable_vertices(const RootedDigraph &d);

// Vertices v != root whose removal leaves some other vertex unreachable.
std::vector<VertexId> cut_vertices(const RootedDigraph &d);

// Arcs whose removal leaves some vertex unreachable, sorted.
std::vector<Arc> cut_edges(const RootedDigraph &d);

// Cut-edges whose tail emits no other cut-edge. Input must be sorted.
std::vector<Arc> lonely_cut_edges(std::span<const Arc> cut);

// Out-neighbours of u that become unreachable once u is removed; every
// out-neighbour of the root.
std::vector<VertexId> private_neighbors(const RootedDigraph &d, VertexId u);

// Euler bound on the underlying simple graph: false means certainly
// non-planar, true means "not refuted".
bool planarity_witness_check(const RootedDigraph &d);

// Number of edges of the underlying simple undirected graph.
std::size_t undirected_edge_count(const RootedDigraph &d);

} // namespace outbranch
