#pragma once

#include <string>
#include <utility>
#include <vector>

#include "outbranch/digraph.hpp"
#include "outbranch/rng.hpp"

namespace outbranch {

// 0 -> 1 -> ... -> n-1, rooted at 0.
RootedDigraph gen_path(VertexId n);

// Root 0 with arcs to 1..leaves.
RootedDigraph gen_star(VertexId leaves);

// Root 0 with arcs to both ends of a bidirected path with `length` edges on
// vertices 1..length+1.
RootedDigraph gen_bipath_chain(VertexId length);

// Random out-arborescence from root 0 plus every other non-root-entering arc
// independently with probability arc_prob.
RootedDigraph gen_random(VertexId n, double arc_prob, Rng &rng);

// Plane triangulation of random grid points, built by a lexicographic sweep
// that joins each new point to every hull vertex it strictly sees. Returns
// undirected edges (u < v) over vertices 0..n-1 in sweep order.
std::vector<std::pair<VertexId, VertexId>> sweep_triangulation(VertexId n, Rng &rng);

struct PlanarParams {
  VertexId n = 20;
  double keep_prob = 1.0;      // each triangulation edge survives with this probability
  double bidirect_prob = 0.5;  // a surviving edge gets both arcs, else one random direction
};

// Oriented planar graph rooted at a random vertex. A BFS tree of the
// undirected graph is forced into the arc set, oriented away from the root,
// so every vertex is reachable; arcs entering the root are dropped.
RootedDigraph gen_planar(const PlanarParams &p, Rng &rng);

struct SubdividedParams {
  VertexId skeleton = 6;     // vertices of the planar skeleton
  VertexId cycles = 2;       // skeleton edges kept beyond a spanning tree
  VertexId max_subdivision = 6;  // each skeleton edge becomes a path with 0..this many inner vertices
};

// Planar skeleton (spanning tree of a triangulation plus `cycles` extra
// edges) whose edges are subdivided into bidirected paths; rooted at skeleton
// vertex 0 with its in-arcs dropped. Few leaves, lots of bipaths.
RootedDigraph gen_subdivided_planar(const SubdividedParams &p, Rng &rng);

struct DegenerateParams {
  VertexId core = 8;        // vertices 0..core-1, root 0
  VertexId pendants = 40;   // vertices core..core+pendants-1
  int degeneracy = 2;       // each vertex has at most this many earlier neighbours
  int pool = 4;             // distinct pendant neighbourhoods to draw from
  double back_prob = 0.3;   // chance of an arc from a pendant back into its neighbour
};

// Core built as a random arborescence with a few extra arcs to earlier
// vertices; pendants attach to neighbourhoods drawn from a small pool, which
// produces large twin classes. The underlying graph is `degeneracy`-degenerate.
RootedDigraph gen_degenerate(const DegenerateParams &p, Rng &rng);

} // namespace outbranch
