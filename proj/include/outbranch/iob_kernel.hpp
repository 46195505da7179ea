#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "outbranch/digraph.hpp"
#include "outbranch/out_branching.hpp"

namespace outbranch {

// k-Internal Out-Branching instance: is there an out-branching with >= k
// internal vertices?
struct IobInstance {
  RootedDigraph graph;
  int k = 0;
};

// Every arc has an endpoint in `cover`.
bool is_vertex_cover(const RootedDigraph &d, std::span<const VertexId> cover);

struct VcOrSolution {
  OutBranching tree;                // after local search
  std::optional<OutBranching> solution;  // set when tree has >= k internal vertices
  std::vector<VertexId> cover;      // otherwise: internal ∪ blocked heads ∪ root, sorted
  int moves = 0;                    // re-hang steps performed
};

// BFS out-branching improved by re-hanging: while some arc (u, v) joins two
// leaves and parent(v) has another child, make v a child of u. Either the
// result has >= k internal vertices, or the internal vertices together with
// the heads of the remaining leaf-to-leaf arcs (and the root) cover every arc.
// Throws PreconditionError if some vertex is unreachable.
VcOrSolution vc_or_solution(const IobInstance &inst);

// Undirected bipartite graph B_{D,U}. Left side: unit vertices x ∈ U with an
// arc into W, and ordered pairs xy over U (x = y allowed) joined to w when
// x -> w -> y; pairs with no neighbour are not materialised. Right side: W.
struct AuxiliaryBipartite {
  struct LeftVertex {
    VertexId x = kNoVertex;
    VertexId y = kNoVertex;  // kNoVertex for a unit vertex
  };
  std::vector<VertexId> cover;             // U, sorted
  std::vector<VertexId> right;             // W, sorted
  std::vector<LeftVertex> left;
  std::vector<std::vector<int>> right_adj; // right index -> left indices, sorted
  std::vector<std::vector<int>> left_adj;  // left index -> right indices, sorted

  std::string left_name(int i) const;
};

// Throws PreconditionError if U is not a vertex cover.
AuxiliaryBipartite build_aux_graph(const RootedDigraph &d, std::span<const VertexId> U);

// Crown (C = C_m ⊎ C_u, H, R) of B with C on the right side; R is everything
// else. Indices refer to AuxiliaryBipartite::right / ::left.
struct CrownDecomposition {
  std::vector<int> crown_matched;    // C_m
  std::vector<int> crown_unmatched;  // C_u
  std::vector<int> head;             // H
  std::vector<std::pair<int, int>> matching;  // (C_m vertex, H vertex)
};

// Empty when the crown is valid: no C-R edges, the matching pairs C_m with H
// perfectly along edges of B, parts disjoint, C_u nonempty.
std::vector<std::string> crown_defects(const AuxiliaryBipartite &b, const CrownDecomposition &c);

// Crown inside B[N_B[I]] for a set I of right vertices with |I| > 2|N_B(I)|:
// maximum matching by augmenting paths, then C = right vertices reachable by
// alternating paths from unmatched vertices of I, H = N_B(C).
// Throws PreconditionError when |I| <= 2|N_B(I)|.
CrownDecomposition crown_in_class(const AuxiliaryBipartite &b, std::span<const int> I);

struct CrownRemoval {
  IobInstance instance;
  std::vector<VertexId> old_to_new;
  std::vector<VertexId> removed;  // D ids before removal, sorted
};

// Removes C_u from D. Throws PreconditionError on an invalid crown.
CrownRemoval apply_crown_rule(const IobInstance &inst, const AuxiliaryBipartite &b,
                              const CrownDecomposition &c);

struct CrownStep {
  std::vector<VertexId> neighbourhood;  // class key N, original ids
  std::vector<VertexId> removed;        // original ids
};

struct IobTrace {
  std::vector<CrownStep> steps;

  // One line per step: CROWN class=<ids> removed=<ids>
  std::string to_text() const;
};

struct IobClassRecord {
  std::vector<VertexId> neighbourhood;  // current ids
  std::size_t members = 0;              // |W_N|
  std::size_t head_side = 0;            // |N_B(W_N)|
  bool within_bound = true;             // |W_N| <= 2(|N|^2 + |N|)
};

// Final-round statistics of the 4-step loop.
struct IobReport {
  int threshold = 0;  // τ
  std::size_t cover = 0;
  std::size_t small = 0;  // |W_s|
  std::size_t big = 0;    // |W_b|
  std::vector<IobClassRecord> classes;
  long long heavy_sum = 0;    // Σ deg(w) over w ∈ W with deg > τ
  long long heavy_bound = 0;  // τ|U|
  bool cover_within_bound = true;  // |U| <= 2k - 1
  int rounds = 0;
};

// One pass of steps 1-3 on a connected instance.
struct IobRound {
  enum class Kind { solved, crown, fixpoint };
  Kind kind = Kind::fixpoint;
  VcOrSolution search;
  AuxiliaryBipartite aux;               // empty when solved
  std::vector<VertexId> neighbourhood;  // class that fired
  CrownDecomposition crown;
  std::optional<CrownRemoval> removal;  // set when kind == crown
  IobReport report;                     // class statistics seen this round
};

// Twice the degeneracy of the underlying graph.
int default_threshold(const RootedDigraph &d);

// Classes are tried in increasing key order; the first with
// |W_N| > 2|N_B(W_N)| fires. Throws PreconditionError if d is disconnected.
IobRound iob_round(const IobInstance &inst, int threshold);

struct IobKernelResult {
  KernelOutcome outcome;   // witness refers to the input instance
  IobTrace trace;
  IobReport report;
  std::vector<VertexId> current_to_original;  // reduced id -> input id
};

// Steps 1-4 with restart after every crown removal. threshold τ defaults to
// twice the degeneracy of the input's underlying graph.
IobKernelResult kernelize_iob(const IobInstance &inst, std::optional<int> threshold = std::nullopt);

// Extends a branching of an induced subgraph obtained by crown removals back
// to the input, attaching removed vertices in reverse removal order below
// any in-neighbour already placed. Internal count does not drop.
OutBranching lift_branching(const RootedDigraph &original, const OutBranching &reduced,
                            std::span<const VertexId> current_to_original,
                            std::span<const VertexId> removal_order);

} // namespace outbranch
